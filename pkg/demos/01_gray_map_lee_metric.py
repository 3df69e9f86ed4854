#!/usr/bin/env python3
"""Walkthrough: Z4 arithmetic, the Lee metric, and the Gray isometry.

A quaternary word lives in Z4^n.  Its Lee weight charges 0/1/2/1 for the
symbols 0/1/2/3, and the Gray map phi(x) = (beta(x), gamma(x)) embeds
Z4^n into Z2^(2n) so that Lee distance becomes Hamming distance.
"""

import random

from z4rm import (
    BitWord,
    Z4Word,
    add,
    alpha,
    beta,
    gamma,
    gray,
    gray_inverse,
    hamming_distance,
    lee_distance,
    lee_weight,
    negate,
)

print("== arithmetic mod 4 ==")
x = Z4Word.from_string("1023")
y = Z4Word.from_string("3211")
print(f"x       = {x.digits()}")
print(f"y       = {y.digits()}")
print(f"x + y   = {add(x, y).digits()}")
print(f"-x      = {negate(x).digits()}   (x + -x = {add(x, negate(x)).digits()})")

print()
print("== the per-symbol maps ==")
print("s      ", *range(4))
print("alpha  ", *alpha(Z4Word(range(4))))
print("beta   ", *beta(Z4Word(range(4))))
print("gamma  ", *gamma(Z4Word(range(4))))
print("w_L    ", *(lee_weight(Z4Word([s])) for s in range(4)))

print()
print("== the Gray map: beta block then gamma block ==")
for digits in ("00", "22", "13", "1023"):
    w = Z4Word.from_string(digits)
    img = gray(w)
    print(f"gray({digits}) = {img.digits()}   (Lee weight {lee_weight(w)}"
          f" = Hamming weight {img.weight()})")
print(f"gray_inverse(0110) = {gray_inverse(BitWord.from_string('0110')).digits()}")

print()
print("== isometry: Lee distance equals Hamming distance of the images ==")
rng = random.Random(1)
for n in (1, 4, 16, 64):
    pairs = 2000
    bad = 0
    for _ in range(pairs):
        u = Z4Word([rng.randrange(4) for _ in range(n)])
        v = Z4Word([rng.randrange(4) for _ in range(n)])
        if lee_distance(u, v) != hamming_distance(gray(u), gray(v)):
            bad += 1
    print(f"n={n:3d}: {pairs} random pairs, {bad} violations")
