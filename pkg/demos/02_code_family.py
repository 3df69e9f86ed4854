#!/usr/bin/env python3
"""Walkthrough: building the LRM(r,m) family by Plotkin doubling.

The family starts from a repetition code (r=0) and the full space (r=m)
and doubles its way up: LRM(r,m) = {(x, x+y)} over x in LRM(r,m-1) and
y in LRM(r-1,m-1).  Every member has quaternary length 2^(m-1); its Gray
image has the parameters of the binary Reed-Muller code RM(r,m).
"""

from z4rm import enumerate_codewords, gray, lrm, plotkin, render_code, rm_binary

print("== trivial members, m=1 and m=2 ==")
for r, m in [(0, 1), (1, 1), (0, 2), (1, 2), (2, 2)]:
    c = lrm(r, m)
    words = [w.digits() for w in enumerate_codewords(c.standard_form)]
    print(f"LRM({r},{m}) = {{{', '.join(words)}}}")
    images = [gray(w).digits() for w in enumerate_codewords(c.standard_form)]
    print(f"  Gray image: {{{', '.join(sorted(images))}}}")

print()
print("== doubling by hand reproduces LRM(1,2) ==")
doubled = plotkin(lrm(1, 1), lrm(0, 1))
print("plotkin(LRM(1,1), LRM(0,1)) enumerates to:",
      sorted(w.digits() for w in enumerate_codewords(doubled.standard_form)))

print()
print("== the construction trace lives in the label ==")
print(lrm(2, 3).label)

print()
print("== generator matrices, serialized ==")
print(render_code(lrm(1, 3)), end="")

print()
print("== the binary Reed-Muller reference ==")
print("RM(1,3) generator rows (monomials of degree <= 1 on Z2^3):")
for row in rm_binary(1, 3):
    print(" ", row.digits())
