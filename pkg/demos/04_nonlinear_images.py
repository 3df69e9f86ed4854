#!/usr/bin/env python3
"""Walkthrough: nonlinear Gray images and the size argument against QRM.

A quaternary linear code can have a Gray image that is not closed under
XOR; such images are binary nonlinear codes that still carry Reed-Muller
parameters.  Substituting one as a recursion node spreads nonlinearity
through the family without breaking a single claimed parameter.
"""

from z4rm import (
    CodeParams,
    GeneratorMatrix,
    Z4Code,
    gray,
    enumerate_codewords,
    image_is_linear,
    image_is_linear_bruteforce,
    lrm,
    nonequivalence_report,
    search_nonlinear_base,
    shipped_nonlinear_base,
    verify_theorem1,
)
from z4rm.reports import nonequivalence_line

print("== a 16-word code whose image is not XOR-closed ==")
witness = Z4Code(GeneratorMatrix.from_strings(["1013", "0112"]))
print("generators: 1013, 0112")
print("generator criterion:", image_is_linear(witness))
print("exhaustive oracle:  ", image_is_linear_bruteforce(witness))
images = sorted(gray(w).digits() for w in enumerate_codewords(witness.standard_form))
print("images:", " ".join(images))

print()
print("== searching for nonlinear-image codes with given parameters ==")
print("target (n=2, k=3, d=2):", search_nonlinear_base(CodeParams(2, 3, 2), 2) or "none exist")
found = search_nonlinear_base(CodeParams(4, 4, 3), 4)
print(f"target (n=4, k=4, d=3): {len(found)} codes found, e.g.",
      [w.digits() for w in found[0].generators])

print()
print("== the shipped override: extended-perfect parameters, nonlinear image ==")
ep = shipped_nonlinear_base()
print("rows:", ", ".join(w.digits() for w in ep.generators))
print("image linear?", image_is_linear(ep))

rep = verify_theorem1(2, 4, overrides={(2, 4): ep})
print(f"verify LRM(2,4) with the override: passed={rep.passed}, "
      f"image_linear={rep.image_linear}")
print("trace:", rep.label)

rep = verify_theorem1(3, 5, overrides={(2, 4): ep}, workers=4)
print(f"the override propagates: LRM(3,5) passed={rep.passed}, "
      f"image_linear={rep.image_linear}")

print()
print("== different sizes: LRM(r,m) is never equivalent to QRM(r,m), r<m ==")
for m in (2, 5, 8):
    for r in range(m + 1):
        print(nonequivalence_line(nonequivalence_report(r, m)))
