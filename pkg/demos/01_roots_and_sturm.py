"""Certified real roots of binary forms.

Parses a few forms, counts their real projective roots with Sturm sequences,
and refines the isolating intervals.
"""
from fractions import Fraction

from realforms import (
    count_projective_real_roots,
    discriminant_form,
    isolate_real_roots,
    parse_form,
    resultant_gradient,
)

for text in ["x^2*y + x*y^2", "x^3 + y^3", "x^3 - 3*x*y^2", "x^4 - 5*x^2*y^2 + 4*y^4"]:
    f = parse_form(text)
    rc = count_projective_real_roots(f)
    print(f"{text:28s} real roots {rc.distinct_real_projective} of {f.degree}"
          f"  (infinity: {rc.has_root_at_infinity})  disc {discriminant_form(f)}")

# intervals are half-open (lo, hi]; refine until each is narrower than 1e-12
f = parse_form("x^3 - 3*x*y^2")
iso = isolate_real_roots(f).refine(Fraction(1, 10 ** 12))
for lo, hi in iso.intervals:
    print(f"  root of x^3 - 3x near {float((lo + hi) / 2): .12f}")

# the gradient resultant vanishes exactly on forms with a repeated root
for text in ["(x - 2*y)^2*(x + y)", "(x - 2*y)*(x + y)*x"]:
    print(f"Res(f_x, f_y) for {text}: {resultant_gradient(parse_form(text))}")
