#!/usr/bin/env python3
"""The circle number, computed twice.

cn(p) is the least alpha beyond which alpha (x^n + 1) + p keeps all of its
roots on the unit circle.  It is the largest real root, in alpha, of the
discriminant of the reduced family -- computable exactly for rational
input.  A Cayley substitution at omega = 1 followed by keeping the
even-indexed coefficients halves the discriminant work for palindromic
polynomials; both routes must agree, and exact rational answers like 23/3
survive because the largest root is reconstructed, not just approximated.
"""

from fractions import Fraction

import mpmath

from palinlace import (
    bounding_error,
    circle_number,
    circle_number_palindromic,
    is_exact,
    make_polynomial,
)
from palinlace.families import geometric

mpmath.mp.pretty = True

print("== geometric polynomials ==")
for n in (5, 6, 7, 12):
    a = circle_number(geometric(n))
    b = circle_number_palindromic(geometric(n))
    print(f"ge_{n}: discriminant route {a.value}, halved route {b.value} "
          f"(floor(n/2)/n = {Fraction(n // 2, n)})")

print("\n== an exact answer with a nontrivial denominator ==")
p = make_polynomial([15, 14, 12, 2, 2, 12, 14, 15], offset=1)
res = circle_number(p)
print(f"decreasing-coefficient darga-9 example: cn = {res.value} (exact rational)")
print(f"certs (double roots at the threshold): "
      f"{[mpmath.nstr(z, 8) for z in res.certs]}")

print("\n== exactness: when the interlace number is already sharp ==")
for coeffs, label in [
    ([2, 2], "2x + 2x^2"),
    ([50, 86, 99, 86, 50], "the bounding-error-4 fixture"),
]:
    q = make_polynomial(coeffs, offset=1)
    verdict = is_exact(q)
    be = bounding_error(q)
    print(f"{label}: exact? {verdict.exact} (route {verdict.route}), "
          f"bounding error = {be}")
