#!/usr/bin/env python3
"""A gallery of families with known interlace and circle behaviour."""

from fractions import Fraction

import mpmath

from palinlace import bounding_error, circle_number_palindromic, interlace_number, is_interlace_rational
from palinlace.families import (
    binomial_poly,
    coprime_support,
    euler_phi,
    fekete,
    gcd_poly,
    jordan_totient,
    ly_threshold,
    ramanujan_sum,
)

mpmath.mp.pretty = True

print("== gcd-power polynomials: exactly (n^k - J_k(n)) / 2 ==")
for n, k in [(6, 1), (12, 1), (10, 2), (30, 1)]:
    _, v = is_interlace_rational(gcd_poly(n, k))
    print(f"n={n:>2}, k={k}: il = {v} "
          f"(n^k = {n**k}, J_{k}({n}) = {jordan_totient(k, n)})")

print("\n== coprime-support polynomials: phi(n) / (2(q-1)) ==")
for n in (6, 15, 30, 105):
    _, v = is_interlace_rational(coprime_support(n))
    print(f"n={n:>3}: il = {v} (phi = {euler_phi(n)})")

print("\nRamanujan sums feed those bounds; a small table of c_n(j):")
for n in (6, 12):
    print(f"  c_{n}(j), j=0..{n}: {[ramanujan_sum(n, j) for j in range(n + 1)]}")

print("\n== Fekete polynomials: il = sqrt(n)/2 via the Gauss sum ==")
for n in (5, 13, 17):
    res = interlace_number(fekete(n))
    print(f"n={n:>2}: il = {mpmath.nstr(res.value, 12)} "
          f"(sqrt(n)/2 = {mpmath.nstr(mpmath.sqrt(n) / 2, 12)}), "
          f"certs {sorted(res.certs)}")

print("\n== trimmed binomials: il = 2^(n-1) cos^n(pi/n) + 1 ==")
for n in (4, 6, 10):
    res = interlace_number(binomial_poly(n))
    cn = circle_number_palindromic(binomial_poly(n))
    be = bounding_error(binomial_poly(n))
    print(f"n={n:>2}: il = {mpmath.nstr(res.value, 10)}, "
          f"cn = {mpmath.nstr(mpmath.mpf(str(float(cn.value))), 10)}, "
          f"be = {mpmath.nstr(mpmath.mpf(str(float(be))), 6)}")

print("\n== the subset-product threshold ==")
for n in (4, 6, 8):
    lam = ly_threshold(n)
    print(f"n={n}: entries bounded by {mpmath.nstr(lam, 10)} force the trim "
          "cut polynomial's interlace number under 1")
