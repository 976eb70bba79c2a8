#!/usr/bin/env python3
"""A first walk through interlace numbers.

The family alpha (x^n + 1) + p drags the roots of p onto the unit circle
as alpha grows; the interlace number il(p) is the exact strength at which
they spread into the sectors cut by the n-th roots of unity.  It equals
half the largest value of -p over those roots, which makes it a one-line
computation from the discrete Fourier transform of the coefficients.
"""

from fractions import Fraction

import mpmath

from palinlace import (
    angle_interlaces,
    bound_ladder,
    instantiate,
    interlace_number,
    is_interlace_rational,
    make_polynomial,
    p_alpha,
)
from palinlace.families import geometric

mpmath.mp.pretty = True

print("== the geometric polynomial ==")
ge6 = geometric(6)
res = interlace_number(ge6)
print(f"ge_6 = x + ... + x^5 has interlace number {res.value}")
print(f"certs (indices j of theta_6^j attaining the max): {sorted(res.certs)}")

print("\n== threshold behaviour ==")
family = p_alpha(ge6)
for alpha in (Fraction(2, 5), Fraction(1, 2), Fraction(3, 5)):
    inst = instantiate(family, alpha)
    try:
        verdict = angle_interlaces(inst)
    except Exception:
        verdict = False
    print(f"alpha = {alpha}: strictly angle-interlaces the 6th roots of unity? {verdict}")

print("\n== a polynomial with an exactly rational interlace number ==")
q = make_polynomial([172, 100, 198, 100, 172], offset=1)
ok, value = is_interlace_rational(q)
print(f"172x + 100x^2 + 198x^3 + 100x^4 + 172x^5: rational? {ok}, value = {value}")
print("its bound ladder:")
ladder = bound_ladder(q)
for name in ("ll", "kwon", "kwon_simple", "increasing_upper",
             "ramanujan_lower", "monotonic_lower"):
    print(f"  {name:>18}: {getattr(ladder, name)}")

print("\nswapping two coefficients keeps every multiset-based upper bound")
print("but changes the interlace number:")
q2 = make_polynomial([100, 172, 198, 172, 100], offset=1)
print(f"  swapped polynomial: il = {is_interlace_rational(q2)[1]} "
      f"(kwon bound is still {bound_ladder(q2).kwon})")
