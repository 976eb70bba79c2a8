#!/usr/bin/env python3
"""Watching roots move as alpha sweeps the line.

Between the real roots of the subdiscriminants, the number of unit-circle
roots of the reduced family is constant; the sweep partitions the alpha
line into intervals with a definite circle-rooted verdict.  The region of
circle-rootedness need not be one interval: a product of quadratics whose
roots all have negative real part is circle rooted at an isolated early
parameter, loses the property, and regains it for good at the circle
number.
"""

from fractions import Fraction

import mpmath

from palinlace import alpha_profile, circle_number, make_polynomial, root_trajectories
from palinlace.families import two_interval


def show(interval):
    lo = "-inf" if interval.lo is None else str(interval.lo)
    hi = "+inf" if interval.hi is None else str(interval.hi)
    kind = "point" if interval.is_point else "open"
    return (f"{kind:>5} ({float(interval.lo) if interval.lo is not None else '-inf'}"
            f" .. {float(interval.hi) if interval.hi is not None else '+inf'}):"
            f" {interval.real_root_count} circle roots,"
            f" circle rooted: {interval.circle_rooted}")


print("== the simplest sweep: p = -2x ==")
p = make_polynomial([-2], offset=1)
for iv in alpha_profile(p).intervals:
    print("  " + show(iv))
print("trajectories through the collision at alpha = 1:")
for alpha, roots in root_trajectories(p, [mpmath.mpf(x) for x in ("0.5", "1", "2")]):
    pretty = ", ".join(mpmath.nstr(z, 6) for z in roots)
    print(f"  alpha = {alpha}: {pretty}")

print("\n== a sweep with a gap in the circle-rooted set ==")
q = two_interval([(5, 1), (5, 1), (5, 1)])
prof = alpha_profile(q)
pos = prof.circle_rooted_intervals(positive_only=True)
print(f"positive circle-rooted pieces: {len(pos)}")
for iv in pos:
    print("  " + show(iv))
cn = circle_number(q)
print(f"circle number: {mpmath.nstr(mpmath.mpf(str(float(cn.value))), 12)} "
      "(the last piece starts exactly there)")
