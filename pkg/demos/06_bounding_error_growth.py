#!/usr/bin/env python3
"""How far apart can the two numbers drift?

The bounding error be(p) = il(p)/cn(p) - 1 measures how much the
interlace number overshoots the circle number.  Per fixed darga it is
bounded (sup sqrt(2) at darga 4, (3 + sqrt 5)/2 at darga 5, above 4 at
darga 6), but along the squared root-of-unity witness family it grows
without bound: the interlace number climbs while the circle number stays
pinned just below one.
"""

import mpmath

from palinlace import circle_number_palindromic, interlace_number
from palinlace.families import be_witness
from palinlace.smalldarga import darga4_numbers, darga5_numbers

mpmath.mp.pretty = True

print("== per-darga landscape on the sigma circle ==")
with mpmath.workprec(128):
    sup4 = max(darga4_numbers(mpmath.cospi(2 * mpmath.mpf(i) / 2000),
                              mpmath.sinpi(2 * mpmath.mpf(i) / 2000))[2]
               for i in range(1, 2000) if i not in (500, 1000, 1500))
    print(f"darga 4 grid sup of be: {mpmath.nstr(sup4, 10)} "
          f"(the unattained limit is sqrt 2 = {mpmath.nstr(mpmath.sqrt(2), 10)})")
    sup5 = max(darga5_numbers(mpmath.cospi(2 * mpmath.mpf(i) / 2000),
                              mpmath.sinpi(2 * mpmath.mpf(i) / 2000))[2]
               for i in range(1, 2000) if i not in (500, 1000, 1500))
    print(f"darga 5 grid sup of be: {mpmath.nstr(sup5, 10)} "
          f"(the limit is (3 + sqrt 5)/2 = {mpmath.nstr((3 + mpmath.sqrt(5)) / 2, 10)})")

print("\n== unbounded growth along the witness family ==")
print(f"{'n':>4} {'il':>12} {'cn':>14} {'be':>10}")
for n in (8, 16, 24, 32):
    p = be_witness(n)
    il = interlace_number(p).value
    cn = circle_number_palindromic(p).value
    with mpmath.workprec(128):
        be = il / mpmath.mpf(str(float(cn))) - 1
        print(f"{n:>4} {mpmath.nstr(il, 8):>12} "
              f"{mpmath.nstr(mpmath.mpf(str(float(cn))), 10):>14} "
              f"{mpmath.nstr(be, 6):>10}")
print("\n(the circle number creeps toward one from below; the squared")
print("construction parks every root of the base product on a root of")
print("x^n + 1, so the certificate that would pin cn at exactly one does")
print("not apply -- the growth of be is what survives)")
