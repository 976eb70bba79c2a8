"""Closed forms for darga-4 and darga-5 numbers in trim sigma coordinates.

Both come from the halved-discriminant route, which at these sizes reduces
to a quadratic in alpha: the circle number is the largest of the two
endpoint candidates and (when real) the quadratic's larger root.  These
formulas describe generic rays; cn and be are discontinuous where the
root term appears or disappears (|b| = sqrt(2) c for darga 4, the golden
ratios of c for darga 5).
"""

from __future__ import annotations

import mpmath

from .polycore import as_mpf
from .precision import working_precision


def darga4_numbers(b, c):
    """(il, cn, be) for p = b(x + x^3) + 2c x^2, generic ray."""
    with working_precision():
        b, c = as_mpf(b), as_mpf(c)
        il = max(-b - c, c, b - c)
        cands = [-b - c, b - c]
        disc = c * c - b * b / 2
        if disc >= 0:
            cands.append((c + mpmath.sqrt(disc)) / 2)
        cn = max(cands)
        return il, cn, il / cn - 1


def darga5_numbers(b, c):
    """(il, cn, be) for p = b(x + x^4) + c(x^2 + x^3), generic ray."""
    with working_precision():
        b, c = as_mpf(b), as_mpf(c)
        s5 = mpmath.sqrt(5)
        il = max(-b - c,
                 ((b + c) + s5 * (c - b)) / 4,
                 ((b + c) + s5 * (b - c)) / 4)
        cands = [-b - c, (3 * b - c) / 5]
        disc = c * c - b * c - b * b
        if disc >= 0:
            cands.append((2 * c - b + 2 * mpmath.sqrt(disc)) / 5)
        cn = max(cands)
        return il, cn, il / cn - 1
