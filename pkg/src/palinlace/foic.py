"""The fan of interlace certs as an explicit geometric object.

Trim palindromic polynomials of darga n, in trim sigma coordinates
(sigma_1 .. sigma_m with m = floor(n/2)), are classified by which root of
unity attains their interlace maximum.  The attaining functionals are the
vertices of a simplex; their normal cones tile sigma-space.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd

import mpmath

from .errors import EmptyPolynomial, InternalInconsistency, TooLarge
from .interlace import interlace_number
from .polycore import Polynomial, SigmaRep, as_mpf, sigma_of, scalar_add, scalar_mul
from .precision import at_working_precision, working_precision

AUTOMORPHISM_BUDGET = 12  # largest floor(n/2) the exhaustive search accepts


def _cos_2pi_frac(num: int, den: int):
    """cos(2 pi num/den) as an exact Fraction, or None if irrational."""
    t = Fraction(num, den) % 1
    if t.denominator == 1:
        return Fraction(1)
    if t.denominator == 2:
        return Fraction(-1)
    if t.denominator == 3:
        return Fraction(-1, 2)
    if t.denominator == 4:
        return Fraction(0)
    if t.denominator == 6:
        return Fraction(1, 2)
    return None


@dataclass(frozen=True)
class FoicFunctional:
    """Row functional I_j on trim sigma coordinates."""

    n: int
    j: int
    coefficients: tuple  # k = 1 .. floor(n/2); Fractions when all cosines are rational

    @property
    def is_exact(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coefficients)


def functional(n: int, j: int) -> FoicFunctional:
    if not 0 <= j <= n // 2:
        raise IndexError(f"functional index {j} outside 0..{n // 2}")
    exact = []
    for k in range(1, n // 2 + 1):
        exact.append(_cos_2pi_frac(j * k, n))
    if all(c is not None for c in exact):
        return FoicFunctional(n, j, tuple(-c for c in exact))
    with working_precision():
        row = tuple(-mpmath.cospi(mpmath.mpf(2 * j * k) / n) for k in range(1, n // 2 + 1))
    return FoicFunctional(n, j, row)


@at_working_precision
def apply(f: FoicFunctional, s) -> object:
    """Apply I_j to a SigmaRep (or a raw trim sigma vector)."""
    if isinstance(s, SigmaRep):
        coords = list(s.sigma[1:])
    else:
        coords = list(s)
    if len(coords) != len(f.coefficients):
        raise ValueError("sigma coordinate length does not match the functional")
    total = Fraction(0)
    for c, x in zip(f.coefficients, coords):
        total = scalar_add(total, scalar_mul(c, x))
    return total


def _clear_row(row):
    """Scale a rational row by a positive rational to primitive integers."""
    mult = 1
    for c in row:
        mult = mult * c.denominator // gcd(mult, c.denominator)
    ints = [int(c * mult) for c in row]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    g = g or 1
    return tuple(c // g for c in ints)


def cone_halfspaces(n: int, j: int):
    """Rows I_j - I_r (r != j) describing C_j; integer-cleared when rational."""
    fj = functional(n, j)
    rows = []
    for r in range(n // 2 + 1):
        if r == j:
            continue
        fr = functional(n, r)
        row = tuple(scalar_add(a, -b) for a, b in zip(fj.coefficients, fr.coefficients))
        if all(isinstance(c, Fraction) for c in row):
            row = _clear_row(row)
        rows.append(row)
    return rows


@dataclass(frozen=True)
class ConeMembership:
    cones: frozenset
    face_dimension: int


def cone_membership(p: Polynomial) -> ConeMembership:
    """Indices j with theta_n^j an interlace cert, checked against half-spaces."""
    if p.is_zero:
        raise EmptyPolynomial("cone membership of the zero polynomial")
    n = p.darga
    res = interlace_number(p)
    sig = sigma_of(p).sigma[1:]
    with working_precision():
        scale = 1 + max(abs(as_mpf(c)) for c in sig)
        eps = mpmath.mpf("1e-9") * scale
        for j in res.certs:
            rows = cone_halfspaces(n, j)
            for row in rows:
                val = sum(as_mpf(c) * as_mpf(x) for c, x in zip(row, sig))
                if val < -eps * (1 + max(abs(as_mpf(c)) for c in row)):
                    raise InternalInconsistency(
                        f"cert {j} contradicts the half-space description of C_{j}")
    return ConeMembership(res.certs, n // 2 + 1 - len(res.certs))


@dataclass(frozen=True)
class MembershipShortcuts:
    inc0_applies: bool
    inc_half_applies: bool
    sumj2_applies: bool


def membership_shortcuts(p: Polynomial) -> MembershipShortcuts:
    """Literal hypothesis tests for cheap cone certificates.

    inc0: nonpositive coefficients put p in C_0; inc_half: for even darga,
    alternating-sign (p(-x) nonpositive) puts p in C_{n/2}; sumj2: a
    dominant x^1 coefficient puts p in C_{floor(n/2)}.
    """
    n = p.darga
    coeffs = [p.coeff(j)[0] for j in range(len(p.re))]
    inc0 = all(c <= 0 for c in coeffs)
    inc_half = n % 2 == 0 and all(
        (c <= 0 if j % 2 == 0 else c >= 0) for j, c in enumerate(coeffs))
    sig = sigma_of(p).sigma
    p1 = p.coeff(1)[0]
    tail = Fraction(0)
    for k in range(2, n // 2 + 1):
        tail = scalar_add(tail, scalar_mul(k * k, abs(sig[k])))
    sumj2 = p1 >= tail
    return MembershipShortcuts(inc0, inc_half, sumj2)


def polar_vertices(n: int) -> list[Polynomial]:
    """Vertices p^(j) of the polar simplex, j = 0 .. floor(n/2).

    p^(j) has coefficient theta^(jk) + theta^(-jk) = 2 cos(2 pi jk/n) on x^k,
    k = 1..n-1, and satisfies I_r(p^(j)) = 1 for every r != j.
    """
    if n < 2:
        raise ValueError("polar vertices need n >= 2")
    out = []
    for j in range(n // 2 + 1):
        exact = [_cos_2pi_frac(j * k, n) for k in range(1, n)]
        if all(c is not None for c in exact):
            coeffs = [2 * c for c in exact]
        else:
            with working_precision():
                coeffs = [2 * mpmath.cospi(mpmath.mpf(2 * j * k) / n) for k in range(1, n)]
        out.append(Polynomial([Fraction(0)] + list(coeffs), zero_darga=n))
    return out


@dataclass(frozen=True)
class IsometryGraph:
    """Complete graph on the functionals, vertices/edges coloured by inner products."""

    n: int
    vertex_colors: tuple

    def edge_color(self, r: int, s: int):
        if r == s:
            raise ValueError("edge needs distinct endpoints")
        if self.n % 2 == 1:
            return Fraction(-1, 2)
        return Fraction(0) if (r - s) % 2 == 0 else Fraction(-1)

    @property
    def size(self) -> int:
        return self.n // 2 + 1


def isometry_graph(n: int) -> IsometryGraph:
    """Exact inner-product colours of the interlace simplex."""
    if n < 3:
        raise ValueError("isometry graph needs n >= 3")
    colors = []
    for j in range(n // 2 + 1):
        if n % 2 == 1:
            colors.append(Fraction(n - 1, 2) if j == 0 else Fraction(n - 2, 4))
        else:
            colors.append(Fraction(n, 2) if j in (0, n // 2) else Fraction(n, 4))
    return IsometryGraph(n, tuple(colors))


def isometry_group(n: int):
    """(order, structure tag) of the isometry group of the fan."""
    if n < 3:
        raise ValueError("isometry group needs n >= 3")
    m = (n - 1) // 2
    if n % 2 == 1:
        return factorial(m), f"S{m} x S1"
    if n % 4 == 0:
        return (factorial(m // 2) * factorial((m + 1) // 2) * 2,
                f"S{m // 2} x S{(m + 1) // 2} x S2")
    return factorial(m // 2) ** 2 * 2, f"(S{m // 2} x S1) wr S2"


def _count_colored_automorphisms_raw(vc, ec) -> int:
    """Backtracking count over a small interned colour matrix."""
    size = len(vc)
    ncolors = 1 + max((c for row in ec for c in row if c >= 0), default=0)
    # matchmask[c][v]: bitmask of w whose edge to v carries colour c
    matchmask = [[0] * size for _ in range(ncolors)]
    for v in range(size):
        for w in range(size):
            if v != w:
                matchmask[ec[v][w]][v] |= 1 << w
    base = [sum(1 << w for w in range(size) if vc[w] == vc[i])
            for i in range(size)]
    count = 0

    def extend(i: int, masks, used: int):
        nonlocal count
        if i == size:
            count += 1
            return
        avail = masks[i] & ~used
        row = ec[i]
        while avail:
            bit = avail & -avail
            avail ^= bit
            v = bit.bit_length() - 1
            new_used = used | bit
            new_masks = list(masks)
            ok = True
            for j in range(i + 1, size):
                nm = masks[j] & matchmask[row[j]][v]
                if nm & ~new_used == 0:
                    ok = False
                    break
                new_masks[j] = nm
            if ok:
                extend(i + 1, new_masks, new_used)

    extend(0, base, 0)
    return count


def count_colored_automorphisms(g: IsometryGraph) -> int:
    """Exact count of colour-preserving vertex permutations.

    Twin vertices (same vertex colour, identical edge-colour rows) are
    interchangeable, so each twin class contributes |class|! exactly and
    only the quotient graph needs the exhaustive backtracking search.  The
    factorisation is exact: automorphisms permute twin classes setwise and
    act freely inside them.
    """
    size = g.size
    if size - 1 > AUTOMORPHISM_BUDGET:
        raise TooLarge(f"automorphism search budget is floor(n/2) <= {AUTOMORPHISM_BUDGET}")
    palette: dict = {}

    def intern(color) -> int:
        if color not in palette:
            palette[color] = len(palette)
        return palette[color]

    vc = [intern(("v", c)) for c in g.vertex_colors]
    ec = [[intern(("e", g.edge_color(r, s))) if r != s else -1
           for s in range(size)] for r in range(size)]

    classes: list[list[int]] = []
    for v in range(size):
        for cls in classes:
            u = cls[0]
            if vc[u] == vc[v] and all(ec[u][x] == ec[v][x]
                                      for x in range(size) if x not in (u, v)):
                cls.append(v)
                break
        else:
            classes.append([v])

    total = 1
    for cls in classes:
        total *= factorial(len(cls))
    reps = [cls[0] for cls in classes]
    qvc = [(vc[r], len(cls), ec[cls[0]][cls[1]] if len(cls) > 1 else -1)
           for r, cls in zip(reps, classes)]
    qpalette: dict = {}

    def qintern(c):
        if c not in qpalette:
            qpalette[c] = len(qpalette)
        return qpalette[c]

    qvc = [qintern(c) for c in qvc]
    qec = [[ec[a][b] if a != b else -1 for b in reps] for a in reps]
    return total * _count_colored_automorphisms_raw(qvc, qec)
