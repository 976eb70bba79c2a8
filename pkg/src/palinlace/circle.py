"""Circle number via the Cayley transform and discriminants, certs, exactness.

Two routes compute the circle number of a trim self-inversive p of darga n:

* discriminant route: cn is the largest real root, in alpha, of the
  discriminant of (alpha (x^n + 1) + p) / gcd(p, x^n + 1);
* halved route (palindromic p): map by the Cayley substitution at omega = 1,
  keep even-indexed coefficients, and take the largest real root of that
  half-size discriminant together with the two endpoint candidates
  -p(1)/2 and -p(-1)/2 (n even) or -p'(-1)/n (n odd).

Rational input stays exact end to end (integer resultants on sample values
of alpha, exact interpolation, Sturm isolation, rational reconstruction of
the largest root); floating input falls back to high-precision numerics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import ratpoly as rp
from . import realroots as rr
from .arith import binomial
from .errors import (
    EmptyPolynomial,
    InternalInconsistency,
    NotApplicable,
    NotSelfInversive,
    NotTrim,
    OracleFailure,
)
from .interlace import interlace_number, is_interlace_rational
from .polycore import (
    Polynomial,
    as_mpf,
    sigma_of,
    to_fraction_coeffs,
    trim_part,
    unity_values_raw,
    x_pow_n_plus_1,
)
from .precision import default_precision, escalate, working_precision

GCD_REL_TOL = mpmath.mpf("1e-9")       # float-track divisibility threshold
CERT_CLUSTER_TOL = mpmath.mpf("1e-6")  # double-root clustering
EXACT_REL_TOL = mpmath.mpf("1e-8")     # discriminant-vanishing threshold
ROOT_IM_TOL = mpmath.mpf("1e-9")       # accept near-real roots of the alpha poly


@dataclass(frozen=True)
class CircleResult:
    value: object          # Fraction when identified exactly, else mpf
    certs: tuple           # unit-circle double roots of p at alpha = value
    method: str            # "discriminant" | "hecke"
    disc_poly: tuple       # alpha-polynomial whose largest real root was taken


@dataclass(frozen=True)
class ExactnessVerdict:
    exact: bool
    route: str             # "pofone_fast_path" | "double_root_test"
    witness: object | None  # cert index whose root doubles, when detected


def _require_trim_si(p: Polynomial):
    if p.is_zero:
        raise EmptyPolynomial("circle number of the zero polynomial")
    if not p.is_trim:
        raise NotTrim("circle number is defined for trim polynomials")
    if not p.is_self_inversive():
        raise NotSelfInversive("circle number needs self-inversive input")


# -- numeric root finding -----------------------------------------------------

def all_roots(coeffs, bits: int | None = None):
    """All complex roots of a polynomial given by ascending mpf/mpc coefficients.

    Multiple roots slow the simultaneous iteration down to a linear rate, so
    the step budget and guard precision scale with the working precision and
    the whole solve escalates twice before giving up.
    """
    bits = bits or default_precision()
    last_err = None
    for attempt in range(3):
        wp = bits * (2**attempt)
        try:
            with working_precision(wp):
                cof = [mpmath.mpc(c) for c in coeffs]
                while cof and abs(cof[-1]) == 0:
                    cof.pop()
                if len(cof) <= 1:
                    return []
                desc = list(reversed(cof))
                roots = mpmath.polyroots(desc, maxsteps=100 + 5 * wp,
                                         extraprec=2 * wp, error=False)
                return [mpmath.mpc(r) for r in roots]
        except (mpmath.libmp.NoConvergence, ZeroDivisionError) as exc:
            last_err = exc
    raise OracleFailure(f"root solver did not converge: {last_err}")


def polynomial_roots(p: Polynomial, bits: int | None = None):
    with working_precision(bits):
        coeffs = [mpmath.mpc(as_mpf(a), as_mpf(b))
                  for a, b in (p.coeff(j) for j in range(len(p.re)))]
    return all_roots(coeffs, bits)


def numeric_oracle_circle_rooted(p: Polynomial, tol=None) -> bool:
    """Independent oracle: solve for all roots and test | |z| - 1 | < tol."""
    if p.is_zero:
        raise EmptyPolynomial("oracle needs a nonzero polynomial")
    bits = 2 * default_precision()
    tol = mpmath.mpf(tol) if tol is not None else mpmath.mpf("1e-6")
    roots = polynomial_roots(p, bits)
    with working_precision(bits):
        return all(abs(abs(z) - 1) < tol for z in roots)


# -- exact complex-rational helpers (Cayley at omega = +-1) -------------------

def _cpoly(rel, iml):
    return [Fraction(c) for c in rel], [Fraction(c) for c in iml]


def _cmul(a, b):
    ar, ai = a
    br, bi = b
    return (rp.sub(rp.mul(ar, br), rp.mul(ai, bi)),
            rp.add(rp.mul(ar, bi), rp.mul(ai, br)))


def _cadd(a, b):
    return rp.add(a[0], b[0]), rp.add(a[1], b[1])


def _cscale(a, re, im=Fraction(0)):
    ar, ai = a
    return (rp.sub(rp.scale(ar, re), rp.scale(ai, im)),
            rp.add(rp.scale(ai, re), rp.scale(ar, im)))


def cayley_exact(coeffs_re, coeffs_im, omega_sign: int):
    """S_omega(p) for omega = +1 or -1 on exact coefficients.

    Returns the real coefficient list of (x + i)^n p(omega (x - i)/(x + i));
    raises if the imaginary part does not vanish identically.
    """
    n = len(coeffs_re) - 1
    minus = (_cpoly([0, 1], [-1]))   # x - i
    plus = (_cpoly([0, 1], [1]))     # x + i
    minus_pows = [(_cpoly([1], [0]))]
    plus_pows = [(_cpoly([1], [0]))]
    for _ in range(n):
        minus_pows.append(_cmul(minus_pows[-1], minus))
        plus_pows.append(_cmul(plus_pows[-1], plus))
    acc = _cpoly([], [])
    for k in range(n + 1):
        cre = Fraction(coeffs_re[k]) * omega_sign**k
        cim = Fraction(coeffs_im[k]) * omega_sign**k if coeffs_im else Fraction(0)
        if cre == 0 and cim == 0:
            continue
        term = _cmul(minus_pows[k], plus_pows[n - k])
        acc = _cadd(acc, _cscale(term, cre, cim))
    re, im = acc
    if rp.strip(im):
        raise InternalInconsistency("Cayley image of self-inversive input must be real")
    return rp.strip(re) or []


def cayley(p: Polynomial, j: int) -> Polynomial:
    """The real polynomial S_omega(p) for omega = theta_n^j.

    Exact for rational p with omega = +-1; floating (with an imaginary-residue
    check) otherwise.
    """
    if not p.is_self_inversive():
        raise NotSelfInversive("the Cayley image is real only for self-inversive input")
    n = p.darga
    j = j % n
    if p.is_exact and (j == 0 or 2 * j == n):
        re = [Fraction(p.coeff(k)[0]) for k in range(n + 1)]
        im = [Fraction(p.coeff(k)[1]) for k in range(n + 1)]
        sign = 1 if j == 0 else -1
        return Polynomial(cayley_exact(re, im, sign), zero_darga=n)
    bits = 2 * default_precision()
    with working_precision(bits):
        w = mpmath.expjpi(mpmath.mpf(2 * j) / n)
        # numeric polynomials as coefficient lists of mpc
        mi = [mpmath.mpc(0, -1), mpmath.mpc(1)]
        pl = [mpmath.mpc(0, 1), mpmath.mpc(1)]

        def nmul(a, b):
            out = [mpmath.mpc(0)] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                for k, y in enumerate(b):
                    out[i + k] += x * y
            return out

        mp_list = [[mpmath.mpc(1)]]
        pp_list = [[mpmath.mpc(1)]]
        for _ in range(n):
            mp_list.append(nmul(mp_list[-1], mi))
            pp_list.append(nmul(pp_list[-1], pl))
        acc = [mpmath.mpc(0)] * (n + 1)
        scalemax = mpmath.mpf(0)
        for k in range(n + 1):
            a, b = p.coeff(k)
            c = mpmath.mpc(as_mpf(a), as_mpf(b)) * w**k
            if c == 0:
                continue
            term = nmul(mp_list[k], pp_list[n - k])
            for i, t in enumerate(term):
                acc[i] += c * t
        for c in acc:
            scalemax = max(scalemax, abs(c))
        eps = scalemax * mpmath.mpf(2) ** (-(bits - 48))
        if any(abs(c.imag) > eps for c in acc):
            raise InternalInconsistency("Cayley image has a nonvanishing imaginary part")
        return Polynomial([c.real for c in acc], zero_darga=n)


def hecke(q: Polynomial) -> Polynomial:
    """Keep even-indexed coefficients: coefficient of x^j becomes that of x^(2j)."""
    re = [q.coeff(2 * j)[0] for j in range(q.degree // 2 + 1)] if not q.is_zero else []
    im = None
    if q.im is not None:
        im = [q.coeff(2 * j)[1] for j in range(q.degree // 2 + 1)]
    return Polynomial(re, im, zero_darga=q.darga // 2)


def choose_omega(p: Polynomial) -> int:
    """Index j maximising p(theta_n^j); guarantees a full-degree Cayley image."""
    _require_trim_si(p)
    n = p.darga

    def compute(bits):
        vals = unity_values_raw(p, range(n), bits)
        with working_precision(bits):
            reals = [v.real for v in vals]
            vmax = max(reals)
            eps = mpmath.mpf("1e-9") * (1 + abs(vmax))
            return min(j for j, v in enumerate(reals) if v >= vmax - eps)

    j, _ = escalate(compute)
    return j


# -- gcd with x^n + 1 ---------------------------------------------------------

def gcd_xn1(p: Polynomial) -> Polynomial:
    """The factor gcd(p, x^n + 1); exact on the rational track.

    On the floating track the divisor is assembled from the real irreducible
    factors of x^n + 1 whose roots nearly annihilate p, repeated while the
    quotient stays divisible.
    """
    _require_trim_si(p)
    n = p.darga
    if p.is_exact and p.is_real:
        xn1 = [Fraction(0)] * (n + 1)
        xn1[0] = Fraction(1)
        xn1[n] = Fraction(1)
        g = rp.gcd(to_fraction_coeffs(p), xn1)
        return Polynomial(g, zero_darga=0)
    bits = 2 * default_precision()
    with working_precision(bits):
        thresh = GCD_REL_TOL * (1 + as_mpf(p.norm1()))
        rem = [mpmath.mpc(as_mpf(a), as_mpf(b))
               for a, b in (p.coeff(k) for k in range(n + 1))]
        factors = []
        if n % 2 == 1:
            factors.append(([mpmath.mpf(1), mpmath.mpf(1)], mpmath.mpc(-1)))
        for k in range(n // 2):
            c = mpmath.cospi(mpmath.mpf(2 * k + 1) / n)
            z = mpmath.expjpi(mpmath.mpf(2 * k + 1) / n)
            factors.append(([mpmath.mpf(1), -2 * c, mpmath.mpf(1)], z))
        g = [mpmath.mpf(1)]

        def div_by(coeffs, f):
            quo, cur = [], list(coeffs)
            df = len(f) - 1
            for i in range(len(cur) - 1, df - 1, -1):
                c = cur[i]
                quo.append(c)
                for t in range(df + 1):
                    cur[i - df + t] -= c * f[t]
            quo.reverse()
            return quo

        def eval_at(coeffs, z):
            acc = mpmath.mpc(0)
            for c in reversed(coeffs):
                acc = acc * z + c
            return acc

        for f, z in factors:
            while len(rem) - 1 >= len(f) - 1 and abs(eval_at(rem, z)) < thresh:
                rem = div_by(rem, f)
                gre = [mpmath.mpf(c) for c in g]
                g = [mpmath.mpf(0)] * (len(gre) + len(f) - 1)
                for i, a in enumerate(gre):
                    for t, b in enumerate(f):
                        g[i + t] += a * b
        return Polynomial(g, zero_darga=len(g) - 1)


def _alpha_pair_exact(p: Polynomial, g: Polynomial):
    """q = q0 + alpha q1 with q = (p + alpha (x^n+1)) / g, exact track."""
    n = p.darga
    xn1 = [Fraction(0)] * (n + 1)
    xn1[0] = Fraction(1)
    xn1[n] = Fraction(1)
    gc = to_fraction_coeffs(g)
    q0 = rp.div_exact(to_fraction_coeffs(p), gc)
    q1 = rp.div_exact(xn1, gc)
    return q0, q1


def _alpha_pair_float(p: Polynomial, g: Polynomial, bits: int):
    n = p.darga
    with working_precision(bits):
        gc = [as_mpf(c) for c in g.real_coeffs()]
        xn1 = [mpmath.mpc(0)] * (n + 1)
        xn1[0] = mpmath.mpc(1)
        xn1[n] = mpmath.mpc(1)
        pc = [mpmath.mpc(as_mpf(a), as_mpf(b))
              for a, b in (p.coeff(k) for k in range(n + 1))]

        def divf(num):
            cur = list(num)
            df = len(gc) - 1
            quo = [mpmath.mpc(0)] * (len(cur) - df)
            for i in range(len(cur) - 1, df - 1, -1):
                c = cur[i] / gc[-1]
                quo[i - df] = c
                for t in range(df + 1):
                    cur[i - df + t] -= c * gc[t]
            return quo

        if len(gc) == 1:
            q0, q1 = [c / gc[0] for c in pc], [c / gc[0] for c in xn1]
        else:
            q0, q1 = divf(pc), divf(xn1)
        if p.is_real:
            q0 = [c.real for c in q0]
            q1 = [c.real for c in q1]
        return q0, q1


# -- alpha-discriminant machinery --------------------------------------------

def _resultant_alpha_exact(q0, q1):
    """Res_x(q, dq/dx) as an exact alpha-polynomial (up to a constant factor).

    q = q0 + alpha q1 with rational coefficient lists; evaluated at integer
    samples where the x-degree does not drop, then interpolated exactly.
    """
    d = max(rp.degree(q0), rp.degree(q1))
    if d < 1:
        return []
    # common denominator clearing so every sample sees the same constant scaling
    m0 = rp.clear_denominators(list(q0) + list(q1))[1]
    i0 = [int(Fraction(c) * m0) for c in list(q0) + [Fraction(0)] * (d + 1 - len(q0))]
    i1 = [int(Fraction(c) * m0) for c in list(q1) + [Fraction(0)] * (d + 1 - len(q1))]
    target_deg = 2 * d - 1
    xs, ys = [], []
    a = 1
    while len(xs) < target_deg + 1:
        qa = [i0[k] + a * i1[k] for k in range(d + 1)]
        if qa[d] != 0:
            da = rp.derivative(qa)
            xs.append(a)
            ys.append(rp.resultant_int(qa, da))
        a += 1
    return rp.newton_interpolate(xs, ys)


def _resultant_alpha_float(q0, q1, bits: int):
    """Floating fallback: numeric Sylvester determinants plus interpolation."""
    with working_precision(bits):
        d = max(len(q0), len(q1)) - 1
        q0 = list(q0) + [mpmath.mpf(0)] * (d + 1 - len(q0))
        q1 = list(q1) + [mpmath.mpf(0)] * (d + 1 - len(q1))
        if d < 1:
            return []
        target_deg = 2 * d - 1
        xs, ys = [], []
        a = 1
        while len(xs) < target_deg + 1:
            qa = [q0[k] + a * q1[k] for k in range(d + 1)]
            scale = max(abs(c) for c in qa)
            if abs(qa[d]) > mpmath.mpf(2) ** (-(bits // 2)) * (1 + scale):
                da = [k * qa[k] for k in range(1, d + 1)]
                rows = rp.sylvester_matrix(qa, da)
                ys.append(mpmath.det(mpmath.matrix(rows)))
                xs.append(a)
            a += 1
        # exact Newton interpolation on mpf values
        n = len(xs)
        coef = list(ys)
        for j in range(1, n):
            for i in range(n - 1, j - 1, -1):
                coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
        poly = [mpmath.mpf(0)]
        for i in range(n - 1, -1, -1):
            poly = _mpf_poly_mul_linear(poly, -xs[i])
            poly[0] += coef[i]
        while poly and abs(poly[-1]) == 0:
            poly.pop()
        return poly


def _mpf_poly_mul_linear(poly, c):
    """poly * (x + c) over mpf coefficients."""
    out = [mpmath.mpf(0)] * (len(poly) + 1)
    for i, a in enumerate(poly):
        out[i] += a * c
        out[i + 1] += a
    return out


def _largest_real_root_float(coeffs, bits: int):
    """Largest real root of an mpf alpha-polynomial, Newton-polished."""
    roots = all_roots(coeffs, bits)
    with working_precision(bits):
        cands = [r.real for r in roots if abs(r.imag) <= ROOT_IM_TOL * (1 + abs(r))]
        if not cands:
            return None
        best = max(cands)
        complex_coeffs = any(isinstance(c, mpmath.mpc) and abs(c.imag) > 0
                             for c in coeffs)
        if complex_coeffs:
            return best
        der = [k * coeffs[k] for k in range(1, len(coeffs))]
        x = best
        for _ in range(4):
            fx = _mpf_eval(coeffs, x)
            dx = _mpf_eval(der, x)
            if abs(dx) > 0:
                step = fx / dx
                if abs(step) < 1 + abs(x):
                    x = x - step
        if abs(_mpf_eval(coeffs, x)) <= abs(_mpf_eval(coeffs, best)):
            best = x
        return best


def _mpf_eval(coeffs, x):
    acc = mpmath.mpf(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _max_over_candidates(cands, root_info, disc_poly):
    """max of exact rationals and one isolated algebraic root."""
    cands = [Fraction(c) for c in cands]
    best_c = max(cands) if cands else None
    if root_info is None:
        if best_c is None:
            raise InternalInconsistency("no circle-number candidate exists")
        return best_c
    lo, hi, exact = root_info
    if exact is not None:
        return max(best_c, exact) if best_c is not None else exact
    if best_c is not None:
        for _ in range(8):
            if best_c >= hi:
                return best_c
            if best_c <= lo:
                break
            lo, hi = rr.refine_root(disc_poly, lo, hi, (hi - lo) / 2**40)
        if best_c >= hi:
            return best_c
    with working_precision(4 * default_precision()):
        mid = (as_mpf(lo) + as_mpf(hi)) / 2
        if best_c is not None and as_mpf(best_c) > mid:
            return best_c
        return mid


def _certs_for(p: Polynomial, value) -> tuple:
    """Unit-circle double roots of p at alpha = value; upper-half reps for real p.

    A double root of p_cn is a common root of p_cn and its derivative, so we
    solve the (generically simple-rooted) derivative and keep the roots that
    also annihilate p_cn -- far better conditioned than clustering the
    multiple roots of p_cn itself.
    """
    bits = 2 * default_precision()
    n = p.darga
    with working_precision(bits):
        alpha = as_mpf(value) if not isinstance(value, Fraction) else \
            mpmath.mpf(value.numerator) / value.denominator
        coeffs = []
        for k in range(n + 1):
            a, b = p.coeff(k)
            c = mpmath.mpc(as_mpf(a), as_mpf(b))
            if k == 0 or k == n:
                c = c + alpha
            coeffs.append(c)
        dcoeffs = [k * coeffs[k] for k in range(1, n + 1)]
        scale = sum(abs(c) for c in coeffs)
    droots = all_roots(dcoeffs, bits)
    with working_precision(bits):
        tol_p = mpmath.mpf("1e-9") * (1 + scale)
        certs = []
        for z in droots:
            if abs(abs(z) - 1) > CERT_CLUSTER_TOL:
                continue
            val = mpmath.mpc(0)
            for c in reversed(coeffs):
                val = val * z + c
            if abs(val) > tol_p:
                continue
            z = z / abs(z)
            if p.is_real and z.imag < 0:
                z = mpmath.conj(z)
            if any(abs(z - w) < CERT_CLUSTER_TOL for w in certs):
                continue
            certs.append(z)
        return tuple(certs)


def circle_number(p: Polynomial) -> CircleResult:
    """Discriminant route: largest real root of Disc_x(p_alpha / gcd(p, x^n+1))."""
    _require_trim_si(p)
    n = p.darga
    if p.is_exact and p.is_real:
        g = gcd_xn1(p)
        q0, q1 = _alpha_pair_exact(p, g)
        res = _resultant_alpha_exact(q0, q1)
        if not rp.strip(res):
            raise InternalInconsistency("alpha-discriminant vanished identically")
        disc = rp.div_exact(res, [Fraction(0), Fraction(1)]) if res[0] == 0 else res
        root = rr.largest_real_root(disc)
        if root is None:
            raise InternalInconsistency("discriminant has no real root; "
                                        "the theorem guarantees one")
        value = _max_over_candidates([], root, disc)
        certs = _certs_for(p, value)
        return CircleResult(value, certs, "discriminant", tuple(_normalize_disc(disc)))
    bits = 2 * default_precision()
    g = gcd_xn1(p)
    with working_precision(bits):
        q0, q1 = _alpha_pair_float(p, g, bits)
        # complex coefficients are possible for self-inversive input
        disc = _resultant_alpha_float(q0, q1, bits)
        if not disc:
            raise InternalInconsistency("alpha-discriminant vanished identically")
        value = _largest_real_root_float(disc, bits)
        if value is None:
            raise InternalInconsistency("discriminant has no real root; "
                                        "the theorem guarantees one")
    certs = _certs_for(p, value)
    return CircleResult(value, certs, "discriminant", tuple(disc))


def _normalize_disc(disc):
    """Primitive integer coefficients with positive leading term."""
    ints, _ = rp.clear_denominators(disc)
    ints = rp.primitive_int(ints)
    if ints and ints[-1] < 0:
        ints = [-c for c in ints]
    return [Fraction(c) for c in ints]


def circle_number_palindromic(p: Polynomial) -> CircleResult:
    """Halved route for trim palindromic p (endpoint candidates + H-discriminant)."""
    _require_trim_si(p)
    if not p.is_palindromic():
        raise NotSelfInversive("the halved route needs palindromic input")
    n = p.darga
    if p.is_exact:
        pc = to_fraction_coeffs(p) + [Fraction(0)] * (n + 1 - len(p.re))
        r1 = -rp.evaluate(pc, Fraction(1)) / 2
        if n % 2 == 0:
            r2 = -rp.evaluate(pc, Fraction(-1)) / 2
        else:
            r2 = -rp.evaluate(rp.derivative(pc), Fraction(-1)) / Fraction(n)
        g = gcd_xn1(p)
        q0, q1 = _alpha_pair_exact(p, g)
        d = max(rp.degree(q0), rp.degree(q1))
        s0 = cayley_exact(list(q0) + [Fraction(0)] * (d + 1 - len(q0)), None, 1)
        s1 = cayley_exact(list(q1) + [Fraction(0)] * (d + 1 - len(q1)), None, 1)
        h0 = [s0[2 * j] for j in range(len(s0) // 2 + 1)] if s0 else []
        h1 = [s1[2 * j] for j in range(len(s1) // 2 + 1)] if s1 else []
        disc = _hecke_disc_exact(h0, h1)
        root = rr.largest_real_root(disc) if rp.strip(disc) else None
        value = _max_over_candidates([r1, r2], root, disc)
        certs = _certs_for(p, value)
        return CircleResult(value, certs, "hecke", tuple(_normalize_disc(disc)))
    bits = 2 * default_precision()
    with working_precision(bits):
        r1 = -_eval_float(p, mpmath.mpf(1)) / 2
        if n % 2 == 0:
            r2 = -_eval_float(p, mpmath.mpf(-1)) / 2
        else:
            r2 = -_eval_float(p.derivative(), mpmath.mpf(-1)) / n
        g = gcd_xn1(p)
        q0, q1 = _alpha_pair_float(p, g, bits)
        s0 = _cayley_float_real(q0, bits)
        s1 = _cayley_float_real(q1, bits)
        h0 = [s0[2 * j] for j in range(len(s0) // 2 + 1)] if s0 else []
        h1 = [s1[2 * j] for j in range(len(s1) // 2 + 1)] if s1 else []
        dh = max(len(h0), len(h1)) - 1
        disc = _resultant_alpha_float(h0, h1, bits) if dh >= 2 else []
        r3 = _largest_real_root_float(disc, bits) if disc else None
        value = max([v for v in (r1, r2, r3) if v is not None])
    certs = _certs_for(p, value)
    return CircleResult(value, certs, "hecke", tuple(disc))


def _eval_float(p: Polynomial, x):
    acc = mpmath.mpf(0)
    for k in range(len(p.re) - 1, -1, -1):
        acc = acc * x + as_mpf(p.coeff(k)[0])
    return acc


def _hecke_disc_exact(h0, h1):
    """Disc_x(h) for h = h0 + alpha h1 over Q, up to a constant factor.

    The resultant Res_x(h, h') is sampled at integers, interpolated exactly,
    then divided by the (alpha-linear) leading coefficient; the quotient is
    the discriminant polynomial.
    """
    d = max(rp.degree(h0), rp.degree(h1))
    if d < 2:
        return []
    m = rp.clear_denominators(list(h0) + list(h1))[1]
    i0 = [int(Fraction(c) * m) for c in list(h0) + [Fraction(0)] * (d + 1 - len(h0))]
    i1 = [int(Fraction(c) * m) for c in list(h1) + [Fraction(0)] * (d + 1 - len(h1))]
    target = 2 * d - 1
    xs, ys = [], []
    a = 1
    while len(xs) < target + 1:
        ha = [i0[k] + a * i1[k] for k in range(d + 1)]
        if ha[d] != 0:
            xs.append(a)
            ys.append(rp.resultant_int(ha, rp.derivative(ha)))
        a += 1
    res = rp.newton_interpolate(xs, ys)
    lead = rp.strip([Fraction(i0[d]), Fraction(i1[d])])
    if rp.degree(lead) >= 1 and rp.strip(res):
        return rp.div_exact(res, lead)
    return res


def _cayley_float_real(q, bits: int):
    """S_1 of an mpf coefficient list, asserting a real image.

    The admissible imaginary residue accounts for how far the input itself
    sits from exact palindromic symmetry (float coefficients carry noise).
    """
    with working_precision(bits):
        n = len(q) - 1
        if n < 0:
            return []
        sym_dev = max((abs(q[k] - q[n - k]) for k in range(n + 1)),
                      default=mpmath.mpf(0))
        mi = [mpmath.mpc(0, -1), mpmath.mpc(1)]
        pl = [mpmath.mpc(0, 1), mpmath.mpc(1)]

        def nmul(a, b):
            out = [mpmath.mpc(0)] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                for k, y in enumerate(b):
                    out[i + k] += x * y
            return out

        mp_list = [[mpmath.mpc(1)]]
        pp_list = [[mpmath.mpc(1)]]
        for _ in range(n):
            mp_list.append(nmul(mp_list[-1], mi))
            pp_list.append(nmul(pp_list[-1], pl))
        acc = [mpmath.mpc(0)] * (n + 1)
        for k in range(n + 1):
            c = q[k]
            if c == 0:
                continue
            term = nmul(mp_list[k], pp_list[n - k])
            for i, t in enumerate(term):
                acc[i] += c * t
        scale = max((abs(c) for c in acc), default=mpmath.mpf(0))
        eps = (scale * mpmath.mpf(2) ** (-(bits - 48))
               + sym_dev * mpmath.mpf(4) ** n * (n + 1)
               + mpmath.mpf(2) ** (-(bits - 8)))
        if any(abs(c.imag) > eps for c in acc):
            raise InternalInconsistency("Cayley image has a nonvanishing imaginary part")
        out = [c.real for c in acc]
        while out and abs(out[-1]) == 0:
            out.pop()
        return out


def alpha_family_reduced(p: Polynomial):
    """The family q(alpha, x) = (alpha (x^n+1) + p) / gcd(p, x^n+1), exact track."""
    from .polycore import AlphaPolynomial
    _require_trim_si(p)
    g = gcd_xn1(p)
    q0, q1 = _alpha_pair_exact(p, g)
    d = max(rp.degree(q0), rp.degree(q1))
    return AlphaPolynomial(p.darga,
                           tuple(q0 + [Fraction(0)] * (d + 1 - len(q0))),
                           tuple(q1 + [Fraction(0)] * (d + 1 - len(q1))))


def cayley_alpha(ap, omega_sign: int = 1):
    """S_omega applied across an exact alpha-family, omega = +1 or -1."""
    from .polycore import AlphaPolynomial
    d = max(len(ap.const), len(ap.slope)) - 1
    c0 = [Fraction(c) for c in ap.const] + [Fraction(0)] * (d + 1 - len(ap.const))
    c1 = [Fraction(c) for c in ap.slope] + [Fraction(0)] * (d + 1 - len(ap.slope))
    s0 = cayley_exact(c0, None, omega_sign)
    s1 = cayley_exact(c1, None, omega_sign)
    top = max(len(s0), len(s1))
    s0 = s0 + [Fraction(0)] * (top - len(s0))
    s1 = s1 + [Fraction(0)] * (top - len(s1))
    return AlphaPolynomial(d, tuple(s0), tuple(s1))


def R_polynomial(p: Polynomial) -> Polynomial:
    """n x^(n-1) p(x) - (x^n + 1) p'(x); circle certs are among its roots."""
    _require_trim_si(p)
    n = p.darga
    xnm1 = Polynomial([Fraction(0)] * (n - 1) + [Fraction(n)])
    return xnm1 * p - x_pow_n_plus_1(n) * p.derivative()


def cn_lower_bounds(p: Polynomial) -> dict:
    """Unconditional lower bounds for the circle number."""
    _require_trim_si(p)
    n = p.darga
    out = {}
    if p.is_exact and p.is_real:
        best = max(abs(Fraction(p.coeff(k)[0])) / binomial(n, k) for k in range(1, n))
    else:
        with working_precision():
            best = max(abs(mpmath.mpc(as_mpf(p.coeff(k)[0]), as_mpf(p.coeff(k)[1])))
                       / binomial(n, k) for k in range(1, n))
    out["binomial"] = best
    if p.is_palindromic():
        if p.is_exact:
            pc = to_fraction_coeffs(p) + [Fraction(0)] * (n + 1 - len(p.re))
            out["at_one"] = -rp.evaluate(pc, Fraction(1)) / 2
            if n % 2 == 0:
                out["at_minus_one"] = -rp.evaluate(pc, Fraction(-1)) / 2
            else:
                out["derivative_at_minus_one"] = \
                    -rp.evaluate(rp.derivative(pc), Fraction(-1)) / Fraction(n)
        else:
            with working_precision():
                out["at_one"] = -_eval_float(p, mpmath.mpf(1)) / 2
                if n % 2 == 0:
                    out["at_minus_one"] = -_eval_float(p, mpmath.mpf(-1)) / 2
                else:
                    out["derivative_at_minus_one"] = \
                        -_eval_float(p.derivative(), mpmath.mpf(-1)) / n
    return out


def chen_bound(p: Polynomial):
    """cn(p) <= p_1 for half-monotone decreasing nonnegative p; None otherwise."""
    _require_trim_si(p)
    if not p.is_palindromic():
        return None
    n = p.darga
    row = [p.coeff(j)[0] for j in range(1, n // 2 + 1)]
    if any(c < 0 for c in row):
        return None
    if any(row[i] < row[i + 1] for i in range(len(row) - 1)):
        return None
    return row[0]


def _interlace_angle_multisets(args_a, args_b, tol) -> bool:
    """Weak alternation of two equal-size argument multisets in [0, 2 pi)."""
    if len(args_a) != len(args_b):
        return False
    events = []
    for t in sorted(args_a):
        events.append((t, "a"))
    for t in sorted(args_b):
        events.append((t, "b"))
    events.sort(key=lambda e: e[0])
    # group near-equal angles, then greedily alternate inside each group
    groups = []
    for t, tag in events:
        if groups and abs(t - groups[-1][0]) <= tol:
            groups[-1][1].append(tag)
        else:
            groups.append((t, [tag]))
    need = None  # next required tag, or None if either works
    for _, tags in groups:
        na, nb = tags.count("a"), tags.count("b")
        if abs(na - nb) > 1:
            return False
        if na == nb:
            if na == 0:
                continue
            start = need if need is not None else "a"
            need = start
        elif na == nb + 1:
            if need == "b":
                return False
            need = "b"
        else:
            if need == "a":
                return False
            need = "a"
    return True


def self_interlace_upper(q: Polynomial):
    """cn(trim q) <= q(0) when the full palindromic q angle-interlaces x^n + 1.

    Returns (bound, equality_flag); the flag is set when q has a double root.
    Note the hypothesis is hard to meet for real input: conjugate symmetry
    forces an even number of roots into the sector of x^n + 1 roots that
    straddles +1, so the required alternation can only go through argument
    ties (roots of q sitting exactly on roots of x^n + 1).
    """
    if q.is_zero or not q.is_full:
        raise NotApplicable("the self-interlacing bound needs a full polynomial")
    if not q.is_palindromic():
        raise NotApplicable("the self-interlacing bound needs palindromic input")
    n = q.darga
    if trim_part(q).is_zero:
        raise NotApplicable("the trimmed part is zero")
    bits = 2 * default_precision()
    roots = polynomial_roots(q, bits)
    with working_precision(bits):
        args_q = sorted((mpmath.arg(z)) % (2 * mpmath.pi) for z in roots)
        args_b = sorted((mpmath.pi * (2 * k + 1) / n) for k in range(n))
        if not _interlace_angle_multisets(args_q, args_b, mpmath.mpf("1e-9")):
            raise NotApplicable("q does not angle-interlace x^n + 1")
        # double-root detection by clustering
        double = False
        srt = sorted(roots, key=lambda z: mpmath.arg(z))
        for i in range(len(srt)):
            if abs(srt[i] - srt[(i + 1) % len(srt)]) < CERT_CLUSTER_TOL * (1 + abs(srt[i])):
                double = True
                break
    a0, _ = q.coeff(0)
    return a0, double


def is_exact(p: Polynomial) -> ExactnessVerdict:
    """Whether the interlace number already equals the circle number."""
    _require_trim_si(p)
    if not p.is_palindromic():
        raise NotSelfInversive("exactness is defined for palindromic input")
    n = p.darga
    res = interlace_number(p)
    if 0 in res.certs or (n % 2 == 0 and n // 2 in res.certs):
        w = 0 if 0 in res.certs else n // 2
        return ExactnessVerdict(True, "pofone_fast_path", w)
    witness = _twocerts_witness(p, res.certs)
    exact = _double_root_at_il(p, res)
    return ExactnessVerdict(exact, "double_root_test", witness)


def _twocerts_witness(p: Polynomial, certs):
    """Cert j whose sine sum vanishes (the cert itself doubles), if any."""
    n = p.darga
    sig = sigma_of(p).sigma
    with working_precision():
        scale = sum(abs(as_mpf(c)) * n for c in sig[1:]) + 1
        for j in sorted(certs):
            if j == 0 or 2 * j == n:
                continue
            total = mpmath.mpf(0)
            for k in range(1, n // 2 + 1):
                total += as_mpf(sig[k]) * (n - 2 * k) * mpmath.sinpi(mpmath.mpf(2 * j * k) / n)
            if abs(total) < mpmath.mpf("1e-9") * scale:
                return j
    return None


def _double_root_at_il(p: Polynomial, res) -> bool:
    """Discriminant test at alpha = il(p)."""
    if p.is_exact:
        rational, value = is_interlace_rational(p)
        g = gcd_xn1(p)
        q0, q1 = _alpha_pair_exact(p, g)
        resal = _resultant_alpha_exact(q0, q1)
        disc = rp.div_exact(resal, [Fraction(0), Fraction(1)]) if resal and resal[0] == 0 \
            else resal
        if rational:
            return rp.evaluate(disc, value) == 0
        with working_precision(2 * default_precision()):
            il = res.value
            scale = max(abs(as_mpf(c)) * abs(il) ** k for k, c in enumerate(disc))
            val = mpmath.mpf(0)
            for k in range(len(disc) - 1, -1, -1):
                val = val * il + as_mpf(disc[k])
            return abs(val) < EXACT_REL_TOL * (1 + scale)
    bits = 2 * default_precision()
    g = gcd_xn1(p)
    q0, q1 = _alpha_pair_float(p, g, bits)
    disc = _resultant_alpha_float(q0, q1, bits)
    with working_precision(bits):
        il = as_mpf(res.value)
        scale = max(abs(c) * abs(il) ** k for k, c in enumerate(disc))
        val = _mpf_eval(disc, il)
        return abs(val) < EXACT_REL_TOL * (1 + scale)


def bounding_error(p: Polynomial):
    """be(p) = il(p)/cn(p) - 1; exact when both numbers are rational."""
    _require_trim_si(p)
    if not p.is_palindromic():
        raise NotSelfInversive("bounding error is defined for palindromic input")
    cn_res = circle_number_palindromic(p)
    il_exact = None
    if p.is_exact:
        rational, value = is_interlace_rational(p)
        if rational:
            il_exact = value
    if il_exact is not None and isinstance(cn_res.value, Fraction):
        return il_exact / cn_res.value - 1
    il = interlace_number(p).value
    with working_precision():
        return as_mpf(il) / as_mpf(cn_res.value) - 1


def be_upper_bound(n: int):
    """Coefficient-free bound (n-1)/2 * C(n, floor(n/2)) - 1."""
    return Fraction(n - 1, 2) * binomial(n, n // 2) - 1
