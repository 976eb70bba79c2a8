"""Family generators and their number-theoretic backbone."""

import math
import random
from fractions import Fraction as Q

import mpmath
import pytest

from palinlace import circle as ci
from palinlace import families as fa
from palinlace.errors import InvalidParameter, NotApplicable, TooLarge
from palinlace.interlace import interlace_number, is_interlace_rational, ll_bound
from palinlace.polycore import as_mpf, make_polynomial, sigma_of
from palinlace.precision import working_precision

from conftest import ge


class TestArithmeticFunctions:
    def test_jordan_values(self):
        assert fa.jordan_totient(1, 6) == fa.euler_phi(6) == 2
        assert fa.jordan_totient(2, 6) == 24

    def test_ramanujan_table(self):
        assert fa.ramanujan_sum(4, 2) == -2
        for n in range(1, 61):
            assert fa.ramanujan_sum(n, n) == fa.euler_phi(n)

    def test_ramanujan_brute_force_cross_check(self):
        for n in range(1, 61):
            for j in range(n + 1):
                assert fa.ramanujan_sum(n, j) == fa.ramanujan_sum_bruteforce(n, j)

    def test_mobius(self):
        assert [fa.mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


class TestGenerators:
    def test_geometric(self):
        assert fa.geometric(5) == make_polynomial([1, 1, 1, 1], offset=1)
        assert fa.geometric(2) == make_polynomial([1], offset=1)

    def test_sigma_basis(self):
        assert fa.sigma_basis(6, 3) == make_polynomial([2], offset=3)
        assert fa.sigma_basis(4, 1) == make_polynomial([1, 0, 1], offset=1)

    def test_gcd_poly(self):
        assert [int(c) for c in fa.gcd_poly(6, 1).re] == [0, 1, 2, 3, 2, 1]
        assert fa.gcd_poly(5, 1) == ge(5)

    def test_coprime_support(self):
        assert [int(c) for c in fa.coprime_support(6).re] == [0, 1, 0, 0, 0, 1]
        assert fa.coprime_support(7) == ge(7)

    def test_fekete(self):
        assert [int(c) for c in fa.fekete(5).re] == [0, 1, -1, -1, 1]
        with pytest.raises(InvalidParameter):
            fa.fekete(7)  # 3 mod 4
        with pytest.raises(InvalidParameter):
            fa.fekete(9)  # not prime

    def test_binomials(self):
        assert [int(c) for c in fa.binomial_poly(4).re] == [0, 4, 6, 4]
        h = fa.hadamard_binomial(4)
        assert [Q(c) for c in h.re] == [0, Q(1, 4), Q(1, 6), Q(1, 4)]

    def test_every_family_is_trim_palindromic(self):
        members = [fa.geometric(9), fa.sigma_basis(8, 3), fa.gcd_poly(10, 2),
                   fa.coprime_support(12), fa.fekete(13), fa.binomial_poly(7),
                   fa.hadamard_binomial(9), fa.be_witness(8),
                   fa.exact_family(5, Q(1, 4)),
                   fa.two_interval([(3, 1), (4, 2), (5, 3)])]
        for p in members:
            assert p.is_trim and p.is_palindromic()


class TestClosedForms:
    def test_gcd_interlace_values(self):
        for n in range(2, 30):
            for k in (1, 2):
                ok, v = is_interlace_rational(fa.gcd_poly(n, k))
                assert ok and v == Q(n**k - fa.jordan_totient(k, n), 2)

    def test_coprime_support_values(self):
        for n in range(2, 30):
            p = fa.coprime_support(n)
            q = min(fa.prime_factors(n) if hasattr(fa, "prime_factors")
                    else __import__("palinlace.arith", fromlist=["prime_factors"]).prime_factors(n))
            ok, v = is_interlace_rational(p)
            assert ok and v == Q(fa.euler_phi(n), 2 * (q - 1))

    def test_fekete_interlace_and_gauss(self):
        from palinlace.polycore import unity_values_raw
        p = fa.fekete(13)
        res = interlace_number(p)
        with working_precision(256):
            assert abs(res.value - mpmath.sqrt(13) / 2) < mpmath.mpf("1e-30")
            vals = unity_values_raw(p, range(1, 13), 256)
            for v in vals:
                assert abs(abs(v) - mpmath.sqrt(13)) < mpmath.mpf("1e-30")

    def test_binomial_closed_form(self):
        # il(B_n) = 2^(n-1) cos^n(pi/n) + 1: the +1 is forced by positivity
        # (check n = 3: direct evaluation gives 3/2, and the formula's
        # alternative sign would be negative)
        for n in range(3, 15):
            res = interlace_number(fa.binomial_poly(n))
            with working_precision(256):
                expect = 2 ** (n - 1) * mpmath.cospi(mpmath.mpf(1) / n) ** n + 1
                assert abs(res.value - expect) < mpmath.mpf("1e-25") * (1 + expect)

    def test_hadamard_binomial_cert_for_large_even_n(self):
        from palinlace import foic
        p = fa.hadamard_binomial(36)
        flags = foic.membership_shortcuts(p)
        assert flags.sumj2_applies
        assert 18 in interlace_number(p).certs
        assert ci.is_exact(p).exact


class TestWitnessFamily:
    def test_structure(self):
        p = fa.be_witness(8)
        assert p.darga == 8 and p.is_trim and p.is_palindromic()

    def test_parameter_validation(self):
        with pytest.raises(InvalidParameter):
            fa.be_witness(6)

    def test_certificate_attempt_fails_loudly(self):
        # the squared construction shares all its roots with x^n + 1, so the
        # self-interlacing certificate legitimately cannot fire
        with pytest.raises((NotApplicable, InvalidParameter)):
            fa.be_witness(8, certify=True)

    def test_circle_number_below_one(self):
        p = fa.be_witness(8)
        res = ci.circle_number_palindromic(p)
        with working_precision():
            assert as_mpf(res.value) < 1
            assert abs(as_mpf(res.value) - mpmath.mpf("0.911378642403")) < 1e-9


class TestExactFamily:
    def test_values(self):
        p = fa.exact_family(5, Q(1, 4))
        ok, v = is_interlace_rational(p)
        assert ok and v == 1
        assert sorted(interlace_number(p).certs) == [2, 4]

    def test_parameter_range(self):
        with pytest.raises(InvalidParameter):
            fa.exact_family(5, Q(1, 2))  # >= 9/25
        with pytest.raises(InvalidParameter):
            fa.exact_family(6, Q(1, 10))


class TestTwoInterval:
    def test_validation(self):
        with pytest.raises(InvalidParameter):
            fa.two_interval([(5, 1), (5, 2)])
        with pytest.raises(InvalidParameter):
            fa.two_interval([(1, 5), (5, 2), (5, 3)])

    def test_product_structure(self):
        p = fa.two_interval([(5, 1), (5, 2), (5, 3)])
        assert p.darga == 6 and p.is_palindromic()


class TestCutPolynomials:
    def test_all_ones(self):
        cp = fa.cut_polynomial([[1] * 4 for _ in range(4)])
        assert [int(c) for c in cp.re] == [1, 4, 6, 4, 1]

    def test_diagonal(self):
        a = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
        assert [int(c) for c in fa.cut_polynomial(a).re] == [1, 0, 0, 1]

    def test_hermitian_validation(self):
        with pytest.raises(InvalidParameter):
            fa.cut_polynomial([[0, 1], [2, 0]])

    def test_against_independent_enumeration(self, rng):
        import itertools
        n = 4
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = Q(rng.randint(-3, 3))
            for j in range(i + 1, n):
                a[i][j] = Q(rng.randint(-3, 3), rng.choice([1, 2]))
                a[j][i] = a[i][j]
        cp = fa.cut_polynomial(a)
        coeffs = [Q(0)] * (n + 1)
        for size in range(n + 1):
            for s in itertools.combinations(range(n), size):
                prod = Q(1)
                for i in s:
                    for j in range(n):
                        if j not in s:
                            prod *= a[i][j]
                coeffs[size] += prod
        assert [Q(c) for c in cp.re] == [c for c in coeffs[:len(cp.re)]]

    def test_self_inversive(self, rng):
        n = 3
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = Q(1)
            for j in range(i + 1, n):
                a[i][j] = (Q(rng.randint(-2, 2)), Q(rng.randint(-2, 2)))
                a[j][i] = (a[i][j][0], -a[i][j][1])
        cp = fa.cut_polynomial(a)
        assert cp.is_self_inversive()


class TestLeeYangThreshold:
    def test_defining_equation(self):
        from palinlace.arith import binomial
        for n in (4, 6, 9):
            lam = fa.ly_threshold(n)
            with working_precision():
                val = sum(binomial(n, k) * lam ** (k * (n - k))
                          for k in range(1, n // 2 + 1))
                assert abs(val - 1) < mpmath.mpf("1e-10")

    def test_ll_chain(self):
        # entries bounded by the threshold => trim cut polynomial has il <= 1
        n = 4
        lam = fa.ly_threshold(n)
        with working_precision():
            a = [[lam * (1 if (i + j) % 2 else -1) if i != j else mpmath.mpf(1)
                  for j in range(n)] for i in range(n)]
            for i in range(n):
                for j in range(n):
                    a[j][i] = a[i][j]
        cp = fa.cut_polynomial(a)
        from palinlace.polycore import trim_part
        p = trim_part(cp)
        assert ll_bound(p) <= 1 + mpmath.mpf("1e-12")
        res = interlace_number(p)
        with working_precision():
            assert res.value <= 1 + mpmath.mpf("1e-9")


class TestFamilySpec:
    def test_dispatch(self):
        spec = fa.FamilySpec("geometric", {"n": 6})
        assert spec.build() == ge(6)
        spec = fa.FamilySpec("two-interval", {"params": [(5, 1), (5, 2), (5, 3)]})
        assert spec.build().darga == 6

    def test_unknown_family(self):
        with pytest.raises(InvalidParameter):
            fa.FamilySpec("nope", {}).build()
