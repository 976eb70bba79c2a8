"""Multiplicative arithmetic functions used by bounds and families."""

from __future__ import annotations

from math import gcd


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius needs n >= 1")
    m, primes = n, prime_factors(n)
    for p in primes:
        if m % (p * p) == 0:
            return 0
        m //= p
    return (-1) ** len(primes)


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("phi needs n >= 1")
    out = n
    for p in prime_factors(n):
        out = out // p * (p - 1)
    return out


def jordan_totient(k: int, n: int) -> int:
    """J_k(n) = n^k * prod over primes p | n of (1 - p^-k); J_1 = phi."""
    if n < 1 or k < 0:
        raise ValueError("jordan totient needs n >= 1, k >= 0")
    if k == 0:
        return 1 if n == 1 else 0
    out = n**k
    for p in prime_factors(n):
        out = out // p**k * (p**k - 1)
    return out


def ramanujan_sum(n: int, j: int) -> int:
    """c_n(j) by the von Sterneck formula: mu(n/g) phi(n) / phi(n/g), g = gcd(n, j)."""
    if n < 1:
        raise ValueError("ramanujan sum needs n >= 1")
    g = gcd(n, j % n) if j % n != 0 else n
    m = n // g
    return mobius(m) * euler_phi(n) // euler_phi(m)


def ramanujan_sum_bruteforce(n: int, j: int) -> int:
    """Independent O(n) cross-check: sum of cos(2 pi j k / n) over k coprime to n.

    Evaluated exactly by grouping k with n - k; usable for n <= a few hundred.
    """
    import mpmath

    with mpmath.workprec(80):
        total = mpmath.mpf(0)
        for k in range(1, n + 1):
            if gcd(k, n) == 1:
                total += mpmath.cospi(mpmath.mpf(2 * j * k) / n)
        return int(mpmath.nint(total))


def divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def legendre_symbol(a: int, p: int) -> int:
    """(a|p) for odd prime p, via Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return 1 if t == 1 else -1


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(min(k, n - k)):
        out = out * (n - i) // (i + 1)
    return out
