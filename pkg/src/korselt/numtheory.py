"""Exact integer primitives: primality, factorization, divisors, reduced rationals.

Everything here is deterministic and exact; no probabilistic answers.
Python integers are arbitrary precision, so no intermediate can overflow.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

__all__ = [
    "NotSquarefree",
    "ZeroDenominator",
    "Rational",
    "is_prime",
    "primes_upto",
    "factorize",
    "factor_squarefree",
    "divisors",
    "signed_divisors",
    "make_rational",
    "format_rational",
    "parse_rational",
]

# Reduced rational with positive denominator; Fraction already enforces
# gcd(num, den) = 1 and den >= 1 on construction.
Rational = Fraction


class NotSquarefree(ValueError):
    """A prime divides the input at least twice."""


class ZeroDenominator(ValueError):
    """Rational construction with denominator zero."""


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Verified deterministic Miller-Rabin witness set for all n < 3.3 * 10^24,
# which covers the full supported range (n <= 2^63) with a large margin.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Exact primality test, deterministic over the whole supported range."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_upto(n: int) -> list[int]:
    """All primes <= n, ascending (sieve of Eratosthenes)."""
    if n < 2:
        return []
    sieve = bytearray(b"\x01") * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            start = p * p
            sieve[start : n + 1 : p] = b"\x00" * ((n - start) // p + 1)
    return [i for i, flag in enumerate(sieve) if flag]


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as ascending (prime, exponent) pairs."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    out: list[tuple[int, int]] = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    # trial division by 6k +/- 1
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                out.append((p, e))
        f += 6
    if n > 1:
        out.append((n, 1))
    return out


def factor_squarefree(n: int) -> list[int]:
    """Distinct prime factors of a squarefree n >= 2, strictly increasing.

    Raises NotSquarefree if any prime divides n twice; such inputs are
    outside the supported domain and must never be silently accepted.
    """
    if n < 2:
        raise ValueError(f"factor_squarefree requires n >= 2, got {n}")
    factors = factorize(n)
    for p, e in factors:
        if e > 1:
            raise NotSquarefree(f"{p}^{e} divides {n}")
    return [p for p, _ in factors]


def divisors(m: int) -> list[int]:
    """Positive divisors of m >= 1, ascending."""
    if m < 1:
        raise ValueError(f"divisors requires m >= 1, got {m}")
    divs = [1]
    for p, e in factorize(m):
        pk = 1
        block = list(divs)
        for _ in range(e):
            pk *= p
            divs.extend(d * pk for d in block)
    divs.sort()
    return divs


def signed_divisors(m: int) -> list[int]:
    """All d with d | m, both signs, no zero; ascending; length 2*d(m)."""
    pos = divisors(m)
    return [-d for d in reversed(pos)] + pos


def make_rational(num: int, den: int) -> Fraction:
    """Reduced rational with positive denominator; sign carried by the numerator."""
    if den == 0:
        raise ZeroDenominator(f"{num}/0 is not a rational")
    return Fraction(num, den)


def format_rational(value: Fraction | int) -> str:
    """Render exactly: "a/b" in lowest terms, integers without "/1"."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "a" or "a/b" back to the exact reduced rational."""
    parts = text.strip().split("/")
    if len(parts) == 1:
        return Fraction(int(parts[0]))
    if len(parts) == 2:
        return make_rational(int(parts[0]), int(parts[1]))
    raise ValueError(f"not a rational: {text!r}")


def _spf_sieve(n: int) -> list[int]:
    """Smallest-prime-factor table for 0..n (spf[k] = 0 for k < 2)."""
    spf = list(range(n + 1))
    spf[0] = spf[1] = 0
    for p in range(2, isqrt(n) + 1):
        if spf[p] == p:
            for k in range(p * p, n + 1, p):
                if spf[k] == k:
                    spf[k] = p
    return spf
