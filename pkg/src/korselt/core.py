"""Korselt bases and Korselt sets of squarefree semiprimes.

A reduced rational a1/a2 (a2 >= 1) is a base of a squarefree composite n
when a1/a2 is neither 0 nor n and a2*r - a1 divides a2*n - a1 for every
prime r | n.  For n = p*q the complete rational set is found by divisor-pair
enumeration; an exhaustive box scan of the same search region serves as an
independent oracle.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator

from .numtheory import (
    NotSquarefree,
    _spf_sieve,
    divisors,
    factor_squarefree,
    factorize,
    is_prime,
    primes_upto,
    signed_divisors,
)

__all__ = [
    "NotSemiprime",
    "ScaleGuard",
    "ORACLE_LIMIT",
    "Semiprime",
    "KorseltSet",
    "semiprime",
    "semiprime_from_n",
    "iter_semiprimes",
    "is_korselt_base",
    "is_base",
    "is_carmichael",
    "q_korselt_set",
    "q_korselt_set_oracle",
    "z_korselt_set",
    "korselt_weights",
]

ORACLE_LIMIT = 10**6


class NotSemiprime(ValueError):
    """Input is not a product of two distinct primes."""


class ScaleGuard(ValueError):
    """Input exceeds the bound for the quadratic-cost oracle."""


@dataclass(frozen=True)
class Semiprime:
    """n = p*q with p < q prime, plus the division pair q = i*p + s, 1 <= s <= p-1."""

    p: int
    q: int
    n: int
    i: int
    s: int


@dataclass(frozen=True)
class KorseltSet:
    """The rational Korselt set of n, split into integer and non-integer parts.

    Both parts are sorted ascending; fractional elements have denominator >= 2.
    """

    n: int
    integer_part: tuple[int, ...]
    fractional_part: tuple[Fraction, ...]


def semiprime(p: int, q: int) -> Semiprime:
    """Validated semiprime from its two prime factors."""
    if not (0 < p < q) or not is_prime(p) or not is_prime(q):
        raise NotSemiprime(f"need two distinct primes p < q, got {p}, {q}")
    return Semiprime(p, q, p * q, q // p, q % p)


def semiprime_from_n(n: int) -> Semiprime:
    """Validated semiprime from its value; rejects everything else."""
    if n < 2:
        raise NotSemiprime(f"{n} is not a semiprime")
    try:
        factors = factor_squarefree(n)
    except NotSquarefree as exc:
        raise NotSemiprime(f"{n} is not squarefree: {exc}") from exc
    if len(factors) != 2:
        raise NotSemiprime(f"{n} has {len(factors)} prime factor(s), need exactly 2")
    return semiprime(factors[0], factors[1])


def iter_semiprimes(p_max: int, q_max: int) -> Iterator[Semiprime]:
    """All semiprimes with p <= p_max and q <= q_max, ordered by (p, q)."""
    primes = primes_upto(q_max)
    for ip, p in enumerate(primes):
        if p > p_max:
            break
        for q in primes[ip + 1 :]:
            yield Semiprime(p, q, p * q, q // p, q % p)


def _holds(p: int, q: int, n: int, a1: int, a2: int) -> bool:
    """Raw definition test for n = p*q; excludes 0 and n themselves."""
    if a1 == 0 or (a2 == 1 and a1 == n):
        return False
    dp = a2 * p - a1
    dq = a2 * q - a1
    if dp == 0 or dq == 0:
        return False
    big = a2 * n - a1
    return big % dp == 0 and big % dq == 0


def is_base(sp: Semiprime, alpha: Fraction | int) -> bool:
    """Definition test for a known semiprime, without refactoring n."""
    alpha = Fraction(alpha)
    return _holds(sp.p, sp.q, sp.n, alpha.numerator, alpha.denominator)


def is_korselt_base(n: int, alpha: Fraction | int) -> bool:
    """Is the reduced rational alpha a base of the squarefree composite n?

    Works for any number of prime factors.  Raises NotSquarefree for inputs
    with a repeated factor and ValueError for primes and units.
    """
    factors = factor_squarefree(n)
    if len(factors) < 2:
        raise ValueError(f"{n} is prime; a composite is required")
    alpha = Fraction(alpha)
    a1, a2 = alpha.numerator, alpha.denominator
    if a1 == 0 or alpha == n:
        return False
    big = a2 * n - a1
    for r in factors:
        d = a2 * r - a1
        if d == 0 or big % d:
            return False
    return True


def is_carmichael(n: int) -> bool:
    """Squarefree composite with r - 1 | n - 1 for every prime r | n."""
    if n < 4:
        return False
    factors = factorize(n)
    if len(factors) < 2 or any(e > 1 for _, e in factors):
        return False
    return all((n - 1) % (r - 1) == 0 for r, _ in factors)


def q_korselt_set(sp: Semiprime) -> KorseltSet:
    """The complete rational Korselt set of a semiprime.

    For a reduced member a1/a2 the quantities dp = a2*p - a1 and
    dq = a2*q - a1 satisfy dp | p*(q-1) and dq | q*(p-1) (reduce
    a2*n - a1 modulo dp, then cancel a2 using gcd(a1, a2) = 1), while
    dq - dp = a2*(q-p).  So every member arises from a signed divisor pair
    whose difference is a positive multiple of q - p, which is a finite,
    complete enumeration.  Candidates are still re-tested against the raw
    definition before being admitted.
    """
    p, q, n = sp.p, sp.q, sp.n
    gap = q - p
    by_residue: dict[int, list[int]] = {}
    for dq in signed_divisors(q * (p - 1)):
        by_residue.setdefault(dq % gap, []).append(dq)
    ints: list[int] = []
    fracs: list[Fraction] = []
    for dp in signed_divisors(p * (q - 1)):
        klass = by_residue.get(dp % gap)
        if not klass:
            continue
        for dq in klass[bisect_right(klass, dp) :]:
            a2 = (dq - dp) // gap
            a1 = a2 * p - dp
            if gcd(a1, a2) != 1:
                continue
            if not _holds(p, q, n, a1, a2):
                continue
            if a2 == 1:
                ints.append(a1)
            else:
                fracs.append(Fraction(a1, a2))
    ints.sort()
    fracs.sort()
    return KorseltSet(n, tuple(ints), tuple(fracs))


def _divisors_from_spf(m: int, spf: list[int]) -> list[int]:
    """Positive divisors of m using a smallest-prime-factor table (unsorted)."""
    divs = [1]
    while m > 1:
        p = spf[m]
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        pk = 1
        block = divs[:]
        for _ in range(e):
            pk *= p
            divs.extend(d * pk for d in block)
    return divs


def q_korselt_set_oracle(sp: Semiprime) -> KorseltSet:
    """Independent oracle: exhaustive scan of the whole candidate box.

    Walks every a2 from 1 to (p*(q-1) + q*(p-1)) // (q-p) and every a1 in
    the window |a2*p - a1| <= p*(q-1), testing the raw definition.  Within
    one a2 the first divisibility condition alone selects the window points
    (a2*n - a1 is a2*p*(q-1) plus the window offset), so the scan walks the
    divisors of a2*p*(q-1) instead of testing the window point by point;
    every survivor is then re-tested literally.  No pair enumeration, no
    residue matching: quadratic cost, hence the scale guard.
    """
    n = sp.n
    if n > ORACLE_LIMIT:
        raise ScaleGuard(f"oracle limited to n <= {ORACLE_LIMIT}, got {n}")
    p, q = sp.p, sp.q
    gap = q - p
    kp = p * (q - 1)
    kq = q * (p - 1)
    a2_max = (kp + kq) // gap
    kp_divs = divisors(kp)
    spf = _spf_sieve(a2_max)
    ints: list[int] = []
    fracs: list[Fraction] = []
    for a2 in range(1, a2_max + 1):
        a2p = a2 * p
        shift = a2 * gap
        big0 = a2 * n - a2p
        # every divisor of a2*kp splits as u*v with u | a2 and v | kp
        seen: set[int] = set()
        for u in _divisors_from_spf(a2, spf):
            for v in kp_divs:
                d = u * v
                if d > kp:
                    break
                if d in seen:
                    continue
                seen.add(d)
                if (big0 + d) % (shift + d) == 0:
                    _admit(p, q, n, a2, a2p - d, ints, fracs)
                if shift != d and (big0 - d) % (shift - d) == 0:
                    _admit(p, q, n, a2, a2p + d, ints, fracs)
    ints = sorted(set(ints))
    fracs = sorted(set(fracs))
    return KorseltSet(n, tuple(ints), tuple(fracs))


def _admit(
    p: int,
    q: int,
    n: int,
    a2: int,
    a1: int,
    ints: list[int],
    fracs: list[Fraction],
) -> None:
    """Append a1/a2 after re-testing the definition from scratch."""
    if gcd(a1, a2) != 1:
        return
    if not _holds(p, q, n, a1, a2):
        return
    if a2 == 1:
        ints.append(a1)
    else:
        fracs.append(Fraction(a1, a2))


def z_korselt_set(sp: Semiprime) -> list[int]:
    """The integer Korselt set, by direct scan of beta = p - d over d | p*(q-1).

    Independent of q_korselt_set's pair matching; the two must agree on the
    integer part.
    """
    p, q, n = sp.p, sp.q, sp.n
    out = []
    for d in signed_divisors(p * (q - 1)):
        beta = p - d
        if beta == 0 or beta == n or beta == q:
            continue
        if (n - beta) % d == 0 and (n - beta) % (q - beta) == 0:
            out.append(beta)
    out.sort()
    return out


def korselt_weights(ks: KorseltSet) -> tuple[int, int, int]:
    """(integer weight, non-integer weight, total weight)."""
    z = len(ks.integer_part)
    qz = len(ks.fractional_part)
    return z, qz, z + qz
