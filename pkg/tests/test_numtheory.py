"""Primitive arithmetic: primality, factorization, divisors, rationals."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from korselt.numtheory import (
    NotSquarefree,
    ZeroDenominator,
    divisors,
    factor_squarefree,
    factorize,
    format_rational,
    is_prime,
    make_rational,
    parse_rational,
    primes_upto,
    signed_divisors,
)

SIEVE_LIMIT = 10**6
PRIME_FLAGS = None


def _prime_flags():
    global PRIME_FLAGS
    if PRIME_FLAGS is None:
        flags = bytearray([1]) * (SIEVE_LIMIT + 1)
        flags[0] = flags[1] = 0
        for p in range(2, int(SIEVE_LIMIT**0.5) + 1):
            if flags[p]:
                flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
        PRIME_FLAGS = flags
    return PRIME_FLAGS


def test_is_prime_knowns():
    assert is_prime(2)
    assert not is_prime(1)
    assert not is_prime(0)
    assert not is_prime(561)  # 3 * 11 * 17
    assert is_prime(2**31 - 1)
    assert not is_prime(2**32 + 1)  # 641 * 6700417


def test_is_prime_agrees_with_sieve_up_to_1e6():
    flags = _prime_flags()
    for n in range(SIEVE_LIMIT + 1):
        if is_prime(n) != bool(flags[n]):
            pytest.fail(f"is_prime({n}) = {is_prime(n)} disagrees with the sieve")


def test_primes_upto_matches_sieve():
    flags = _prime_flags()
    assert primes_upto(10**4) == [n for n in range(10**4 + 1) if flags[n]]
    assert primes_upto(1) == []
    assert primes_upto(2) == [2]


def test_factor_squarefree_knowns():
    assert factor_squarefree(22) == [2, 11]
    assert factor_squarefree(6499) == [67, 97]
    assert factor_squarefree(2) == [2]
    with pytest.raises(NotSquarefree):
        factor_squarefree(12)
    with pytest.raises(NotSquarefree):
        factor_squarefree(4)
    with pytest.raises(ValueError):
        factor_squarefree(1)


def test_factor_squarefree_reconstructs_all_squarefree_up_to_1e5():
    flags = _prime_flags()
    for n in range(2, 10**5 + 1):
        try:
            factors = factor_squarefree(n)
        except NotSquarefree:
            continue
        prod = 1
        for p in factors:
            assert flags[p], f"non-prime factor {p} of {n}"
            prod *= p
        assert prod == n
        assert factors == sorted(set(factors))


@given(st.integers(min_value=10**5, max_value=10**6))
@settings(max_examples=300, deadline=None)
def test_factor_squarefree_sampled_large(n):
    try:
        factors = factor_squarefree(n)
    except NotSquarefree:
        return
    prod = 1
    for p in factors:
        assert is_prime(p)
        prod *= p
    assert prod == n


def test_signed_divisors_knowns():
    assert signed_divisors(1) == [-1, 1]
    assert signed_divisors(6) == [-6, -3, -2, -1, 1, 2, 3, 6]
    # 90 = 2 * 3^2 * 5 has 12 positive divisors
    assert len(signed_divisors(90)) == 24


@given(st.integers(min_value=1, max_value=10**4))
@settings(max_examples=300, deadline=None)
def test_signed_divisors_properties(m):
    divs = signed_divisors(m)
    assert divs == sorted(divs)
    assert 0 not in divs
    assert all(m % d == 0 for d in divs)
    positive = [d for d in divs if d > 0]
    assert positive == [d for d in range(1, m + 1) if m % d == 0]
    assert len(divs) == 2 * len(positive)


def test_divisors_sorted_positive():
    assert divisors(1) == [1]
    assert divisors(28) == [1, 2, 4, 7, 14, 28]


def test_factorize_knowns():
    assert factorize(1) == []
    assert factorize(12) == [(2, 2), (3, 1)]
    assert factorize(666917) == [(757, 1), (881, 1)]


def test_make_rational_knowns():
    assert make_rational(14, 4) == Fraction(7, 2)
    r = make_rational(-3, -6)
    assert (r.numerator, r.denominator) == (1, 2)
    r = make_rational(95, 9)
    assert (r.numerator, r.denominator) == (95, 9)
    r = make_rational(3, -6)
    assert (r.numerator, r.denominator) == (-1, 2)
    with pytest.raises(ZeroDenominator):
        make_rational(1, 0)


@given(
    st.integers(min_value=-10**6, max_value=10**6),
    st.integers(min_value=-10**6, max_value=10**6).filter(lambda b: b != 0),
    st.integers(min_value=-100, max_value=100).filter(lambda k: k != 0),
)
def test_make_rational_canonical_form(a, b, k):
    assert make_rational(a * k, b * k) == make_rational(a, b)


@given(
    st.integers(min_value=-10**9, max_value=10**9),
    st.integers(min_value=-10**9, max_value=10**9).filter(lambda b: b != 0),
)
def test_rational_string_round_trip(a, b):
    r = make_rational(a, b)
    assert parse_rational(format_rational(r)) == r


def test_format_rational_integers_without_denominator():
    assert format_rational(Fraction(4)) == "4"
    assert format_rational(Fraction(7, 2)) == "7/2"
    assert format_rational(Fraction(-7, 2)) == "-7/2"
    assert format_rational(12) == "12"


def test_parse_rational_rejects_garbage():
    with pytest.raises(ValueError):
        parse_rational("1/2/3")
    with pytest.raises(ValueError):
        parse_rational("x")
    with pytest.raises(ZeroDenominator):
        parse_rational("3/0")
