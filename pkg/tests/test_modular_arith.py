from __future__ import annotations

from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from euler_forge import (
    PrimeContext,
    Residue,
    chi_minus_one,
    is_prime,
    mod_pow,
    odd_power_sum,
    power_sum,
    sieve_primes,
    wolstenholme_check,
)

SMALL_PRIMES = sieve_primes(3, 61)


def test_residue_validation():
    Residue(0, 5)
    Residue(4, 5)
    with pytest.raises(ValueError):
        Residue(5, 5)
    with pytest.raises(ValueError):
        Residue(-1, 5)
    with pytest.raises(ValueError):
        Residue(0, 1)


def test_residue_balanced():
    assert Residue(0, 7).balanced == 0
    assert Residue(3, 7).balanced == 3
    assert Residue(4, 7).balanced == -3
    assert Residue(6, 7).balanced == -1
    assert int(Residue(6, 7)) == 6


def test_sieve_known_window():
    assert sieve_primes(2, 30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert sieve_primes(90, 96) == []
    assert sieve_primes(7, 7) == [7]
    assert sieve_primes(10, 5) == []
    with pytest.raises(ValueError):
        sieve_primes(1, 10)


@given(lo=st.integers(min_value=2, max_value=400), span=st.integers(min_value=0, max_value=200))
def test_sieve_agrees_with_trial_division(lo, span):
    hi = lo + span
    assert sieve_primes(lo, hi) == [n for n in range(lo, hi + 1) if is_prime(n)]


def test_chi_minus_one():
    assert [chi_minus_one(j) for j in (1, 3, 5, 7, 9, 11)] == [1, -1, 1, -1, 1, -1]
    with pytest.raises(ValueError):
        chi_minus_one(4)
    with pytest.raises(ValueError):
        chi_minus_one(0)
    with pytest.raises(ValueError):
        chi_minus_one(-3)


@given(j=st.integers(min_value=0, max_value=500))
def test_chi_closed_form(j):
    odd = 2 * j + 1
    assert chi_minus_one(odd) == (-1) ** ((odd - 1) // 2)


@given(
    base=st.integers(min_value=0, max_value=96),
    exponent=st.integers(min_value=0, max_value=300),
)
def test_mod_pow_matches_builtin(base, exponent):
    r = mod_pow(Residue(base, 97), exponent)
    assert r == Residue(pow(base, exponent, 97), 97)


def test_mod_pow_zero_conventions():
    assert mod_pow(Residue(0, 5), 0).value == 1
    assert mod_pow(Residue(0, 5), 3).value == 0
    with pytest.raises(ValueError):
        mod_pow(Residue(2, 5), -1)


def test_prime_context_rejects_non_primes():
    for bad in (0, 1, 2, 4, 9, 15, 91):
        with pytest.raises(ValueError):
            PrimeContext(bad)


def test_prime_context_tables():
    ctx = PrimeContext(97)
    assert ctx.fact[0] == 1 and ctx.inv_fact[0] == 1
    for k in range(97):
        assert ctx.fact[k] * ctx.inv_fact[k] % 97 == 1
    assert ctx.chi_p == 1  # 97 = 1 mod 4
    assert PrimeContext(7).chi_p == -1
    assert ctx.residue(-1) == Residue(96, 97)


@given(n=st.integers(min_value=0, max_value=60), k=st.integers(min_value=-3, max_value=63))
def test_context_binomial_matches_comb(n, k):
    ctx = PrimeContext(61)
    expected = comb(n, k) % 61 if 0 <= k <= n else 0
    assert ctx.binomial(n, k) == expected


def test_context_binomial_bounds():
    ctx = PrimeContext(7)
    with pytest.raises(ValueError):
        ctx.binomial(7, 2)
    with pytest.raises(ValueError):
        ctx.binomial(-1, 0)


def test_power_sum_two_case_law():
    for p in SMALL_PRIMES:
        ctx = PrimeContext(p)
        for e in range(41):
            expected = p - 1 if e % (p - 1) == 0 else 0
            assert power_sum(ctx, e).value == expected, (p, e)
    with pytest.raises(ValueError):
        power_sum(PrimeContext(5), -1)


def test_odd_power_sum_two_case_law():
    # even exponents only; odd ones never feed the character sums
    for p in SMALL_PRIMES:
        ctx = PrimeContext(p)
        for e in range(0, 41, 2):
            expected = (p - 1) // 2 if e % (p - 1) == 0 else 0
            assert odd_power_sum(ctx, e).value == expected, (p, e)


def test_odd_power_sum_small_cases():
    assert odd_power_sum(PrimeContext(5), 0).value == 2
    assert odd_power_sum(PrimeContext(5), 2).value == 0
    assert odd_power_sum(PrimeContext(7), 6).value == 3


def test_wolstenholme():
    for p in sieve_primes(5, 199):
        assert wolstenholme_check(PrimeContext(p)).value == 0, p
    with pytest.raises(ValueError):
        wolstenholme_check(PrimeContext(3))
