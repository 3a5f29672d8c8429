from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from euler_forge import (
    CrtAccumulator,
    PrimeContext,
    Residue,
    StabilizationError,
    build_euler_cache,
    delta,
    pair_convolution_exact,
    pair_convolution_mod,
    reconstruct_t,
    reconstruct_t_details,
    crt_push,
    sieve_primes,
    triple_convolution_exact,
    triple_convolution_mod,
)


def test_mod_convolutions_reduce_exact(cache80):
    ctx = PrimeContext(13)
    for n in range(0, 40, 2):
        assert pair_convolution_mod(cache80, ctx, n).value == pair_convolution_exact(n, cache80) % 13
        assert triple_convolution_mod(cache80, ctx, n).value == triple_convolution_exact(n, cache80) % 13


def test_delta_cases():
    assert delta(5, 2) == 1
    assert delta(3, 1) == 1
    assert delta(5, 0) == 0
    assert delta(7, 3) == 1
    assert delta(7, 1) == 0
    assert delta(199, 99) == 1
    with pytest.raises(ValueError):
        delta(5, -1)
    with pytest.raises(ValueError):
        delta(2, 1)


def test_crt_push_hand_example():
    acc = crt_push(CrtAccumulator(), 5, Residue(3, 5))
    assert acc.modulus_product == 5
    assert acc.combined_residue == 3
    assert acc.last_balanced == -2
    assert acc.stable_count == 0

    acc = crt_push(acc, 7, Residue(3, 7))
    assert acc.modulus_product == 35
    assert acc.combined_residue == 3
    assert acc.last_balanced == 3
    assert acc.stable_count == 0

    acc = crt_push(acc, 11, Residue(3, 11))
    assert acc.last_balanced == 3
    assert acc.stable_count == 1


def test_crt_push_rejects_bad_input():
    acc = crt_push(CrtAccumulator(), 5, Residue(2, 5))
    with pytest.raises(ValueError):
        crt_push(acc, 5, Residue(1, 5))
    with pytest.raises(ValueError):
        crt_push(acc, 7, Residue(1, 5))


def test_accumulator_balanced_property():
    acc = CrtAccumulator()
    assert acc.balanced == 0
    acc = crt_push(acc, 7, Residue(5, 7))
    assert acc.balanced == -2


@settings(deadline=None)
@given(constant=st.integers(min_value=-(10**12), max_value=10**12))
def test_crt_recovers_any_constant(constant):
    # primes through 59 multiply far past 2*10**12, so the balanced lift
    # must land on the constant and then sit still for the trailing pushes
    acc = CrtAccumulator()
    for p in sieve_primes(3, 60):
        acc = crt_push(acc, p, Residue(constant % p, p))
    assert acc.balanced == constant
    assert acc.last_balanced == constant
    assert acc.stable_count >= 3


def test_reconstruct_known_constants(cache600):
    assert [reconstruct_t(n, cache600) for n in range(4)] == [3, -9, 68, -1068]


def test_reconstruct_details(cache600):
    detail = reconstruct_t_details(0, cache600)
    assert detail.primes == (3, 5, 7, 11, 13)
    assert detail.value == 3
    # every prime consumed must exceed 2n+1
    detail = reconstruct_t_details(4, cache600)
    assert all(p > 9 for p in detail.primes)
    assert detail.value == 29541


def test_reconstruct_higher_stability_same_value(cache600):
    assert reconstruct_t(2, cache600, stability=6) == 68


def test_reconstruct_validation(cache600):
    with pytest.raises(ValueError):
        reconstruct_t(-1, cache600)
    with pytest.raises(ValueError):
        reconstruct_t(0, cache600, stability=0)


def test_reconstruct_exhaustion_raises():
    tiny = build_euler_cache(14)
    assert reconstruct_t(0, tiny) == 3
    with pytest.raises(StabilizationError):
        reconstruct_t(1, tiny)
