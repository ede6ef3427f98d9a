from random import Random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from loeschian import (
    GeneralForm,
    PrimeClass,
    RHO_SEED,
    U64_MAX,
    classify_prime,
    factor,
    general_form,
    is_loeschian,
    is_prime,
)
from oracles import factor_with_table, sieve_primes, smallest_factor_table


def test_is_prime_known_values():
    assert not is_prime(1)
    assert is_prime(7)
    # strong pseudoprime to several small bases
    assert not is_prime(3215031751)


def test_is_prime_edges():
    assert not is_prime(0)
    assert is_prime(2)
    assert is_prime(3)
    assert not is_prime(4)
    with pytest.raises(ValueError):
        is_prime(-7)
    with pytest.raises(ValueError):
        is_prime(U64_MAX + 1)


def test_is_prime_matches_sieve_to_one_million():
    limit = 10**6
    flagged = set(sieve_primes(limit))
    for n in range(limit + 1):
        assert is_prime(n) == (n in flagged)


def test_is_prime_matches_sympy_on_large_values():
    rng = Random(20240817)
    probes = [rng.randrange(2**62, 2**64) for _ in range(300)]
    probes += [U64_MAX, U64_MAX - 1, 2**63 - 25, 2**61 - 1, 3825123056546413051]
    for n in probes:
        assert is_prime(n) == sympy.isprime(n), n


def test_factor_known_values():
    assert factor(1) == []
    assert factor(91) == [(7, 1), (13, 1)]
    assert factor(147) == [(3, 1), (7, 2)]


def test_factor_rejects_bad_input():
    with pytest.raises(ValueError):
        factor(0)
    with pytest.raises(ValueError):
        factor(U64_MAX + 1)


def test_factor_recomposes_to_one_million():
    limit = 10**6
    spf = smallest_factor_table(limit)
    for n in range(1, limit + 1):
        got = factor(n)
        assert got == factor_with_table(n, spf), n


def test_factor_matches_sympy_on_hard_composites():
    rng = Random(97)
    for _ in range(20):
        p = sympy.nextprime(rng.randrange(2**29, 2**31))
        q = sympy.nextprime(rng.randrange(2**29, 2**31))
        n = p * q
        expected = sorted(sympy.factorint(n).items())
        assert factor(n) == expected
    # a few squares and prime powers of the same size
    for _ in range(5):
        p = sympy.nextprime(rng.randrange(2**29, 2**31))
        assert factor(p * p) == [(p, 2)]


def test_factor_is_deterministic_and_seed_independent_in_value():
    n = 16141829676117908357  # 7 * 1073754191 * 2147582461
    first = factor(n)
    assert factor(n) == first
    assert factor(n, seed=12345) == first
    assert first == sorted(sympy.factorint(n).items())


@settings(max_examples=200)
@given(st.integers(min_value=1, max_value=10**9))
def test_factor_round_trip(n):
    total = 1
    last = 1
    for p, e in factor(n):
        assert p > last
        assert e >= 1
        assert is_prime(p)
        total *= p**e
        last = p
    assert total == n


def test_classify_prime_known_values():
    assert classify_prime(3) is PrimeClass.THREE
    assert classify_prime(13) is PrimeClass.ONE_MOD_6
    assert classify_prime(5) is PrimeClass.RESIDUAL
    assert classify_prime(2) is PrimeClass.RESIDUAL


def test_classify_prime_rejects_composites():
    with pytest.raises(ValueError):
        classify_prime(6)
    with pytest.raises(ValueError):
        classify_prime(1)


def test_classify_prime_partition_to_ten_thousand():
    for p in sieve_primes(10**4):
        cls = classify_prime(p)
        assert (cls is PrimeClass.ONE_MOD_6) == (p % 6 == 1)
        assert (cls is PrimeClass.THREE) == (p == 3)


def test_general_form_known_values():
    assert general_form(12) == GeneralForm(2, 1, [])
    assert general_form(147) == GeneralForm(1, 1, [(7, 2)])
    assert general_form(10) is None


def test_general_form_rejects_bad_input():
    with pytest.raises(ValueError):
        general_form(0)


@settings(max_examples=300)
@given(st.integers(min_value=1, max_value=10**9))
def test_general_form_recomposes(n):
    shape = general_form(n)
    factors = dict(factor(n))
    residual_odd = any(
        p != 3 and p % 6 != 1 and e % 2 for p, e in factors.items()
    )
    if residual_odd:
        assert shape is None
        return
    assert shape is not None
    total = shape.scale**2 * 3**shape.power_of_three
    for p, e in shape.primes:
        assert p % 6 == 1
        assert e == factors[p]
        total *= p**e
    assert total == n
    assert shape.scale % 3 != 0
    for p, _ in factor(shape.scale):
        assert p != 3 and p % 6 != 1


def test_general_form_agrees_with_representability():
    for n in range(1, 10**4 + 1):
        assert (general_form(n) is not None) == is_loeschian(n).representable
