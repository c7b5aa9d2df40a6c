"""Factoring machinery against the trial-division oracle."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gf2perfect.catalog import mersenne, name_of, prime_family, two_mersenne
from gf2perfect.factorize import (
    FactorMap,
    factor_full,
    factor_over_family,
    is_irreducible,
    is_squarefree,
)
from gf2perfect.gf2poly import ONE, Poly, X, X1
from gf2perfect.sigma import sigma_prime_power
from oracles import i_factor, i_is_prime

deg12 = st.integers(min_value=1, max_value=(1 << 13) - 1)
deg96 = st.integers(min_value=1, max_value=(1 << 97) - 1)


def test_irreducibility_exhaustive_through_degree_10():
    for bits in range(2, 1 << 11):
        assert is_irreducible(Poly(bits)) == i_is_prime(bits), bin(bits)


def test_irreducibility_of_constants():
    with pytest.raises(ValueError):
        is_irreducible(Poly(0))
    with pytest.raises(ValueError):
        is_irreducible(ONE)


@given(deg12)
def test_factor_full_matches_trial_division(bits):
    got = [(p.bits, e) for p, e in factor_full(Poly(bits))]
    assert got == i_factor(bits)


@given(deg96)
def test_factor_full_invariants(bits):
    fm = factor_full(Poly(bits))
    assert fm.product().bits == bits
    assert list(fm) == sorted(fm, key=lambda pe: pe[0].bits)
    for p, e in fm:
        assert e >= 1
        assert is_irreducible(p)


@given(deg96)
@settings(max_examples=25)
def test_factor_full_is_deterministic(bits):
    assert factor_full(Poly(bits)) == factor_full(Poly(bits))


def test_factor_of_one_is_empty():
    fm = factor_full(ONE)
    assert len(fm) == 0 and fm.product() == ONE


def test_factor_map_merges_and_orders():
    m1 = Poly(0b111)
    fm = FactorMap([(X, 1), (m1, 2), (X, 3)])
    assert [(p.bits, e) for p, e in fm] == [(2, 4), (7, 2)]
    assert fm.omega == 2
    assert fm.exponent(X) == 4
    assert fm.exponent(X1) == 0
    assert fm.product() == X ** 4 * m1 ** 2
    assert fm.text() == "(x)^4 * (x^2+x+1)^2"
    assert fm.to_json()["factors"] == [
        {"prime": "x", "exp": 4},
        {"prime": "x^2+x+1", "exp": 2},
    ]


def test_factor_map_rejects_bad_exponent():
    with pytest.raises(ValueError):
        FactorMap([(X, 0)])


def test_factor_over_family_exact():
    fam = prime_family()
    fm = factor_over_family(sigma_prime_power(X, 14), fam)
    assert fm is not None
    expected = FactorMap(
        [(mersenne(1), 1), (mersenne(4), 1), (mersenne(5), 1), (two_mersenne(1), 1)]
    )
    assert fm == expected


def test_factor_over_family_rejects_outside_primes():
    fam = prime_family()
    # degree-5 irreducible that is not among the 28 catalog primes
    stray = Poly.parse("x^5+x^4+x^3+x+1")
    assert is_irreducible(stray)
    assert name_of(stray) is None
    assert factor_over_family(mersenne(1) * stray, fam) is None
    assert factor_over_family(stray, fam) is None


def test_factor_over_family_needs_whole_family():
    p = mersenne(2) * mersenne(3)
    assert factor_over_family(p, (mersenne(2),)) is None
    assert factor_over_family(p, (mersenne(2), mersenne(3))) is not None


def test_squarefree():
    assert is_squarefree(X * X1)
    assert not is_squarefree(X ** 2)
    assert not is_squarefree(mersenne(1) ** 2)
    assert is_squarefree(mersenne(1) * mersenne(2))
