from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import bernoulli_euler as be
from bernoulli_euler import exact_core as ec

import oracles


def test_small_bernoulli_values():
    assert be.bernoulli(0) == 1
    assert be.bernoulli(1) == Fraction(-1, 2)
    assert be.bernoulli(2) == Fraction(1, 6)
    assert be.bernoulli(4) == Fraction(-1, 30)
    assert be.bernoulli(12) == Fraction(-691, 2730)
    assert be.bernoulli(13) == 0


def test_small_euler_values():
    assert [be.euler_number(n) for n in range(9)] == [1, 0, -1, 0, 5, 0, -61, 0, 1385]


def test_bernoulli_matches_akiyama_tanigawa():
    for n in range(0, 61):
        assert be.bernoulli(n) == oracles.akiyama_tanigawa(n)


def test_bernoulli_matches_defining_recurrence_to_300():
    table = oracles.bernoulli_table(300)
    assert all(be.bernoulli(n) == table[n] for n in range(301))


def test_euler_matches_sech_series():
    table = oracles.euler_table(120)
    assert all(be.euler_number(n) == table[n] for n in range(121))


def test_euler_from_poly_route():
    assert all(be.euler_number_from_poly(n) == be.euler_number(n) for n in range(80))


def test_frozen_large_values():
    # frozen from the Akiyama-Tanigawa triangle
    b60 = oracles.akiyama_tanigawa(60)
    assert be.bernoulli(60) == b60
    assert b60.denominator == 56786730
    assert be.euler_number(20) == 370371188237525


@pytest.mark.parametrize("scheme", ec.SCHEMES)
def test_every_scheme_reproduces_bernoulli(scheme):
    table = oracles.bernoulli_table(120)
    for n in range(121):
        if ec.scheme_domain(scheme, n):
            assert be.quad_recurrence(n, scheme) == table[n], (scheme, n)


def test_scheme_domains():
    assert not ec.scheme_domain("gosper", 1)
    assert not ec.scheme_domain("gosper", 2)
    assert ec.scheme_domain("gosper", 3)
    assert not ec.scheme_domain("euler_even", 5)
    assert ec.scheme_domain("euler_even", 6)
    assert not ec.scheme_domain("new", 3)
    with pytest.raises(be.DomainError):
        be.quad_recurrence(2, "gosper")
    with pytest.raises(be.DomainError):
        be.quad_recurrence(10, "nonsense")


@pytest.mark.parametrize("bad", [-1, 2.5, "3", True])
def test_bad_indices_rejected(bad):
    with pytest.raises(be.DomainError):
        be.bernoulli(bad)
    with pytest.raises(be.DomainError):
        be.euler_number(bad)


def test_bernoulli_polynomials():
    assert be.bernoulli_poly(2).coefficients == (Fraction(1, 6), Fraction(-1), Fraction(1))
    b3 = be.bernoulli_poly(3)
    assert b3(Fraction(1, 2)) == 0
    assert b3.derivative() == be.bernoulli_poly(2).__class__(tuple(3 * c for c in be.bernoulli_poly(2).coefficients))


def test_euler_polynomials():
    assert be.euler_poly(1).coefficients == (Fraction(-1, 2), Fraction(1))
    assert be.euler_poly(2)(Fraction(0)) == 0
    assert be.euler_at_zero(1) == Fraction(-1, 2)
    assert be.euler_at_zero(3) == Fraction(1, 4)


def test_identities_against_direct_evaluation():
    for n in range(1, 40):
        assert be.euler_poly_at_one_identity(n) == be.euler_poly(n)(Fraction(1))
    for n in range(0, 30):
        assert be.bernoulli_quarter_identity(n) == be.bernoulli_poly(2 * n + 1)(Fraction(1, 4))


def test_zeta_even_coeff():
    # zeta(2j) = zeta_even_coeff(j) * pi^(2j)
    assert be.zeta_even_coeff(1) == Fraction(1, 6)
    assert be.zeta_even_coeff(2) == Fraction(1, 90)
    c = oracles.ctx(200)
    for j in range(1, 12):
        z = be.zeta_even_coeff(j)
        assert abs(oracles.q(z, c) * c.pi ** (2 * j) - c.zeta(2 * j)) < c.mpf(2) ** -180


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=1, max_value=80))
def test_odd_bernoulli_vanish_and_even_signs_alternate(k):
    assert be.bernoulli(2 * k + 1) == 0
    assert (be.bernoulli(2 * k) > 0) == (k % 2 == 1)


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=60))
def test_euler_numbers_odd_zero_even_alternate(k):
    assert be.euler_number(2 * k + 1) == 0
    assert (be.euler_number(2 * k) > 0) == (k % 2 == 0)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=25), st.fractions(min_value=-3, max_value=3, max_denominator=50))
def test_bernoulli_poly_difference(n, x):
    # B_n(x + 1) - B_n(x) = n x^(n-1)
    p = be.bernoulli_poly(n)
    want = n * x ** (n - 1) if n else 0
    assert p(x + 1) - p(x) == want


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=25), st.fractions(min_value=-3, max_value=3, max_denominator=50))
def test_euler_poly_symmetric_sum(n, x):
    # E_n(x + 1) + E_n(x) = 2 x^n and E_n(1 - x) = (-1)^n E_n(x)
    p = be.euler_poly(n)
    assert p(x + 1) + p(x) == 2 * x**n
    assert p(1 - x) == (-1) ** n * p(x)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=40))
def test_zeta_coeff_relation(j):
    # zeta(2j)/pi^(2j) = (-1)^(j+1) 2^(2j-1) B_2j / (2j)!
    want = (-1) ** (j + 1) * Fraction(2 ** (2 * j - 1)) * be.bernoulli(2 * j) / factorial(2 * j)
    assert be.zeta_even_coeff(j) == want


def test_defining_sum_vanishes():
    for n in range(1, 60):
        assert sum(comb(n + 1, k) * be.bernoulli(k) for k in range(n + 1)) == 0


def test_cache_is_consistent_after_out_of_order_access():
    cache = ec.NumberCache()
    hi = cache.bernoulli(50)
    lo = cache.bernoulli(10)
    assert Fraction(int(hi.numerator), int(hi.denominator)) == oracles.bernoulli_table(50)[50]
    assert Fraction(int(lo.numerator), int(lo.denominator)) == oracles.bernoulli_table(50)[10]
    assert cache.bernoulli_high_water >= 50
