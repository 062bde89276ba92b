"""Polynomial arithmetic, group orders, cuspidal counts, Green degrees."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from glstab.degrees import (
    QPoly,
    cuspidal_count,
    degree_poly,
    gl_order,
    gl_order_poly,
    p_polynomial,
    prime_power,
    psi_poly,
    sum_degree_squares_check,
    vic_hom_count,
)
from glstab.errors import BadParameters, GuardExceeded
from glstab.labels import make_shape

polys = st.dictionaries(st.integers(0, 6), st.integers(-9, 9), max_size=5).map(QPoly)


def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    for bad in (1, 6, 12, 100):
        with pytest.raises(BadParameters):
            prime_power(bad)


@given(polys, polys)
def test_multiplication_then_exact_division(a, b):
    if b.coeffs:
        assert (a * b).divexact(b) == a


def test_divexact_rejects_inexact():
    with pytest.raises(ValueError):
        (QPoly.monomial(1) + 1).divexact(QPoly.monomial(1) - 1)


@given(polys, st.integers(-4, 4))
def test_evaluation_is_a_ring_morphism(a, x):
    b = QPoly.monomial(2, 3) - 5
    assert (a * b).evaluate(x) == Fraction(a.evaluate(x)) * b.evaluate(x)
    assert (a + b).evaluate(x) == Fraction(a.evaluate(x)) + b.evaluate(x)


def test_gl_orders():
    assert gl_order(1, 2) == 1
    assert gl_order(2, 2) == 6
    assert gl_order(3, 2) == 168
    assert gl_order(2, 3) == 48
    for n, q in [(1, 2), (2, 2), (3, 2), (2, 3), (4, 3)]:
        assert gl_order_poly(n).evaluate(q) == gl_order(n, q)


def test_gl_order_matches_enumeration():
    from glstab.oracle.counts import enumerate_group

    for n, q in [(1, 2), (1, 3), (1, 4), (1, 5), (2, 2), (2, 3), (3, 2)]:
        assert sum(1 for _ in enumerate_group(n, q)) == gl_order_poly(n).evaluate(q)


def test_cuspidal_counts():
    # degree 1: the q - 1 characters of the multiplicative group
    assert [cuspidal_count(1, q) for q in (2, 3, 4, 5)] == [1, 2, 3, 4]
    # degree 2: q(q-1)/2
    assert [cuspidal_count(2, q) for q in (2, 3, 4, 5)] == [1, 3, 6, 10]
    assert cuspidal_count(3, 2) == 2
    assert cuspidal_count(4, 2) == 3
    assert cuspidal_count(6, 2) == 9


def test_degree_formula_landmarks():
    # trivial representation
    assert degree_poly(make_shape((3,), ())).evaluate(2) == 1
    # Steinberg: column iota partition, degree q^{n(n-1)/2}
    for n, q in [(2, 2), (3, 2), (3, 3), (4, 2)]:
        st_deg = degree_poly(make_shape((1,) * n, ())).evaluate(q)
        assert st_deg == q ** (n * (n - 1) // 2)
    # the 6-dimensional and 8-dimensional irreducibles of the 168-element group
    assert degree_poly(make_shape((2, 1), ())).evaluate(2) == 6
    assert degree_poly(make_shape((), [(1, (2, 1))])).evaluate(2) == 6
    # mixed iota + degree-2 cuspidal, and the two cuspidal irreducibles of degree 3
    assert degree_poly(make_shape((1,), [(2, (1,))])).evaluate(2) == 7
    assert degree_poly(make_shape((), [(3, (1,))])).evaluate(2) == 3


def test_degree_census_guard():
    assert sum_degree_squares_check(3, 2)
    with pytest.raises(GuardExceeded):
        sum_degree_squares_check(6, 2)


def test_point_count_polynomial():
    for m in range(4):
        for q in (2, 3, 4):
            poly = p_polynomial(m, q)
            for n in range(m, m + 5):
                assert poly.evaluate(q**n) == vic_hom_count(m, n, q)
    assert vic_hom_count(1, 2, 2) == 6
    assert vic_hom_count(2, 3, 2) == 168


def test_vic_hom_count_is_order_quotient():
    for m in range(4):
        for n in range(m, m + 4):
            for q in (2, 3, 5):
                assert vic_hom_count(m, n, q) == gl_order(n, q) // gl_order(n - m, q)
    with pytest.raises(BadParameters):
        vic_hom_count(3, 2, 2)
