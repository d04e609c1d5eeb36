import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from monoval.laurent import (
    ChartBasis,
    IDENTITY_BASIS,
    LaurentPolynomial,
    Monomial,
    RationalFunction,
    UNIT,
    X,
    Y,
    ZeroPolynomialError,
    expand_from_chart,
    factor_monomial_content,
    lattice_solve,
    rewrite_in_chart,
)

from oracles import random_polynomial


def poly(d):
    return LaurentPolynomial(d)


# -- monomials ---------------------------------------------------------------


def test_monomial_combine():
    assert Monomial(1, 1) * Monomial(-1, 0) == Y
    assert X / Y == Monomial(1, -1)
    assert Monomial(-2, 3) * Monomial(1, -1) ** 3 == X
    assert Monomial(2, -3) ** 2 == Monomial(4, -6)
    assert Monomial(2, -3).inverse() == Monomial(-2, 3)
    assert UNIT.is_unit and not X.is_unit


@pytest.mark.parametrize(
    "mono, text",
    [
        (UNIT, "1"),
        (X, "x"),
        (Monomial(1, -1), "x/y"),
        (Monomial(-2, 3), "y^3/x^2"),
        (Monomial(2, 3), "x^2*y^3"),
        (Monomial(-1, -2), "1/(x*y^2)"),
        (Monomial(0, -1), "1/y"),
        (Monomial(5, -17), "x^5/y^17"),
    ],
)
def test_monomial_str(mono, text):
    assert str(mono) == text


# -- polynomials -------------------------------------------------------------


def test_polynomial_basics():
    p = poly({(2, 0): 1, (0, 3): -1})
    assert not p.is_zero
    assert p.coefficient(Monomial(2, 0)) == 1
    assert p.coefficient(Monomial(1, 1)) == 0
    assert len(p) == 2
    assert poly({}).is_zero
    assert poly({(1, 1): Fraction(1, 2), (1, 1): Fraction(1, 2)}) == poly(
        {(1, 1): Fraction(1, 2)}
    )
    # zero coefficients are dropped, including after cancellation
    assert (p - p).is_zero
    assert poly({(0, 0): 0}).is_zero


def test_polynomial_arithmetic():
    p = poly({(1, 0): 1, (0, 1): 1})  # x + y
    q = poly({(1, 0): 1, (0, 1): -1})  # x - y
    assert p * q == poly({(2, 0): 1, (0, 2): -1})
    assert p + q == poly({(1, 0): 2})
    assert p ** 2 == poly({(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert p ** 0 == LaurentPolynomial.constant(1)
    assert 3 * p == poly({(1, 0): 3, (0, 1): 3})
    assert 0 * p == LaurentPolynomial.zero()
    with pytest.raises(ValueError):
        p ** -1


def test_polynomial_str_is_deterministic():
    p = poly({(2, 0): 1, (0, 3): -1, (1, 1): Fraction(3, 2)})
    assert str(p) == "-y^3 + 3/2*x*y + x^2"
    assert str(LaurentPolynomial.zero()) == "0"
    assert str(poly({(0, 0): -5})) == "-5"


# -- lattice solves and chart rewrites ---------------------------------------


def test_lattice_solve_known():
    basis = ChartBasis(Monomial(-2, 3), Monomial(1, -1))  # (y^3/x^2, x/y)
    assert lattice_solve(X, basis) == (1, 3)
    assert lattice_solve(Y, basis) == (1, 2)
    assert lattice_solve(basis.f, basis) == (1, 0)
    assert lattice_solve(basis.g, basis) == (0, 1)
    # rebuild via monomial arithmetic
    a, b = lattice_solve(Y, basis)
    assert basis.f ** a * basis.g ** b == Y


def test_non_unimodular_rejected():
    with pytest.raises(ValueError):
        ChartBasis(X, Monomial(2, 0))
    with pytest.raises(ValueError):
        ChartBasis(Monomial(1, 1), Monomial(1, 1))


def _random_unimodular_basis(rng):
    # random product of elementary column operations applied to (x, y)
    f, g = X, Y
    for _ in range(rng.randint(0, 8)):
        k = rng.randint(-2, 2)
        if rng.random() < 0.5:
            f = f * g ** k
        else:
            g = g * f ** k
        if rng.random() < 0.2:
            f, g = g, f
    return ChartBasis(f, g)


def test_lattice_solve_round_trip_random():
    rng = random.Random(11)
    for _ in range(300):
        basis = _random_unimodular_basis(rng)
        target = Monomial(rng.randint(-30, 30), rng.randint(-30, 30))
        a, b = lattice_solve(target, basis)
        assert basis.f ** a * basis.g ** b == target


def test_rewrite_in_chart_known():
    # x^2 - y^3 in the chart (y, x/y)
    basis = ChartBasis(Y, Monomial(1, -1))
    p = poly({(2, 0): 1, (0, 3): -1})
    assert rewrite_in_chart(p, basis) == poly({(2, 2): 1, (3, 0): -1})
    # identity chart leaves everything alone
    assert rewrite_in_chart(p, IDENTITY_BASIS) == p
    # x in the chart (y^3/x^2, x/y)
    basis2 = ChartBasis(Monomial(-2, 3), Monomial(1, -1))
    assert rewrite_in_chart(LaurentPolynomial.monomial(X), basis2) == poly({(1, 3): 1})


def test_rewrite_is_ring_isomorphism_random():
    rng = random.Random(23)
    for _ in range(120):
        basis = _random_unimodular_basis(rng)
        p = random_polynomial(rng, max_degree=4, laurent=True)
        q = random_polynomial(rng, max_degree=4, laurent=True)
        assert rewrite_in_chart(p * q, basis) == rewrite_in_chart(p, basis) * rewrite_in_chart(q, basis)
        assert rewrite_in_chart(p + q, basis) == rewrite_in_chart(p, basis) + rewrite_in_chart(q, basis)
        assert expand_from_chart(rewrite_in_chart(p, basis), basis) == p


def test_factor_monomial_content():
    # y^2 w^2 - y^3 in coordinates (w, y)
    p = poly({(2, 2): 1, (0, 3): -1})
    content, primitive = factor_monomial_content(p)
    assert content == Monomial(0, 2)
    assert primitive == poly({(2, 0): 1, (0, 1): -1})
    # trivial content
    content, primitive = factor_monomial_content(poly({(1, 0): 1, (0, 1): -1}))
    assert content == UNIT
    # x^6 y^2 (x - 1), expanded then re-factored
    p = poly({(6, 2): 1}) * poly({(1, 0): 1, (0, 0): -1})
    content, primitive = factor_monomial_content(p)
    assert content == Monomial(6, 2)
    assert primitive == poly({(1, 0): 1, (0, 0): -1})
    with pytest.raises(ZeroPolynomialError):
        factor_monomial_content(LaurentPolynomial.zero())


def test_factor_content_reassembles_random():
    rng = random.Random(5)
    for _ in range(200):
        p = random_polynomial(rng, max_degree=5, laurent=True)
        content, primitive = factor_monomial_content(p)
        assert primitive.shift(content) == p
        assert primitive.min_exponents() == (0, 0)


# -- rational functions ------------------------------------------------------


def test_rational_function_equality_cross_multiplies():
    x = LaurentPolynomial.monomial(X)
    y = LaurentPolynomial.monomial(Y)
    h = poly({(1, 1): 2, (0, 0): 1})
    assert RationalFunction(x * h, y * h) == RationalFunction(x, y)
    assert RationalFunction(x, y) != RationalFunction(y, x)


def test_rational_function_arithmetic():
    x = RationalFunction.from_monomial(X)
    y = RationalFunction.from_monomial(Y)
    one = RationalFunction.constant(1)
    assert (x / y) * (y / x) == one
    assert x + (-x) == RationalFunction.constant(0)
    assert (x / y) ** -2 == (y / x) ** 2
    with pytest.raises(ZeroDivisionError):
        x / RationalFunction.constant(0)
    with pytest.raises(ZeroDivisionError):
        RationalFunction(LaurentPolynomial.monomial(X), LaurentPolynomial.zero())
