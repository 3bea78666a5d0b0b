import pytest
from hypothesis import given, strategies as st

from app.services.polynomial import MVPoly, Q, T, Var, histogram, poly_product, poly_sum, q, q_factorial, q_int

X = Var("x", 1, 2)
Y = Var("y", 0)


def small_polys():
    variables = st.sampled_from([Q, T, X, Y])
    monomials = st.dictionaries(variables, st.integers(min_value=0, max_value=3), max_size=3)
    terms = st.lists(st.tuples(monomials, st.integers(min_value=-5, max_value=5)), max_size=4)
    return terms.map(lambda items: poly_sum(MVPoly.monomial(powers, coeff) for powers, coeff in items))


def test_q_integers():
    assert q_int(0) == 0
    assert q_int(3) == 1 + q() + q(2)
    assert q_factorial(3).univariate_coefficients(Q) == [1, 2, 2, 1]


def test_length_product_for_g32():
    product = (1 + q()) * (1 + q() + q(2)) * (1 + q(2) + q(3))
    assert product.univariate_coefficients(Q) == [1, 2, 3, 4, 4, 3, 1]


@given(small_polys(), small_polys(), small_polys())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == MVPoly.zero()


def test_zero_coefficients_vanish():
    p = MVPoly.variable(X) - MVPoly.variable(X)
    assert not p
    assert p.to_text() == "0"
    assert p == 0


def test_power_and_big_integers():
    p = (1 + q()) ** 100
    assert p.coefficient(Q, 50) == MVPoly.constant(100891344545564193334812497256)
    assert p.total() == 2 ** 100
    with pytest.raises(ValueError):
        q() ** -1


def test_coefficient_keeps_other_variables():
    p = MVPoly.variable(X) * q(2) + MVPoly.variable(Y) * q(2) + 3
    assert p.coefficient(Q, 2) == MVPoly.variable(X) + MVPoly.variable(Y)
    assert p.coefficient(Q, 0) == 3
    assert p.degree(Q) == 2


def test_univariate_coefficients_rejects_other_variables():
    with pytest.raises(ValueError):
        (q() + MVPoly.variable(T)).univariate_coefficients(Q)


def test_substitute_and_evaluate():
    p = MVPoly.variable(X) * q() + MVPoly.variable(Y)
    assert p.substitute({X: 1, Y: 1}) == q() + 1
    assert p.substitute({Q: MVPoly.variable(T) + 1}) == MVPoly.variable(X) * (MVPoly.variable(T) + 1) + MVPoly.variable(Y)
    assert p.evaluate({X: 2, Y: 3, Q: 5}) == 13
    with pytest.raises(ValueError):
        p.evaluate({X: 1})


def test_histogram():
    assert histogram([0, 1, 1, 3]) == 1 + 2 * q() + q(3)
    assert histogram([2, 2], T) == 2 * MVPoly.variable(T, 2)
    assert histogram([]) == 0


def test_text_output_is_canonical():
    p = 2 * q(2) - q() + 1
    assert p.to_text() == "1 - q + 2*q^2"
    assert (MVPoly.variable(X) * q()).to_text() == "q*x1_2"
    assert (-q()).to_text() == "-q"


def test_json_and_latex_output():
    p = 3 * MVPoly.variable(X) * q(2)
    assert p.to_json() == [{"coeff": "3", "exps": {"q": 2, "x:1:2": 1}}]
    assert p.to_latex() == "3q^{2}x_{1,2}"
    assert (1 - q()).to_latex() == "1 - q"


def test_poly_product_of_nothing_is_one():
    assert poly_product([]) == 1
    assert poly_sum([]) == 0
