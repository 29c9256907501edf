from math import factorial

import pytest
from hypothesis import given, strategies as st

from qdgg.qpoly import (
    ONE,
    Q,
    QPoly,
    QSeries,
    ZERO,
    parse_qpoly,
    q_derivative,
    q_factorial,
    q_integer,
    q_power,
)


def naive_multiply(a, b):
    # schoolbook convolution, kept independent of QPoly.__mul__
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return out


qpolys = st.lists(st.integers(min_value=-30, max_value=30), max_size=8).map(QPoly)


def test_canonical_form():
    assert QPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert QPoly([0, 0, 0]).coeffs == ()
    assert QPoly().is_zero
    assert QPoly([0, 1]) == Q


def test_rejects_non_integers():
    with pytest.raises(TypeError):
        QPoly([1.5])
    with pytest.raises(TypeError):
        QPoly([True])


def test_q_integer_examples():
    assert q_integer(0) == ZERO
    assert q_integer(1) == ONE
    assert q_integer(3) == QPoly([1, 1, 1])


def test_q_factorial_examples():
    assert q_factorial(0) == ONE
    assert q_factorial(1) == ONE
    expected = QPoly(naive_multiply(naive_multiply([1], [1, 1]), [1, 1, 1]))
    assert expected == QPoly([1, 2, 2, 1])
    assert q_factorial(3) == expected


def test_q_factorial_at_one_is_factorial():
    for n in range(11):
        assert q_factorial(n).evaluate(1) == factorial(n)


def test_arithmetic_examples():
    assert (ONE + Q) * (ONE + Q) == QPoly([1, 2, 1])
    f = QPoly([3, 0, 7])
    assert f + ZERO == f
    assert q_integer(3).evaluate(1) == 3
    assert (Q**3).coeffs == (0, 0, 0, 1)
    assert q_power(2, 5) == QPoly([0, 0, 5])


def test_int_coercion():
    assert QPoly([1, 1]) * 2 == QPoly([2, 2])
    assert 2 * QPoly([1, 1]) == QPoly([2, 2])
    assert QPoly([1]) + 1 == QPoly([2])
    assert QPoly([3]) == 3
    assert QPoly([1, -1]) - 1 == QPoly([0, -1])


@given(qpolys, qpolys, qpolys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO


@given(qpolys, qpolys)
def test_multiply_matches_naive(a, b):
    assert a * b == QPoly(naive_multiply(list(a.coeffs), list(b.coeffs)))


@given(qpolys, st.integers(min_value=-5, max_value=5))
def test_evaluate_is_ring_map(a, c):
    b = QPoly([2, -1, 3])
    assert (a * b).evaluate(c) == a.evaluate(c) * b.evaluate(c)
    assert (a + b).evaluate(c) == a.evaluate(c) + b.evaluate(c)


def test_str_rendering():
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(Q) == "q"
    assert str(QPoly([1, 2, 2, 1])) == "1 + 2*q + 2*q^2 + q^3"
    assert str(QPoly([0, 0, 3])) == "3*q^2"
    assert str(QPoly([1, -1])) == "1 - q"
    assert str(QPoly([-2, 0, 1])) == "-2 + q^2"


@given(qpolys)
def test_parse_round_trip(a):
    assert parse_qpoly(str(a)) == a


def test_parse_accepts_grammar():
    assert parse_qpoly("1 + 2*q + q^3") == QPoly([1, 2, 0, 1])
    assert parse_qpoly("q^2") == QPoly([0, 0, 1])
    assert parse_qpoly("0") == ZERO
    assert parse_qpoly("5") == QPoly([5])
    with pytest.raises(ValueError):
        parse_qpoly("2x + 1")
    with pytest.raises(ValueError):
        parse_qpoly("")


def test_q_derivative_examples():
    t3 = QSeries.t_power(3)
    assert t3.q_derivative() == QSeries((ZERO, ZERO, q_integer(3)))
    const = QSeries((QPoly([7]),))
    assert const.q_derivative() == QSeries(())
    f = QSeries((ZERO, ONE, ONE))  # t + t^2
    assert q_derivative(f) == QSeries((ONE, q_integer(2)))


def test_q_derivative_degree_and_leading():
    for n in range(1, 21):
        d = QSeries.t_power(n).q_derivative()
        assert d.degree == n - 1
        assert d.coefficient(n - 1) == q_integer(n)


def test_series_trims_and_compares():
    assert QSeries((ONE, ZERO)) == QSeries((ONE,))
    assert QSeries((1, 2)).coeffs == (ONE, QPoly([2]))


def test_power_requires_nonnegative():
    with pytest.raises(ValueError):
        Q ** (-1)
