from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from satake_plethysm import QCoeff
from satake_plethysm.qcoeff import q_half, q_power

qcoeffs = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=4).map(QCoeff)


def test_normalization():
    assert QCoeff({2: 3, 4: 0}) == QCoeff([(2, 1), (2, 2)])
    assert QCoeff([(1, 1), (1, -1)]).is_zero()
    assert QCoeff({}) == 0
    assert QCoeff({0: 7}) == 7
    assert q_power(1) == QCoeff({2: 1})
    assert q_half(-3) == QCoeff({-3: 1})


@given(qcoeffs, qcoeffs, qcoeffs)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert hash(a + b) == hash(b + a)


@given(qcoeffs, st.integers(-6, 6))
def test_shift_is_monomial_product(a, d):
    assert a.shift(d) == a * q_half(d)


def test_powers():
    x = QCoeff({0: 1, 1: 1})
    assert x ** 2 == QCoeff({0: 1, 1: 2, 2: 1})
    assert x ** 0 == 1
    assert q_half(3) ** -2 == q_half(-6)
    assert QCoeff({2: -1}) ** -3 == QCoeff({-6: -1})
    with pytest.raises(ValueError):
        x ** -1


def test_queries():
    a = QCoeff({-1: 2, 0: 5, 4: 1})
    assert a.constant_term() == 5
    assert a.has_half_powers()
    assert not a.is_constant()
    assert a.nonnegative()
    assert QCoeff({0: 3}).is_constant()
    assert not QCoeff({2: -1}).nonnegative()


def test_evaluation():
    a = QCoeff({-1: 2, 2: 1})
    assert a.evaluate(2) == Fraction(1) + 4
    assert QCoeff({2: 1, -2: 3}).evaluate_q(4) == 4 + Fraction(3, 4)
    with pytest.raises(ValueError):
        a.evaluate_q(4)
    with pytest.raises(ZeroDivisionError):
        a.evaluate(0)


def test_rendering():
    assert str(QCoeff({-3: 1})) == "q^{-3/2}"
    assert str(QCoeff({2: 1, 0: -2})) == "q - 2"
    assert str(QCoeff({4: -3})) == "-3·q^{2}"
    assert str(QCoeff()) == "0"
