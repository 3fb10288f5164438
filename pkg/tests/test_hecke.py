import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from satake_plethysm import (
    CartanElement,
    HeckeElement,
    SymLaurent,
    build_one_m,
    convolve,
    evaluate,
    from_cartan,
    satake_forward,
    satake_inverse,
    sym_multiply,
    to_cartan,
)
from satake_plethysm.errors import NonsquareQ
from satake_plethysm.hecke import element_from_record, element_to_record, render
from satake_plethysm.qcoeff import QCoeff, q_half, q_power
from satake_plethysm.verify import random_hecke_element

H = HeckeElement.basis
S = SymLaurent.basis
C = CartanElement.basis

elements = st.integers(0, 2**32).map(lambda s: random_hecke_element(random.Random(s), max_key=6))


def test_convolution_examples():
    assert convolve(H(1, 0), H(1, 0)) == H(2, 0) + H(0, 1, q_power(1))
    assert convolve(H(1, 1), H(1, 1)) == H(2, 2) + H(0, 3, q_power(1))
    assert convolve(H(0, 1), H(0, 1)) == H(0, 2)
    f = H(3, -2, QCoeff({1: 4})) + H(0, 5)
    assert HeckeElement.one() * f == f
    assert f * 2 == f + f


def test_satake_examples():
    assert satake_forward(H(1, 0)) == S(1, 0, q_half(1))
    assert satake_forward(H(0, 1)) == S(0, 1)
    assert satake_forward(HeckeElement.one()) == SymLaurent.one()
    assert satake_inverse(S(3, 3)) == H(3, 3, q_half(-3))
    assert satake_inverse(SymLaurent.one()) == HeckeElement.one()
    assert satake_inverse(S(1, 0, q_half(1))) == H(1, 0)


def test_sym_multiply_examples():
    assert sym_multiply(S(1, 0), S(1, 0)) == S(2, 0) + S(0, 1)
    assert sym_multiply(S(2, 0), S(1, 0)) == S(3, 0) + S(1, 1)
    p = S(4, -1, QCoeff({3: 2}))
    assert sym_multiply(SymLaurent.one(), p) == p


def test_sym_multiply_matches_monomials():
    for a in range(6):
        for b in range(6):
            for i in (-2, 0, 3):
                prod = sym_multiply(S(a, i), S(b, 0))
                expect = {}
                for (x1, x2), c1 in S(a, i).monomials().items():
                    for (y1, y2), c2 in S(b, 0).monomials().items():
                        key = (x1 + y1, x2 + y2)
                        expect[key] = expect.get(key, QCoeff()) + c1 * c2
                assert prod.monomials() == {k: v for k, v in expect.items() if v}


def test_monomials_round_trip():
    for m in range(9):
        for i in range(-4, 5):
            p = S(m, i, QCoeff({1: 3, -2: 1}))
            assert SymLaurent.from_monomials(p.monomials()) == p
    with pytest.raises(ValueError):
        SymLaurent.from_monomials({(1, 0): 1})


def test_build_one_m():
    assert build_one_m(0) == HeckeElement.one()
    assert build_one_m(2) == convolve(H(1, 0), H(1, 0)) - H(0, 1, q_power(1))
    assert build_one_m(2) == H(2, 0)
    for m in range(41):
        assert build_one_m(m) == H(m, 0)
    with pytest.raises(ValueError):
        build_one_m(-1)


def test_cartan_examples():
    assert to_cartan(H(2, 0)) == C(2, 0) + C(1, 1)
    assert from_cartan(C(1, 1)) == H(0, 1)
    assert from_cartan(C(3, 1)) == H(2, 1) - H(0, 2)
    with pytest.raises(ValueError):
        C(1, 2)


@settings(max_examples=150, deadline=None)
@given(elements, elements, elements)
def test_algebra_properties(f, g, h):
    fg = convolve(f, g)
    assert satake_forward(fg) == sym_multiply(satake_forward(f), satake_forward(g))
    assert fg == convolve(g, f)
    assert convolve(fg, h) == convolve(f, convolve(g, h))
    assert convolve(f, g + h) == fg + convolve(f, h)
    assert satake_inverse(satake_forward(f)) == f
    assert from_cartan(to_cartan(f)) == f
    c = to_cartan(g)
    assert to_cartan(from_cartan(c)) == c


def test_evaluate_examples():
    assert evaluate(S(1, 0), 2, 3) == 5
    assert evaluate(S(0, 2), 2, Fraction(1, 2)) == 1
    assert evaluate(S(0, 0, q_power(1)), 7, 7, 4) == 4
    assert evaluate(S(1, 0, q_half(1)), 1, 1, Fraction(9, 4)) == 3
    assert evaluate(S(2, -1), Fraction(1, 2), -3) == (Fraction(1, 4) - Fraction(3, 2) + 9) / Fraction(-3, 2)


def test_evaluate_errors():
    with pytest.raises(NonsquareQ):
        evaluate(S(1, 0, q_half(1)), 1, 1, 2)
    with pytest.raises(NonsquareQ):
        evaluate(S(1, 0, q_half(1)), 1, 1, -4)
    with pytest.raises(ZeroDivisionError):
        evaluate(S(0, -1), 0, 3)
    with pytest.raises(ZeroDivisionError):
        evaluate(S(0, 0, q_power(-1)), 1, 1, 0)


def test_satake_image_of_characteristic_functions():
    # 1_m * 1_{i,i} evaluated through Satake at q = 1 is Sym^m at (alpha, beta) times det^i
    for m in range(6):
        for i in range(-2, 3):
            v = evaluate(satake_forward(H(m, i)), 2, 5, 1)
            assert v == sum(2 ** (m - r) * 5 ** r for r in range(m + 1)) * Fraction(10) ** i


def test_record_round_trip():
    rng = random.Random(7)
    for _ in range(50):
        f = random_hecke_element(rng)
        rec = json.loads(json.dumps(element_to_record(f)))
        assert element_from_record(rec) == f
        c = to_cartan(f)
        assert element_from_record(json.loads(json.dumps(element_to_record(c)))) == c
    assert element_to_record(H(3, 0, QCoeff({-3: 10**30}))) == {
        "basis": "sym-det", "terms": [{"m": 3, "i": 0, "coeff": [[-3, str(10**30)]]}]}
    with pytest.raises(ValueError):
        element_from_record({"basis": "sym-det", "terms": [{"m": 1, "i": 0, "coeff": [[0, "1.5"]]}]})
    with pytest.raises(ValueError):
        element_from_record({"basis": "other", "terms": []})


def test_render():
    assert render(H(3, 0, q_half(-3))) == "q^{-3/2}·1_3*1_{0,0}"
    assert render(C(3, 1)) == "1_{K(3,1)K}"
    assert render(HeckeElement.zero()) == "0"
