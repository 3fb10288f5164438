from fractions import Fraction
from math import comb

import pytest

from satake_plethysm import (
    CONSISTENT,
    PRINTED,
    HeckeElement,
    SatakeParams,
    basic_function,
    euler_factor_series,
    hecke_operator_S,
    hecke_operator_T,
    multiplicity_generic,
    plethysm_character,
    satake_forward,
    trace_series,
)
from satake_plethysm.basic_function import s_coefficient, t_coefficient
from satake_plethysm.errors import ResidualQDependence
from satake_plethysm.qcoeff import QCoeff, q_half, q_power

H = HeckeElement.basis


def test_closed_coefficients_match_generic():
    for j in range(40):
        for n in range(3 * j // 2 + 1):
            assert t_coefficient(j, n) == multiplicity_generic(j, 3, n)
        for n in range(2 * j + 1):
            assert s_coefficient(j, n) == multiplicity_generic(j, 4, n)


def test_operator_examples():
    assert hecke_operator_T(0) == HeckeElement.one()
    assert hecke_operator_T(1) == H(3, 0)
    assert hecke_operator_T(2) == H(6, 0) + H(2, 2, q_power(2))
    assert hecke_operator_S(0) == HeckeElement.one()
    # Sym^1(Sym^4) is irreducible, so S_1 is a single term
    assert hecke_operator_S(1) == H(4, 0)
    assert hecke_operator_S(2) == H(8, 0) + H(4, 2, q_power(2)) + H(0, 4, q_power(4))


def test_operator_routes_agree():
    for j in range(25):
        for conv in (CONSISTENT, PRINTED):
            assert hecke_operator_T(j, conv) == hecke_operator_T(j, conv, route="generic")
            assert hecke_operator_S(j, conv) == hecke_operator_S(j, conv, route="generic")


def test_printed_convention_labels():
    assert hecke_operator_T(2, PRINTED) == H(6, 6) + H(2, 4, q_power(2))
    with pytest.raises(ValueError):
        hecke_operator_T(2, "other")
    with pytest.raises(ValueError):
        hecke_operator_T(2, route="fast")


def test_basic_function_examples():
    assert basic_function(3, 0).terms == (HeckeElement.one(),)
    assert basic_function(3, 1).terms[1] == H(3, 0, q_half(-3))
    assert basic_function(4, 1).terms[1] == H(4, 0, q_power(-2))
    with pytest.raises(ValueError):
        basic_function(5, 2)
    with pytest.raises(ValueError):
        basic_function(3, -1)


def test_character_identity():
    for k, top in ((3, 10), (4, 8)):
        for j, term in enumerate(basic_function(k, top).terms):
            image = satake_forward(term)
            assert image.to_character() == plethysm_character(j, k)


def test_printed_convention_fails_the_character_check():
    series = basic_function(3, 4, PRINTED)
    image = satake_forward(series.terms[2])
    assert image.is_q_free()
    assert image.to_character() != plethysm_character(2, 3)
    with pytest.raises(ValueError):
        trace_series(series, SatakeParams(1, 1))


def test_cartan_support():
    for k in (3, 4):
        for j, c in enumerate(basic_function(k, 10).cartan_terms()):
            assert all(a + b == j * k and a >= b >= 0 for a, b in c)


def test_trace_examples():
    assert trace_series(basic_function(3, 1), SatakeParams(2, 3)) == [1, 65]
    assert trace_series(basic_function(4, 1), SatakeParams(1, 1))[1] == 5
    assert euler_factor_series(3, SatakeParams(2, 3), 1) == [1, 65]
    assert euler_factor_series(4, SatakeParams(1, 1), 2)[2] == 15


def test_euler_factor_at_one_counts_multisets():
    for k in (3, 4):
        assert euler_factor_series(k, SatakeParams(1, 1), 10) == [comb(j + k, k) for j in range(11)]


def test_trace_equals_euler_factor():
    for k in (3, 4):
        series = basic_function(k, 10)
        for alpha, beta in ((Fraction(-2, 7), Fraction(3)), (Fraction(4, 9), Fraction(-1, 2))):
            params = SatakeParams(alpha, beta)
            assert trace_series(series, params) == euler_factor_series(k, params, 10)


def test_residual_q_dependence_is_reported():
    series = basic_function(3, 2)
    broken = type(series)(3, 2, CONSISTENT, series.terms[:2] + (series.terms[2].scale(q_power(1)),))
    with pytest.raises(ResidualQDependence):
        trace_series(broken, SatakeParams(1, 1))


def test_satake_params():
    assert SatakeParams(2, 3).eigenvalues(3) == [8, 12, 18, 27]
    with pytest.raises(ValueError):
        SatakeParams(0, 3)


def test_records_and_text():
    series = basic_function(3, 1)
    rec = series.to_record()
    assert rec["k"] == 3 and rec["maxJ"] == 1 and rec["convention"] == CONSISTENT
    assert rec["terms"][1] == {"basis": "sym-det", "terms": [{"m": 3, "i": 0, "coeff": [[-3, "1"]]}]}
    assert series.to_record("cartan")["terms"][1]["basis"] == "cartan"
    assert series.render_text().splitlines()[1] == "j=1: q^{-3/2}·1_3*1_{0,0}"
    with pytest.raises(ValueError):
        series.to_record("other")
