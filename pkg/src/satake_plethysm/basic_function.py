"""Truncated basic functions for the symmetric cube and fourth power.

The basic function of ``Sym^k`` is the inverse Satake image of
``sum_j Sym^j(Sym^k(t1, t2))``.  Its j-th summand is

    q^(-jk/2) * sum_n N(j, k, n) q^n 1_{jk-2n} * 1_{i(n), i(n)}

with ``i(n) = n`` (degree-consistent, the default) or ``i(n) = jk - n``
(``as-printed``, the labeling in which the det power is ``jk - n``).  Only
the degree-consistent labeling transforms back to the plethysm character;
the other is kept for side-by-side comparison.

Hecke traces are checked coefficientwise in a formal marker ``u``: the trace
of the j-th summand at Satake parameters ``(alpha, beta)`` must equal the
coefficient of ``u^j`` in ``prod_i (1 - alpha^(k-i) beta^i u)^(-1)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ResidualQDependence
from .hecke import (
    CartanElement,
    HeckeElement,
    element_to_record,
    evaluate,
    render,
    satake_forward,
    to_cartan,
)
from .plethysm import _k3_base, multiplicity_generic
from .qcoeff import QCoeff

__all__ = [
    "CONSISTENT",
    "PRINTED",
    "SatakeParams",
    "BasicFunctionSeries",
    "t_coefficient",
    "s_coefficient",
    "hecke_operator_T",
    "hecke_operator_S",
    "basic_function",
    "trace_series",
    "euler_factor_series",
]

CONSISTENT = "degree-consistent"
PRINTED = "as-printed"
_CONVENTIONS = (CONSISTENT, PRINTED)
_ROUTES = ("closed", "generic")


def t_coefficient(j: int, n: int) -> int:
    """Coefficient of ``q^n`` in ``T_j``: the positive sum minus the tail sum for n > j."""
    value = _k3_base(n)
    if n > j:
        value -= (n - j - 1) // 2 + 1
    return value


def s_coefficient(j: int, n: int) -> int:
    """Coefficient of ``q^n`` in ``S_j``, written with k = 3 floor terms only."""
    value = sum(_k3_base(n - 4 * s) for s in range(n // 4 + 1))
    if n > j:
        value -= sum(_k3_base(s) for s in range(n - j))
    return value


def _check_convention(convention: str) -> str:
    if convention not in _CONVENTIONS:
        raise ValueError(f"convention must be one of {_CONVENTIONS}, got {convention!r}")
    return convention


def _operator(j: int, k: int, convention: str, route: str) -> HeckeElement:
    if j < 0:
        raise ValueError(f"j must be nonnegative, got {j}")
    _check_convention(convention)
    if route not in _ROUTES:
        raise ValueError(f"route must be one of {_ROUTES}, got {route!r}")
    jk = j * k
    top = 3 * j // 2 if k == 3 else 2 * j
    closed = t_coefficient if k == 3 else s_coefficient
    terms = {}
    for n in range(top + 1):
        mult = closed(j, n) if route == "closed" else multiplicity_generic(j, k, n)
        if mult:
            det = n if convention == CONSISTENT else jk - n
            terms[(jk - 2 * n, det)] = QCoeff({2 * n: mult})
    return HeckeElement(terms)


def hecke_operator_T(j: int, convention: str = CONSISTENT, route: str = "closed") -> HeckeElement:
    """``T_j = sum_n N(j, 3, n) q^n 1_{3j-2n} * 1_{i(n), i(n)}``."""
    return _operator(j, 3, convention, route)


def hecke_operator_S(j: int, convention: str = CONSISTENT, route: str = "closed") -> HeckeElement:
    """``S_j = sum_n N(j, 4, n) q^n 1_{4j-2n} * 1_{i(n), i(n)}``."""
    return _operator(j, 4, convention, route)


@dataclass(frozen=True)
class SatakeParams:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        a, b = Fraction(self.alpha), Fraction(self.beta)
        if not a or not b:
            raise ValueError("Satake parameters must be nonzero")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    def eigenvalues(self, k: int) -> list[Fraction]:
        """The ``k + 1`` eigenvalues ``alpha^(k-i) beta^i`` of ``Sym^k``."""
        return [self.alpha ** (k - i) * self.beta ** i for i in range(k + 1)]


@dataclass(frozen=True)
class BasicFunctionSeries:
    k: int
    max_j: int
    convention: str
    terms: tuple[HeckeElement, ...]

    def term(self, j: int) -> HeckeElement:
        return self.terms[j]

    def cartan_terms(self) -> tuple[CartanElement, ...]:
        return tuple(to_cartan(t) for t in self.terms)

    def to_record(self, basis: str = "sym-det") -> dict:
        if basis == "sym-det":
            terms = [element_to_record(t) for t in self.terms]
        elif basis == "cartan":
            terms = [element_to_record(t) for t in self.cartan_terms()]
        else:
            raise ValueError(f"unknown basis {basis!r}")
        return {"k": self.k, "maxJ": self.max_j, "convention": self.convention, "terms": terms}

    def render_text(self, basis: str = "sym-det") -> str:
        terms = self.terms if basis == "sym-det" else self.cartan_terms()
        return "\n".join(f"j={j}: {render(t)}" for j, t in enumerate(terms))


def basic_function(k: int, max_j: int, convention: str = CONSISTENT, route: str = "closed") -> BasicFunctionSeries:
    """Summands ``j = 0 .. max_j`` of the basic function of ``Sym^k``, k in {3, 4}."""
    if k not in (3, 4):
        raise ValueError(f"only k = 3 and k = 4 are supported, got {k}")
    if max_j < 0:
        raise ValueError(f"max_j must be nonnegative, got {max_j}")
    op = hecke_operator_T if k == 3 else hecke_operator_S
    terms = tuple(op(j, convention, route).scale(QCoeff({-j * k: 1})) for j in range(max_j + 1))
    return BasicFunctionSeries(k, max_j, _check_convention(convention), terms)


def trace_series(series: BasicFunctionSeries, params: SatakeParams) -> list[Fraction]:
    """Hecke trace of each summand at ``(alpha, beta)``.

    The Satake image of every summand must be free of q; anything else is a
    labeling or multiplicity bug and raises :class:`ResidualQDependence`.
    """
    if series.convention != CONSISTENT:
        raise ValueError("trace checks need the degree-consistent convention")
    out = []
    for j, term in enumerate(series.terms):
        image = satake_forward(term)
        if not image.is_q_free():
            raise ResidualQDependence(f"summand j={j} still depends on q")
        out.append(evaluate(image, params.alpha, params.beta, 1))
    return out


def euler_factor_series(k: int, params: SatakeParams, max_j: int) -> list[Fraction]:
    """Coefficients ``u^0 .. u^max_j`` of ``prod_i (1 - alpha^(k-i) beta^i u)^(-1)``.

    The denominator is multiplied out and inverted by power-series long
    division.
    """
    denom = [Fraction(1)]
    for x in params.eigenvalues(k):
        nxt = denom + [Fraction(0)]
        for t in range(1, len(nxt)):
            nxt[t] -= x * denom[t - 1]
        denom = nxt
    if not denom[0]:
        raise ZeroDivisionError("constant term of the Euler factor vanishes")
    out: list[Fraction] = []
    for n in range(max_j + 1):
        acc = Fraction(1) if n == 0 else Fraction(0)
        for t in range(1, min(n, len(denom) - 1) + 1):
            acc -= denom[t] * out[n - t]
        out.append(acc / denom[0])
    return out
