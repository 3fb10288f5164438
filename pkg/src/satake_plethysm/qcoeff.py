"""Laurent polynomials in q^(1/2) with integer coefficients.

A :class:`QCoeff` maps a doubled exponent ``d`` (meaning ``q^(d/2)``) to a
nonzero integer.  Values are immutable and hashable.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = ["QCoeff", "q_half", "q_power", "as_qcoeff"]


class QCoeff:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for d, c in items:
            d = int(d)
            acc[d] = acc.get(d, 0) + int(c)
        self._terms = tuple(sorted((d, c) for d, c in acc.items() if c))
        self._hash = None

    @classmethod
    def _raw(cls, acc: dict[int, int]) -> "QCoeff":
        obj = cls.__new__(cls)
        obj._terms = tuple(sorted((d, c) for d, c in acc.items() if c))
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int) -> "QCoeff":
        return cls._raw({0: c})

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        """``(doubled exponent, coefficient)`` pairs sorted by exponent."""
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(d == 0 for d, _ in self._terms)

    def constant_term(self) -> int:
        for d, c in self._terms:
            if d == 0:
                return c
        return 0

    def has_half_powers(self) -> bool:
        return any(d % 2 for d, _ in self._terms)

    def nonnegative(self) -> bool:
        return all(c >= 0 for _, c in self._terms)

    def shift(self, d: int) -> "QCoeff":
        """Multiply by ``q^(d/2)``."""
        if not d:
            return self
        obj = QCoeff.__new__(QCoeff)
        obj._terms = tuple((e + d, c) for e, c in self._terms)
        obj._hash = None
        return obj

    def __add__(self, other):
        other = as_qcoeff(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for d, c in other._terms:
            acc[d] = acc.get(d, 0) + c
        return QCoeff._raw(acc)

    __radd__ = __add__

    def __neg__(self):
        obj = QCoeff.__new__(QCoeff)
        obj._terms = tuple((d, -c) for d, c in self._terms)
        obj._hash = None
        return obj

    def __sub__(self, other):
        other = as_qcoeff(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return QCoeff._raw({})
            obj = QCoeff.__new__(QCoeff)
            obj._terms = tuple((d, c * other) for d, c in self._terms)
            obj._hash = None
            return obj
        if not isinstance(other, QCoeff):
            return NotImplemented
        acc: dict[int, int] = {}
        for d1, c1 in self._terms:
            for d2, c2 in other._terms:
                d = d1 + d2
                acc[d] = acc.get(d, 0) + c1 * c2
        return QCoeff._raw(acc)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if len(self._terms) != 1 or abs(self._terms[0][1]) != 1:
                raise ValueError("only signed monomials are invertible")
            (d, c), = self._terms
            n = -e
            return QCoeff._raw({-d * n: c ** n})
        out = QCoeff.constant(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, QCoeff):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == (((0, other),) if other else ())
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def evaluate(self, sqrt_q: Union[int, Fraction]) -> Fraction:
        """Value at ``q^(1/2) = sqrt_q``."""
        s = Fraction(sqrt_q)
        if not s and any(d < 0 for d, _ in self._terms):
            raise ZeroDivisionError("q = 0 with negative q-powers")
        return sum((c * s ** d for d, c in self._terms), Fraction(0))

    def evaluate_q(self, q) -> Fraction:
        """Value at ``q``; only for elements with integral q-powers."""
        if self.has_half_powers():
            raise ValueError("half-integral q-powers need a square root of q")
        qf = Fraction(q)
        if not qf and any(d < 0 for d, _ in self._terms):
            raise ZeroDivisionError("q = 0 with negative q-powers")
        return sum((c * qf ** (d // 2) for d, c in self._terms), Fraction(0))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for d, c in reversed(self._terms):
            mono = _q_monomial(d)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}·{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"QCoeff({dict(self._terms)!r})"


def _q_monomial(d: int) -> str:
    if d == 0:
        return ""
    if d == 2:
        return "q"
    if d % 2 == 0:
        return f"q^{{{d // 2}}}"
    return f"q^{{{d}/2}}"


def q_half(d: int, c: int = 1) -> QCoeff:
    """``c * q^(d/2)``."""
    return QCoeff._raw({d: c})


def q_power(e: int, c: int = 1) -> QCoeff:
    """``c * q^e``."""
    return QCoeff._raw({2 * e: c})


def as_qcoeff(x):
    if isinstance(x, QCoeff):
        return x
    if isinstance(x, int):
        return QCoeff.constant(x)
    return NotImplemented
