"""The spherical Hecke algebra of GL2, modeled through its Satake image.

Elements are finite combinations of the basis symbols ``1_m * 1_{i,i}``
(key ``(m, i)``, ``m >= 0``), where ``1_m`` is the sum of the double-coset
indicators ``1_{K diag(w^a, w^b) K}`` over ``a >= b >= 0``, ``a + b = m`` and
``1_{i,i}`` is the central coset of ``diag(w^i, w^i)``.  Coefficients live
in ``Z[q^(1/2), q^(-1/2)]`` (:class:`~.qcoeff.QCoeff`).

The Satake transform sends ``1_m * 1_{i,i}`` to
``q^(m/2) Sym^m(t1, t2) (t1 t2)^i``.  Pulling the SL2 Clebsch-Gordan rule
``Sym^a Sym^b = sum_r Sym^(a+b-2r) (t1 t2)^r`` back through it gives the
convolution rule::

    1_m * 1_n = sum_{r=0}^{min(m,n)} q^r 1_{m+n-2r} * 1_{r,r}

which reproduces ``1_{m+1} = 1_1 * 1_m - q 1_{1,1} * 1_{m-1}`` (see
:func:`build_one_m`).
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt
from typing import Iterable, Iterator, Mapping

from .errors import NonsquareQ
from .plethysm import CharacterPolynomial
from .qcoeff import QCoeff, as_qcoeff

__all__ = [
    "HeckeElement",
    "SymLaurent",
    "CartanElement",
    "convolve",
    "sym_multiply",
    "satake_forward",
    "satake_inverse",
    "build_one_m",
    "to_cartan",
    "from_cartan",
    "evaluate",
    "element_to_record",
    "element_from_record",
    "render",
]

Key = tuple[int, int]


def _accumulate(acc: dict, key: Key, coeff_terms: Iterable[tuple[int, int]], scale: int = 1, shift: int = 0):
    slot = acc.get(key)
    if slot is None:
        slot = acc[key] = {}
    for d, c in coeff_terms:
        d += shift
        slot[d] = slot.get(d, 0) + c * scale


class _Sparse:
    """Immutable finite combination ``key -> QCoeff`` with no zero entries."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Key, dict[int, int]] = {}
        for key, coeff in items:
            key = (int(key[0]), int(key[1]))
            self._check_key(key)
            c = as_qcoeff(coeff)
            if c is NotImplemented:
                raise TypeError(f"coefficient must be int or QCoeff, got {type(coeff).__name__}")
            _accumulate(acc, key, c.terms)
        self._set(acc)

    @classmethod
    def _from_acc(cls, acc: dict[Key, dict[int, int]]):
        obj = cls.__new__(cls)
        obj._set(acc)
        return obj

    def _set(self, acc):
        terms = []
        for key, slot in acc.items():
            c = QCoeff._raw(slot)
            if c:
                terms.append((key, c))
        terms.sort(key=lambda kc: self._order(kc[0]))
        self._terms = tuple(terms)
        self._hash = None

    @staticmethod
    def _check_key(key: Key):
        pass

    @staticmethod
    def _order(key: Key):
        m, i = key
        return (i, m)

    @classmethod
    def basis(cls, a: int, b: int, coeff=1):
        return cls({(a, b): coeff})

    @classmethod
    def zero(cls):
        return cls()

    # mapping-like access
    def items(self) -> tuple[tuple[Key, QCoeff], ...]:
        return self._terms

    def keys(self) -> list[Key]:
        return [k for k, _ in self._terms]

    def __iter__(self) -> Iterator[Key]:
        return (k for k, _ in self._terms)

    def __len__(self):
        return len(self._terms)

    def __getitem__(self, key) -> QCoeff:
        key = tuple(key)
        for k, c in self._terms:
            if k == key:
                return c
        return QCoeff()

    def __contains__(self, key):
        key = tuple(key)
        return any(k == key for k, _ in self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if type(other) is type(self):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self._terms))
        return self._hash

    # linear structure
    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        acc: dict = {}
        for key, c in self._terms + other._terms:
            _accumulate(acc, key, c.terms)
        return self._from_acc(acc)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "_Sparse":
        """Multiply every coefficient by the scalar ``c`` (int or QCoeff)."""
        c = as_qcoeff(c)
        if c is NotImplemented:
            raise TypeError("scalar must be int or QCoeff")
        acc: dict = {}
        for key, coeff in self._terms:
            acc[key] = dict((coeff * c).terms)
        return self._from_acc(acc)

    def __rmul__(self, other):
        if isinstance(other, (int, QCoeff)):
            return self.scale(other)
        return NotImplemented

    def map_coefficients(self, fn) -> "_Sparse":
        acc: dict = {}
        for key, coeff in self._terms:
            acc[key] = dict(fn(key, coeff).terms)
        return self._from_acc(acc)

    def is_q_free(self) -> bool:
        return all(c.is_constant() for _, c in self._terms)

    def __repr__(self):
        body = ", ".join(f"{k}: {c}" for k, c in self._terms)
        return f"{type(self).__name__}({{{body}}})"


class HeckeElement(_Sparse):
    """``sum coeff * 1_m * 1_{i,i}`` keyed by ``(m, i)``; stored ordered by (i, m)."""

    __slots__ = ()

    @staticmethod
    def _check_key(key):
        if key[0] < 0:
            raise ValueError(f"basis key needs m >= 0, got {key}")

    @classmethod
    def one(cls) -> "HeckeElement":
        return cls.basis(0, 0)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return convolve(self, other)
        if isinstance(other, (int, QCoeff)):
            return self.scale(other)
        return NotImplemented

    def __str__(self):
        return render(self)


class SymLaurent(_Sparse):
    """Symmetric Laurent polynomial ``sum coeff * Sym^m(t1, t2) * (t1 t2)^i``."""

    __slots__ = ()

    @staticmethod
    def _check_key(key):
        if key[0] < 0:
            raise ValueError(f"basis key needs m >= 0, got {key}")

    @classmethod
    def one(cls) -> "SymLaurent":
        return cls.basis(0, 0)

    def __mul__(self, other):
        if isinstance(other, SymLaurent):
            return sym_multiply(self, other)
        if isinstance(other, (int, QCoeff)):
            return self.scale(other)
        return NotImplemented

    def monomials(self) -> dict[tuple[int, int], QCoeff]:
        """Expansion ``(e1, e2) -> coefficient of t1^e1 t2^e2``."""
        acc: dict = {}
        for (m, i), c in self._terms:
            for r in range(m + 1):
                _accumulate(acc, (m - r + i, r + i), c.terms)
        out = {}
        for key, slot in acc.items():
            c = QCoeff._raw(slot)
            if c:
                out[key] = c
        return out

    @classmethod
    def from_monomials(cls, monomials: Mapping[tuple[int, int], object]) -> "SymLaurent":
        """Inverse of :meth:`monomials` for a symmetric expansion.

        Peels the lexicographically largest monomial each round; raises
        ``ValueError`` if the input is not symmetric.
        """
        rest: dict = {}
        for key, c in monomials.items():
            c = as_qcoeff(c)
            if c:
                rest[(int(key[0]), int(key[1]))] = c
        acc: dict = {}
        while rest:
            a, b = max(rest)
            if a < b:
                raise ValueError("expansion is not symmetric")
            c = rest[(a, b)]
            _accumulate(acc, (a - b, b), c.terms)
            for r in range(a - b + 1):
                key = (a - r, b + r)
                left = rest.get(key, QCoeff()) - c
                if left:
                    rest[key] = left
                else:
                    rest.pop(key, None)
        return cls._from_acc(acc)

    def to_character(self) -> CharacterPolynomial:
        """The monomial expansion as an integer :class:`CharacterPolynomial`."""
        if not self.is_q_free():
            raise ValueError("coefficients still depend on q")
        return CharacterPolynomial({key: c.constant_term() for key, c in self.monomials().items()})

    def __str__(self):
        return render(self)


class CartanElement(_Sparse):
    """Combination of double-coset indicators ``1_{K diag(w^a, w^b) K}``, ``a >= b``."""

    __slots__ = ()

    @staticmethod
    def _check_key(key):
        if key[0] < key[1]:
            raise ValueError(f"Cartan key needs a >= b, got {key}")

    @staticmethod
    def _order(key):
        a, b = key
        return (b, a)

    def __str__(self):
        return render(self)


def convolve(f: HeckeElement, g: HeckeElement) -> HeckeElement:
    """Convolution product in the ``1_m * 1_{i,i}`` basis."""
    acc: dict = {}
    for (m, i), c1 in f.items():
        for (n, j), c2 in g.items():
            prod = (c1 * c2).terms
            for r in range(min(m, n) + 1):
                _accumulate(acc, (m + n - 2 * r, i + j + r), prod, shift=2 * r)
    return HeckeElement._from_acc(acc)


def sym_multiply(p: SymLaurent, r: SymLaurent) -> SymLaurent:
    """Product of symmetric Laurent polynomials via Clebsch-Gordan."""
    acc: dict = {}
    for (a, i), c1 in p.items():
        for (b, j), c2 in r.items():
            prod = (c1 * c2).terms
            for s in range(min(a, b) + 1):
                _accumulate(acc, (a + b - 2 * s, i + j + s), prod)
    return SymLaurent._from_acc(acc)


def satake_forward(f: HeckeElement) -> SymLaurent:
    """``1_m * 1_{i,i}  ->  q^(m/2) Sym^m (t1 t2)^i``."""
    acc = {}
    for (m, i), c in f.items():
        _accumulate(acc, (m, i), c.terms, shift=m)
    return SymLaurent._from_acc(acc)


def satake_inverse(p: SymLaurent) -> HeckeElement:
    """``Sym^m (t1 t2)^i  ->  q^(-m/2) 1_m * 1_{i,i}``."""
    acc = {}
    for (m, i), c in p.items():
        _accumulate(acc, (m, i), c.terms, shift=-m)
    return HeckeElement._from_acc(acc)


def build_one_m(m: int) -> HeckeElement:
    """``1_m`` from ``1_{m+1} = 1_1 * 1_m - q 1_{1,1} * 1_{m-1}``, using :func:`convolve`."""
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    one_1 = HeckeElement.basis(1, 0)
    q_one_11 = HeckeElement.basis(0, 1, QCoeff({2: 1}))
    prev, cur = None, HeckeElement.one()
    if m == 0:
        return cur
    prev, cur = cur, one_1
    for _ in range(1, m):
        prev, cur = cur, convolve(one_1, cur) - convolve(q_one_11, prev)
    return cur


def from_cartan(c: CartanElement) -> HeckeElement:
    """Cartan indicators to the ``1_m * 1_{i,i}`` basis.

    Telescopes ``1_{K(a,b)K} = 1_{a-b} * 1_{b,b} - 1_{a-b-2} * 1_{b+1,b+1}``,
    the second term dropped when ``a - b < 2``.
    """
    acc: dict = {}
    for (a, b), coeff in c.items():
        _accumulate(acc, (a - b, b), coeff.terms)
        if a - b >= 2:
            _accumulate(acc, (a - b - 2, b + 1), coeff.terms, scale=-1)
    return HeckeElement._from_acc(acc)


def to_cartan(f: HeckeElement) -> CartanElement:
    """Expand ``1_m * 1_{i,i}`` as ``sum_{a >= b >= 0, a + b = m} 1_{K(a+i, b+i)K}``."""
    acc: dict = {}
    for (m, i), coeff in f.items():
        for b in range(m // 2 + 1):
            _accumulate(acc, (m - b + i, b + i), coeff.terms)
    return CartanElement._from_acc(acc)


def _rational_sqrt(x: Fraction) -> Fraction:
    if x <= 0:
        raise NonsquareQ(f"q = {x} has no positive rational square root")
    num, den = x.numerator, x.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise NonsquareQ(f"q = {x} is not the square of a rational")
    return Fraction(rn, rd)


def _sym_value(m: int, alpha: Fraction, beta: Fraction) -> Fraction:
    return sum((alpha ** (m - r) * beta ** r for r in range(m + 1)), Fraction(0))


def evaluate(p: SymLaurent, alpha, beta, qv=1) -> Fraction:
    """Substitute ``t1 = alpha``, ``t2 = beta``, ``q = qv``; exact rational result.

    Half-integral q-powers need ``qv`` to be the square of a positive rational.
    """
    alpha, beta, qv = Fraction(alpha), Fraction(beta), Fraction(qv)
    half = any(c.has_half_powers() for _, c in p.items())
    sqrt_q = _rational_sqrt(qv) if half else None
    det = alpha * beta
    total = Fraction(0)
    for (m, i), c in p.items():
        if i < 0 and not det:
            raise ZeroDivisionError("division by zero: t1*t2 = 0 with a negative determinant power")
        scalar = c.evaluate(sqrt_q) if half else c.evaluate_q(qv)
        total += scalar * _sym_value(m, alpha, beta) * det ** i
    return total


_BASIS_NAMES = {HeckeElement: "sym-det", CartanElement: "cartan"}


def element_to_record(f) -> dict:
    """JSON-ready record ``{basis, terms: [{m, i, coeff: [[d, "c"], ...]}]}``.

    Cartan elements use keys ``a``/``b`` instead of ``m``/``i``.  Big integers
    are emitted as decimal strings.
    """
    basis = _BASIS_NAMES.get(type(f))
    if basis is None:
        raise TypeError(f"cannot serialize {type(f).__name__}")
    names = ("m", "i") if basis == "sym-det" else ("a", "b")
    terms = []
    for (x, y), c in f.items():
        terms.append({names[0]: x, names[1]: y, "coeff": [[d, str(v)] for d, v in c.terms]})
    return {"basis": basis, "terms": terms}


_DECIMAL = re.compile(r"-?(0|[1-9][0-9]*)\Z")


def element_from_record(rec: Mapping):
    """Inverse of :func:`element_to_record`."""
    basis = rec.get("basis")
    if basis == "sym-det":
        cls, names = HeckeElement, ("m", "i")
    elif basis == "cartan":
        cls, names = CartanElement, ("a", "b")
    else:
        raise ValueError(f"unknown basis {basis!r}")
    items = []
    for term in rec.get("terms", ()):
        coeff = {}
        for d, v in term["coeff"]:
            v = str(v)
            if not _DECIMAL.match(v):
                raise ValueError(f"coefficient {v!r} is not a decimal integer")
            coeff[int(d)] = int(v)
        items.append(((int(term[names[0]]), int(term[names[1]])), QCoeff(coeff)))
    return cls(items)


def _sub(x: int) -> str:
    return str(x) if 0 <= x < 10 else f"{{{x}}}"


def _symbol(f, key) -> str:
    x, y = key
    if isinstance(f, HeckeElement):
        return f"1_{_sub(x)}*1_{{{y},{y}}}"
    if isinstance(f, CartanElement):
        return f"1_{{K({x},{y})K}}"
    sym = "1" if x == 0 else f"Sym^{_sub(x)}"
    return sym if y == 0 else f"{sym}·(t1t2)^{_sub(y)}"


def render(f) -> str:
    """Plain-text form, e.g. ``q^{-3/2}·1_3*1_{0,0}``."""
    if not f:
        return "0"
    pieces = []
    for key, c in f.items():
        symbol = _symbol(f, key)
        negative = False
        if len(c.terms) == 1:
            (d, v), = c.terms
            negative = v < 0
            mag = str(-c if negative else c)
            if mag == "1":
                body = symbol
            else:
                body = f"{mag}·{symbol}"
        else:
            body = f"({c})·{symbol}"
        pieces.append((negative, body))
    neg, body = pieces[0]
    text = ("-" if neg else "") + body
    for neg, body in pieces[1:]:
        text += (" - " if neg else " + ") + body
    return text
