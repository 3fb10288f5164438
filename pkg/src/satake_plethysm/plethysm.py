"""Multiplicities N(j, k, n) in the GL2 plethysm Sym^j(Sym^k V).

``Sym^j(Sym^k V)`` splits as a sum of ``Sym^{jk-2n} V (x) det^n`` with
multiplicity ``N(j, k, n)`` for ``0 <= n <= floor(jk/2)``, and ``N(j, k, n)``
is the coefficient of ``q^n`` in ``(1 - q) [j+k choose k]_q``.

Four routes are provided and are expected to agree:

* ``multiplicity_generic``: successive differences of box counts, any k;
* ``multiplicity_k3_closed`` / ``multiplicity_k3_residue``: k = 3 floor
  formula and its mod-6 case table;
* ``multiplicity_k4_recursive`` / ``multiplicity_k4_closed``: k = 4 sums of
  k = 3 values and the mod-12 form (only for n <= j);
* ``plethysm_character`` + ``decompose_character``: brute-force expansion of
  the character followed by greedy peeling.

All floors are toward minus infinity (Python ``//``).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Mapping

from .errors import NotACharacter, OracleTooLarge, OutOfRange
from .partitions import CoefficientSequence, count_partitions, gaussian_coefficients

__all__ = [
    "MultiplicityVector",
    "CharacterPolynomial",
    "multiplicity_generic",
    "multiplicity_vector",
    "signed_sequence",
    "multiplicity_k3_closed",
    "multiplicity_k3_residue",
    "multiplicity_k4_recursive",
    "multiplicity_k4_closed",
    "plethysm_character",
    "decompose_character",
    "oracle_multiplicities",
    "DEFAULT_ORACLE_CAP",
]

DEFAULT_ORACLE_CAP = 10**7


@dataclass(frozen=True)
class MultiplicityVector:
    """``N(j, k, n)`` for ``n = 0 .. floor(jk/2)``."""

    j: int
    k: int
    values: tuple[int, ...]

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def dimension(self) -> int:
        """Total dimension of the decomposition, sum of N(n) * (jk - 2n + 1)."""
        jk = self.j * self.k
        return sum(v * (jk - 2 * n + 1) for n, v in enumerate(self.values))


def _check_n(n, hi, what):
    if n < 0 or n > hi:
        raise OutOfRange(f"{what}: n={n} outside 0..{hi}")


def multiplicity_generic(j: int, k: int, n: int) -> int:
    """``p(j, k, n) - p(j, k, n - 1)``, defined for ``0 <= n <= jk``.

    Nonnegative exactly up to the midpoint ``floor(jk/2)``.
    """
    _check_n(n, j * k, f"N({j}, {k}, n)")
    if n == 0:
        return 1
    return count_partitions(j, k, n) - count_partitions(j, k, n - 1)


def multiplicity_vector(j: int, k: int) -> MultiplicityVector:
    g = gaussian_coefficients(j, k)
    half = j * k // 2
    vals = [1] + [g[n] - g[n - 1] for n in range(1, half + 1)]
    return MultiplicityVector(j, k, tuple(vals))


def signed_sequence(j: int, k: int) -> CoefficientSequence:
    """Coefficients of ``(1 - q) * [j+k choose k]_q`` (degree ``jk + 1``).

    Entries ``c_n = -c_{jk+1-n}``; the first ``floor(jk/2) + 1`` entries are
    the multiplicities.
    """
    g = gaussian_coefficients(j, k).coeffs
    out = list(g) + [0]
    for n in range(1, len(out)):
        out[n] -= g[n - 1]
    return CoefficientSequence(tuple(out))


def _k3_base(n: int) -> int:
    return n // 2 - (n - 1) // 3


def multiplicity_k3_closed(j: int, n: int) -> int:
    """``N(j, 3, n)`` from the floor formula, ``0 <= n <= floor(3j/2)``."""
    _check_n(n, 3 * j // 2, f"N({j}, 3, n)")
    value = _k3_base(n)
    if n > j:
        value -= (n - j - 1) // 2 + 1
    return value


def multiplicity_k3_residue(j: int, n: int) -> int:
    """``N(j, 3, n)`` from the mod-6 case table with ``n = 6a - b``, ``0 <= b <= 5``."""
    _check_n(n, 3 * j // 2, f"N({j}, 3, n)")
    a = -(-n // 6)
    b = 6 * a - n
    if n <= j:
        if b == 5:
            return a - 1
        if b == 0:
            return a + 1
        return a
    if j % 2 == 1:
        base = (j + 1) // 2 - 2 * a
        return base if b in (0, 1, 2) else base + 1
    base = j // 2 - 2 * a
    if b == 1:
        return base
    if b == 4:
        return base + 2
    return base + 1


def multiplicity_k4_recursive(j: int, n: int) -> int:
    """``N(j, 4, n)`` as sums of k = 3 multiplicities, ``0 <= n <= 2j``."""
    _check_n(n, 2 * j, f"N({j}, 4, n)")
    if n <= j:
        return sum(multiplicity_k3_closed(j, n - 4 * s) for s in range(n // 4 + 1))
    head = sum(multiplicity_k3_closed(n, n - 4 * s) for s in range(n // 4 + 1))
    tail = sum(multiplicity_k3_closed(n, s) for s in range(n - j))
    return head - tail


def multiplicity_k4_closed(j: int, n: int) -> int:
    """``N(j, 4, n)`` for ``0 <= n <= j`` from the mod-12 form.

    Even ``n = 12a + 2b``: ``3a(a+1) + 1`` if ``b == 0`` else ``(3a + b)(a + 1)``.
    Odd ``n >= 3`` shifts down by three; ``n = 1`` has no even partner in range
    and goes through the recursive form.
    """
    _check_n(n, j, f"closed N({j}, 4, n)")
    if n % 2 == 1:
        if n < 3:
            return multiplicity_k4_recursive(j, n)
        n -= 3
    a, b = divmod(n, 12)
    b //= 2
    if b == 0:
        return 3 * a * (a + 1) + 1
    return (3 * a + b) * (a + 1)


class CharacterPolynomial(Mapping):
    """Symmetric polynomial in t1, t2: exponent pair ``(e1, e2)`` -> coefficient.

    Zero coefficients are not stored.  Construction rejects asymmetric input.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], int] = {}
        for (e1, e2), c in items:
            key = (int(e1), int(e2))
            acc[key] = acc.get(key, 0) + int(c)
        clean = {key: c for key, c in acc.items() if c}
        for (e1, e2), c in clean.items():
            if clean.get((e2, e1), 0) != c:
                raise ValueError(f"not symmetric at t1^{e1} t2^{e2}")
        self._terms = dict(sorted(clean.items(), reverse=True))

    def __getitem__(self, key):
        return self._terms.get(tuple(key), 0)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __contains__(self, key):
        return tuple(key) in self._terms

    def __eq__(self, other):
        if isinstance(other, CharacterPolynomial):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self._terms == {tuple(k): c for k, c in other.items() if c}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def mass(self) -> int:
        """Sum of all coefficients (the dimension for a genuine character)."""
        return sum(self._terms.values())

    def degrees(self) -> set[int]:
        return {e1 + e2 for e1, e2 in self._terms}

    @classmethod
    def from_components(cls, components: Iterable[tuple[int, int, int]]) -> "CharacterPolynomial":
        """Character of ``sum mult * Sym^m(t1, t2) * (t1 t2)^i``."""
        acc: dict[tuple[int, int], int] = {}
        for m, i, mult in components:
            for r in range(m + 1):
                key = (m - r + i, r + i)
                acc[key] = acc.get(key, 0) + mult
        return cls(acc)

    def __repr__(self):
        if not self._terms:
            return "CharacterPolynomial(0)"
        body = " + ".join(f"{c}*t1^{a}*t2^{b}" for (a, b), c in self._terms.items())
        return f"CharacterPolynomial({body})"


def plethysm_character(j: int, k: int, cap: int = DEFAULT_ORACLE_CAP) -> CharacterPolynomial:
    """Brute-force character of ``Sym^j(Sym^k(t1, t2))``.

    Sums ``t1^(sum(k - i)) * t2^(sum(i))`` over every multiset
    ``{i_1 <= ... <= i_j}`` drawn from ``{0, ..., k}``.
    """
    if j < 0 or k < 0:
        raise OutOfRange(f"j, k must be nonnegative, got {(j, k)}")
    size = comb(j + k, k)
    if size > cap:
        raise OracleTooLarge(f"{size} multisets requested, cap is {cap}")
    acc: dict[tuple[int, int], int] = {}
    for multiset in combinations_with_replacement(range(k + 1), j):
        s = sum(multiset)
        key = (j * k - s, s)
        acc[key] = acc.get(key, 0) + 1
    return CharacterPolynomial(acc)


def decompose_character(chi: CharacterPolynomial) -> list[tuple[int, int, int]]:
    """Write ``chi`` as ``sum mult * Sym^m * (t1 t2)^i``; returns ``(m, i, mult)``.

    Peels the lexicographically largest monomial ``t1^a t2^b`` (``a >= b``)
    each round.  Triples come out in peeling order.
    """
    rest = {key: c for key, c in chi.items()}
    out = []
    while rest:
        a, b = max(key for key in rest if key[0] >= key[1])
        mult = rest[(a, b)]
        if mult < 0:
            raise NotACharacter(f"negative leading coefficient {mult} at t1^{a} t2^{b}")
        m = a - b
        for r in range(m + 1):
            key = (a - r, b + r)
            left = rest.get(key, 0) - mult
            if left < 0:
                raise NotACharacter(f"coefficient at t1^{key[0]} t2^{key[1]} went negative")
            if left:
                rest[key] = left
            else:
                rest.pop(key, None)
        out.append((m, b, mult))
    return out


def oracle_multiplicities(j: int, k: int, cap: int = DEFAULT_ORACLE_CAP) -> dict[int, int]:
    """``n -> N(j, k, n)`` read off the peeled brute-force character.

    Components ``Sym^m * (t1 t2)^i`` of the degree-jk character have
    ``m = jk - 2i``, so the det exponent is the index n.
    """
    out = {}
    for m, i, mult in decompose_character(plethysm_character(j, k, cap=cap)):
        if m + 2 * i != j * k:
            raise NotACharacter(f"component Sym^{m} det^{i} is not of degree {j * k}")
        out[i] = mult
    return out
