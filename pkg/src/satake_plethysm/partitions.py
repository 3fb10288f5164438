"""Partitions in a j-by-k box and their generating polynomials.

``p(j, k, n)`` is the number of partitions of ``n`` into at most ``k`` parts,
each part at most ``j``.  Its generating polynomial in ``q`` is the Gaussian
binomial ``[j+k choose k]_q`` and is built here from the box recurrence::

    p(j, k, n) = p(j, k-1, n) + p(j-1, k, n-k)

(either fewer than k parts, or exactly k parts and we strip the first column).
Nothing is obtained from the product formula.

Boundary conventions: ``p(j, k, 0) = 1`` for every j, k (the empty partition)
and ``p(0, k, n) = p(j, 0, n) = 0`` for ``n >= 1``.
"""
from __future__ import annotations

import threading
from collections import OrderedDict
from dataclasses import dataclass
from math import comb
from typing import Iterator

import numpy as np

from .errors import EnumerationTooLarge, ExcludedPartition, NotInDomain

__all__ = [
    "Partition",
    "BoundedClass",
    "CoefficientSequence",
    "count_partitions",
    "enumerate_partitions",
    "iter_partitions",
    "gaussian_coefficients",
    "count_exact_parts",
    "theorem1_bijection",
    "theorem1_bijection_inverse",
    "clear_caches",
    "DEFAULT_ENUMERATION_CAP",
]

DEFAULT_ENUMERATION_CAP = 10**7

# int64 is exact while every coefficient stays below this; all coefficients of
# [j+k choose k]_q are bounded by binomial(j+k, k).
_INT64_SAFE = 2**62


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive parts.

    Trailing zeros are accepted on input and stripped, so ``Partition((2, 1, 0))``
    and ``Partition((2, 1))`` are the same object.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x < 1 for x in parts):
            raise ValueError(f"parts must be positive: {self.parts!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {self.parts!r}")
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def padded(self, length: int) -> tuple[int, ...]:
        """The parts followed by zeros up to ``length`` entries."""
        if len(self.parts) > length:
            raise ValueError(f"{self} has more than {length} parts")
        return self.parts + (0,) * (length - len(self.parts))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for x in self.parts if x > i) for i in range(self.parts[0])))

    def __repr__(self):
        return f"Partition({self.parts!r})"


@dataclass(frozen=True)
class BoundedClass:
    """Partitions of ``weight`` with at most ``max_parts`` parts, each <= ``max_part``."""

    max_part: int
    max_parts: int
    weight: int

    def __contains__(self, lam) -> bool:
        if not isinstance(lam, Partition):
            try:
                lam = Partition(tuple(lam))
            except (TypeError, ValueError):
                return False
        return (lam.weight == self.weight and len(lam) <= self.max_parts
                and lam.largest <= self.max_part)

    def count(self) -> int:
        return count_partitions(self.max_part, self.max_parts, self.weight)

    def members(self, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Partition]:
        return enumerate_partitions(self.max_part, self.max_parts, self.weight, cap=cap)


@dataclass(frozen=True)
class CoefficientSequence:
    """Exact integer coefficients of a polynomial in q, index = exponent."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def coefficient(self, n: int) -> int:
        """Coefficient of q**n, zero outside the stored range."""
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, CoefficientSequence):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"CoefficientSequence({list(self.coeffs)!r})"


class _BoxTable:
    """Gaussian polynomials G(j, k) for one fixed k, grown row by row in j.

    A row holds G(j, kk) for kk = 0..k.  Only the current row and a bounded
    LRU of finished G(j, k) arrays are kept; asking for a j below the current
    row that fell out of the LRU restarts the sweep.
    """

    def __init__(self, k: int, keep: int = 512):
        self.k = k
        self.keep = keep
        self._lock = threading.Lock()
        self._j = -1
        self._row: list[np.ndarray] = []
        self._done: OrderedDict[int, np.ndarray] = OrderedDict()

    def get(self, j: int) -> np.ndarray:
        with self._lock:
            hit = self._done.get(j)
            if hit is not None:
                self._done.move_to_end(j)
                return hit
            if j < self._j:
                self._j, self._row = -1, []
            while self._j < j:
                self._advance()
            return self._done[self._j]

    def _advance(self):
        k = self.k
        j = self._j + 1
        dtype = np.int64 if comb(j + k, k) < _INT64_SAFE else object
        if j == 0:
            row = [np.ones(1, dtype=dtype) for _ in range(k + 1)]
        else:
            prev = [a.astype(dtype) if a.dtype != dtype else a for a in self._row]
            row = [np.ones(1, dtype=dtype)]
            for kk in range(1, k + 1):
                cur = np.zeros(j * kk + 1, dtype=dtype)
                left = row[kk - 1]
                cur[: len(left)] += left
                # exactly kk parts: strip a column of height kk
                cur[kk:] += prev[kk]
                row.append(cur)
        for a in row:
            a.flags.writeable = False
        self._j, self._row = j, row
        self._done[j] = row[k]
        if len(self._done) > self.keep:
            self._done.popitem(last=False)


_tables: dict[int, _BoxTable] = {}
_tables_lock = threading.Lock()


def _table(k: int) -> _BoxTable:
    with _tables_lock:
        t = _tables.get(k)
        if t is None:
            t = _tables[k] = _BoxTable(k)
        return t


def clear_caches() -> None:
    """Drop every memoized DP table (used for cold-start timings)."""
    with _tables_lock:
        _tables.clear()


def _check_box(j, k):
    if j < 0 or k < 0:
        raise NotInDomain(f"box dimensions must be nonnegative, got j={j}, k={k}")


def _gaussian_array(j: int, k: int) -> np.ndarray:
    _check_box(j, k)
    return _table(k).get(j)


def count_partitions(j: int, k: int, n: int) -> int:
    """Number of partitions of ``n`` into at most ``k`` parts, each at most ``j``.

    >>> count_partitions(4, 3, 6)
    5
    >>> count_partitions(0, 0, 0)
    1
    """
    _check_box(j, k)
    if n < 0 or n > j * k:
        return 0
    return int(_gaussian_array(j, k)[n])


def gaussian_coefficients(j: int, k: int) -> CoefficientSequence:
    """Coefficients of ``[j+k choose k]_q``; entry n is ``count_partitions(j, k, n)``."""
    return CoefficientSequence(tuple(int(x) for x in _gaussian_array(j, k)))


def iter_partitions(j: int, k: int, n: int) -> Iterator[Partition]:
    """Members of ``BoundedClass(j, k, n)`` in increasing lexicographic order."""
    if j < 0 or k < 0 or n < 0:
        raise NotInDomain(f"j, k, n must be nonnegative, got {(j, k, n)}")

    def rec(rem, cap, slots):
        if rem == 0:
            yield ()
            return
        if slots == 0:
            return
        lo = -(-rem // slots)
        for first in range(lo, min(cap, rem) + 1):
            for tail in rec(rem - first, first, slots - 1):
                yield (first,) + tail

    for parts in rec(n, j, k):
        yield Partition(parts)


def enumerate_partitions(j: int, k: int, n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Partition]:
    """Brute-force listing of ``BoundedClass(j, k, n)``, sorted lexicographically.

    Refuses with :class:`EnumerationTooLarge` when the predicted size exceeds
    ``cap``.
    """
    if j < 0 or k < 0 or n < 0:
        raise NotInDomain(f"j, k, n must be nonnegative, got {(j, k, n)}")
    predicted = count_partitions(j, k, n)
    if predicted > cap:
        raise EnumerationTooLarge(f"{predicted} partitions requested, cap is {cap}")
    return list(iter_partitions(j, k, n))


def count_exact_parts(k: int, j: int, n: int) -> int:
    """Partitions of ``n`` into exactly ``j`` parts, largest part at most ``k``.

    Computed as (at most j parts) minus (at most j-1 parts); the first-column
    argument says this equals ``count_partitions(k - 1, j, n - j)``.
    """
    if j < 1 or k < 1:
        raise NotInDomain(f"need j, k >= 1, got j={j}, k={k}")
    return count_partitions(k, j, n) - count_partitions(k, j - 1, n)


def _as_triple(lam) -> tuple[int, int, int]:
    if isinstance(lam, Partition):
        return lam.padded(3)
    t = tuple(int(x) for x in lam)
    if len(t) > 3:
        raise NotInDomain(f"{lam!r} has more than three entries")
    return Partition(t).padded(3)


def _direction(direction: str) -> str:
    d = str(direction).upper()
    if d not in ("P", "Q"):
        raise ValueError(f"direction must be 'P' or 'Q', got {direction!r}")
    return d


def theorem1_bijection(ell: int, direction: str, lam) -> tuple[int, int, int]:
    """Image of ``lam`` under the case maps that prove the two box identities.

    Direction ``P`` sends ``BoundedClass(4l-2, 3, 6l-3)`` onto
    ``BoundedClass(4l-2, 3, 6l-4)``.  Direction ``Q`` sends
    ``BoundedClass(4l, 3, 6l)`` minus ``(4l, 2l, 0)`` onto
    ``BoundedClass(4l, 3, 6l-1)``.  Input and output are explicit 3-tuples
    (zeros included).
    """
    if ell < 1:
        raise NotInDomain(f"ell must be positive, got {ell}")
    d = _direction(direction)
    a, b, c = _as_triple(lam)
    if d == "P":
        domain = BoundedClass(4 * ell - 2, 3, 6 * ell - 3)
    else:
        domain = BoundedClass(4 * ell, 3, 6 * ell)
        if (a, b, c) == (4 * ell, 2 * ell, 0):
            raise ExcludedPartition(f"{(a, b, c)} is excluded from the Q correspondence")
    if (a, b, c) not in domain:
        raise NotInDomain(f"{(a, b, c)} is not in {domain}")

    if c != 0:
        return (a, b, c - 1)
    # the third part is zero: parity of the largest part picks the case
    if d == "P":
        if a % 2 == 0:
            return (a, (b - 1) // 2, (b - 1) // 2)
        return (b, (a - 1) // 2, (a - 1) // 2)
    if a % 2 == 1:
        return (a, (b - 1) // 2, (b - 1) // 2)
    return (b - 1, a // 2, a // 2)


def theorem1_bijection_inverse(ell: int, direction: str, lam) -> tuple[int, int, int]:
    """Inverse of :func:`theorem1_bijection` on its codomain."""
    if ell < 1:
        raise NotInDomain(f"ell must be positive, got {ell}")
    d = _direction(direction)
    a, b, c = _as_triple(lam)
    if d == "P":
        codomain = BoundedClass(4 * ell - 2, 3, 6 * ell - 4)
    else:
        codomain = BoundedClass(4 * ell, 3, 6 * ell - 1)
    if (a, b, c) not in codomain:
        raise NotInDomain(f"{(a, b, c)} is not in {codomain}")

    if b != c:
        return (a, b, c + 1)
    if d == "P":
        if a > b + c:
            return (a, 2 * b + 1, 0)
        return (2 * b + 1, a, 0)
    if a > b + c:
        return (a, 2 * b + 1, 0)
    return (2 * b, a + 1, 0)

