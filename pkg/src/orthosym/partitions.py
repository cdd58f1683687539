"""Partitions (Young diagrams) and the combinatorics built on them.

Partitions are immutable tuples of positive, weakly decreasing rows.  The
canonical order used throughout the package is by size, then descending
lexicographic order on rows, e.g. ``(4), (3,1), (2,2), (2,1,1), (1,1,1,1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import factorial, prod
from typing import Iterable, NamedTuple

from ._linalg import det
from .errors import DomainError


class Partition(tuple):
    """A Young diagram stored as its row lengths.

    Trailing zeros are stripped, so ``Partition((2, 1, 0)) == (2, 1)``.
    """

    __slots__ = ()

    def __new__(cls, rows: Iterable[int] = ()):
        if isinstance(rows, Partition):
            return rows
        rows = [int(r) for r in rows]
        while rows and rows[-1] == 0:
            rows.pop()
        if any(r <= 0 for r in rows):
            raise ValueError(f"rows must be positive: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"rows must be weakly decreasing: {rows}")
        return super().__new__(cls, rows)

    @property
    def rows(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def transpose(self) -> "Partition":
        return transpose(self)

    def boxes(self) -> list["Box"]:
        return [Box(i + 1, j + 1) for i, r in enumerate(self) for j in range(r)]

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


EMPTY = Partition(())


class Box(NamedTuple):
    """A cell of a diagram, 1-based (row, col)."""

    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row


def sort_key(nu: Iterable[int]):
    rows = tuple(nu)
    return (sum(rows), tuple(-r for r in rows))


@cache
def transpose(nu: Partition) -> Partition:
    nu = Partition(nu)
    if not nu:
        return EMPTY
    return Partition(sum(1 for r in nu if r > j) for j in range(nu[0]))


@cache
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in canonical (descending lexicographic) order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(rest, bound):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, bound), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(p) for p in gen(n, n))


def partitions_up_to(n: int) -> list[Partition]:
    return [nu for k in range(n + 1) for nu in enumerate_partitions(k)]


def partitions_with_length(n: int, max_len: int) -> list[Partition]:
    """Partitions of size at most ``n`` with at most ``max_len`` rows."""
    return [nu for nu in partitions_up_to(n) if len(nu) <= max_len]


def contains(mu: Iterable[int], nu: Iterable[int]) -> bool:
    """True iff the diagram ``mu`` is contained in ``nu``."""
    mu, nu = tuple(mu), tuple(nu)
    if len(mu) > len(nu):
        return False
    return all(a <= b for a, b in zip(mu, nu))


def skew_boxes(nu: Partition, mu: Partition = EMPTY) -> list[Box]:
    nu, mu = Partition(nu), Partition(mu)
    if not contains(mu, nu):
        raise DomainError(f"{mu} is not contained in {nu}")
    mu_rows = list(mu) + [0] * (len(nu) - len(mu))
    return [Box(i + 1, j + 1) for i, r in enumerate(nu) for j in range(mu_rows[i], r)]


def corners(nu: Partition) -> list[Box]:
    """Boxes whose removal leaves a diagram, sorted by row."""
    nu = tuple(nu)
    out = []
    for i, r in enumerate(nu):
        nxt = nu[i + 1] if i + 1 < len(nu) else 0
        if r > nxt:
            out.append(Box(i + 1, r))
    return out


def addable(nu: Partition) -> list[Box]:
    """Positions where a box can be added, sorted by row."""
    nu = tuple(nu)
    out = []
    for i, r in enumerate(nu):
        if i == 0 or nu[i - 1] > r:
            out.append(Box(i + 1, r + 1))
    out.append(Box(len(nu) + 1, 1))
    return out


def remove_box(nu: Partition, box: Box) -> Partition:
    rows = list(nu)
    if rows[box.row - 1] != box.col:
        raise DomainError(f"{box} is not a corner of {nu}")
    rows[box.row - 1] -= 1
    return Partition(rows)


def add_box(nu: Partition, box: Box) -> Partition:
    rows = list(nu)
    if box.row == len(rows) + 1:
        rows.append(0)
    rows[box.row - 1] += 1
    return Partition(rows)


def hook_lengths(nu: Partition) -> list[int]:
    conj = transpose(Partition(nu))
    return [(r - j - 1) + (conj[j] - i - 1) + 1 for i, r in enumerate(nu) for j in range(r)]


@cache
def dim(nu: Partition) -> int:
    """Number of standard Young tableaux of shape ``nu`` (hook length formula)."""
    nu = Partition(nu)
    return factorial(nu.size) // prod(hook_lengths(nu))


@cache
def skew_dim(nu: Partition, mu: Partition = EMPTY) -> int:
    """Number of standard tableaux of skew shape nu/mu (0 unless mu is inside nu).

    Uses ``dim nu/mu = (|nu|-|mu|)! det[1/(nu_i - mu_j - i + j)!]``.
    """
    nu, mu = Partition(nu), Partition(mu)
    if not contains(mu, nu):
        return 0
    n = len(nu)
    if n == 0:
        return 1
    mu_rows = list(mu) + [0] * (n - len(mu))
    matrix = []
    for i in range(n):
        row = []
        for j in range(n):
            k = nu[i] - mu_rows[j] - i + j
            row.append(Fraction(1, factorial(k)) if k >= 0 else Fraction(0))
        matrix.append(row)
    value = det(matrix) * factorial(nu.size - mu.size)
    assert value.denominator == 1
    return int(value)


@dataclass(frozen=True)
class ModifiedFrobenius:
    """Half-integer arm/leg coordinates (a; b) of the diagonal hooks."""

    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]

    @property
    def d(self) -> int:
        return len(self.a)


@cache
def frobenius(lam: Partition) -> ModifiedFrobenius:
    lam = Partition(lam)
    conj = transpose(lam)
    d = sum(1 for i, r in enumerate(lam) if r > i)
    half = Fraction(1, 2)
    a = tuple(lam[i] - (i + 1) + half for i in range(d))
    b = tuple(conj[i] - (i + 1) + half for i in range(d))
    return ModifiedFrobenius(a, b)


def content_pochhammer(u, nu: Partition, mu: Partition = EMPTY):
    """Generalized Pochhammer symbol: product of ``u + c`` over boxes of nu/mu."""
    return prod((u + box.content for box in skew_boxes(nu, mu)), start=Fraction(1))


def paired_pochhammer(s, v, nu: Partition, mu: Partition = EMPTY) -> Fraction:
    """Product of ``(z + c)(z' + c) = v + c*s + c**2`` over boxes of nu/mu.

    Here ``s = z + z'`` and ``v = z z'``, so complex-conjugate pairs with
    rational ``s, v`` are handled exactly.
    """
    s, v = Fraction(s), Fraction(v)
    out = Fraction(1)
    for box in skew_boxes(nu, mu):
        c = box.content
        out *= v + c * s + c * c
    return out


def is_horizontal_strip(nu: Partition, mu: Partition) -> bool:
    """True iff nu/mu has at most one box in each column."""
    if not contains(mu, nu):
        return False
    mu_rows = list(mu) + [0] * (len(nu) - len(mu))
    return all(mu_rows[i] >= nu[i + 1] for i in range(len(nu) - 1))


def is_vertical_strip(nu: Partition, mu: Partition) -> bool:
    return is_horizontal_strip(transpose(Partition(nu)), transpose(Partition(mu)))


def to_json(nu: Partition) -> list[int]:
    return list(nu)


def from_json(rows) -> Partition:
    return Partition(rows)


def parse(text: str) -> Partition:
    """Parse a comma-separated row list; the empty string is the empty diagram."""
    text = text.strip()
    if not text:
        return EMPTY
    return Partition(int(t) for t in text.split(","))
