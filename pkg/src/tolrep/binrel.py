"""Dense binary relations on {0..n-1}, one bitmask per row."""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator

from .errors import ContractError, InputError


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class BinRel:
    """Binary relation on an n-element universe.

    Bit ``b`` of ``rows[a]`` is set iff ``(a, b)`` is in the relation.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise InputError(f"relation on {self.n} elements needs {self.n} rows, got {len(self.rows)}")
        top = 1 << self.n
        for r in self.rows:
            if not 0 <= r < top:
                raise InputError(f"row bitmask {r} out of range for n={self.n}")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> BinRel:
        rows = [0] * n
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise InputError(f"pair ({a},{b}) outside universe of size {n}")
            rows[a] |= 1 << b
        return cls(n, tuple(rows))

    @classmethod
    def diagonal(cls, n: int) -> BinRel:
        return cls(n, tuple(1 << a for a in range(n)))

    @classmethod
    def full(cls, n: int) -> BinRel:
        return cls(n, ((1 << n) - 1,) * n)

    @classmethod
    def empty(cls, n: int) -> BinRel:
        return cls(n, (0,) * n)

    def pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a, row in enumerate(self.rows) for b in iter_bits(row)]

    def __contains__(self, pair) -> bool:
        a, b = pair
        return bool(self.rows[a] >> b & 1)

    def __len__(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def __iter__(self):
        return iter(self.pairs())

    def _check(self, other: BinRel):
        if self.n != other.n:
            raise ContractError(f"size mismatch: {self.n} vs {other.n}")

    def __le__(self, other: BinRel) -> bool:
        self._check(other)
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def __lt__(self, other: BinRel) -> bool:
        return self <= other and self != other

    def __ge__(self, other: BinRel) -> bool:
        return other <= self

    def __gt__(self, other: BinRel) -> bool:
        return other < self

    def __and__(self, other: BinRel) -> BinRel:
        self._check(other)
        return BinRel(self.n, tuple(a & b for a, b in zip(self.rows, other.rows)))

    def __or__(self, other: BinRel) -> BinRel:
        self._check(other)
        return BinRel(self.n, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def __sub__(self, other: BinRel) -> BinRel:
        self._check(other)
        return BinRel(self.n, tuple(a & ~b for a, b in zip(self.rows, other.rows)))

    def converse(self) -> BinRel:
        rows = [0] * self.n
        for a, row in enumerate(self.rows):
            for b in iter_bits(row):
                rows[b] |= 1 << a
        return BinRel(self.n, tuple(rows))

    def compose(self, other: BinRel) -> BinRel:
        """``(a, c)`` iff some ``b`` has ``a self b`` and ``b other c``."""
        self._check(other)
        orows = other.rows
        out = []
        for row in self.rows:
            acc = 0
            for b in iter_bits(row):
                acc |= orows[b]
            out.append(acc)
        return BinRel(self.n, tuple(out))

    def is_reflexive(self) -> bool:
        return all(row >> a & 1 for a, row in enumerate(self.rows))

    def is_symmetric(self) -> bool:
        return self == self.converse()

    def is_transitive(self) -> bool:
        return self.compose(self) <= self

    def sort_key(self):
        return (len(self), tuple(self.pairs()))

    def off_diagonal(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in self.pairs() if a != b]

    def __str__(self) -> str:
        return "{" + ",".join(f"({a},{b})" for a, b in self.pairs()) + "}"


def converse(r: BinRel) -> BinRel:
    return r.converse()


def compose(r: BinRel, s: BinRel) -> BinRel:
    return r.compose(s)


def intersect(rels: Iterable[BinRel]) -> BinRel:
    rels = list(rels)
    if not rels:
        raise ContractError("intersection over an empty family is not allowed")
    return reduce(lambda x, y: x & y, rels)


def sorted_rels(rels: Iterable[BinRel]) -> list[BinRel]:
    return sorted(set(rels), key=BinRel.sort_key)
