"""Relation predicates, closure operators and enumeration of tolerances/congruences."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Iterable

from .algebra import FiniteAlgebra, encode_tuple, fixpoint, pair_ops
from .binrel import BinRel, iter_bits, sorted_rels
from .config import DEFAULT_BUDGET, Budget
from .errors import BudgetExceeded, ContractError


def _same_size(A: FiniteAlgebra, R: BinRel):
    if R.n != A.n:
        raise ContractError(f"relation on {R.n} elements, algebra {A.name} has {A.n}")


def compatibility_witness(A: FiniteAlgebra, R: BinRel):
    """First violation ``(op_name, rows, image)`` of compatibility, or None.

    ``rows`` lists the argument pairs taken from R; ``image`` is the pair of
    results that falls outside R.
    """
    _same_size(A, R)
    n = A.n
    pairs = R.pairs()
    rows = R.rows
    for op in A.ops:
        t = op.table
        if op.arity == 0:
            c = t[0]
            if not rows[c] >> c & 1:
                return (op.name, (), (c, c))
            continue
        if op.arity == 1:
            for a, b in pairs:
                x, y = t[a], t[b]
                if not rows[x] >> y & 1:
                    return (op.name, ((a, b),), (x, y))
            continue
        if op.arity == 2:
            for (a1, b1), (a2, b2) in cartesian(pairs, repeat=2):
                x, y = t[a1 * n + a2], t[b1 * n + b2]
                if not rows[x] >> y & 1:
                    return (op.name, ((a1, b1), (a2, b2)), (x, y))
            continue
        for args in cartesian(pairs, repeat=op.arity):
            x = t[encode_tuple([p[0] for p in args], n)]
            y = t[encode_tuple([p[1] for p in args], n)]
            if not rows[x] >> y & 1:
                return (op.name, args, (x, y))
    return None


def is_compatible(A: FiniteAlgebra, R: BinRel) -> tuple[bool, tuple | None]:
    w = compatibility_witness(A, R)
    return w is None, w


@dataclass(frozen=True)
class RelClass:
    reflexive: bool
    symmetric: bool
    transitive: bool
    compatible: bool

    @property
    def tolerance(self) -> bool:
        return self.reflexive and self.symmetric and self.compatible

    @property
    def congruence(self) -> bool:
        return self.tolerance and self.transitive

    def label(self) -> str:
        if self.congruence:
            return "congruence"
        if self.tolerance:
            return "tolerance, not congruence"
        flags = [
            name if value else f"not {name}"
            for name, value in (
                ("reflexive", self.reflexive),
                ("symmetric", self.symmetric),
                ("transitive", self.transitive),
                ("compatible", self.compatible),
            )
        ]
        return ", ".join(flags)


def classify(A: FiniteAlgebra, R: BinRel) -> RelClass:
    _same_size(A, R)
    return RelClass(
        reflexive=R.is_reflexive(),
        symmetric=R.is_symmetric(),
        transitive=R.is_transitive(),
        compatible=compatibility_witness(A, R) is None,
    )


def is_tolerance(A: FiniteAlgebra, R: BinRel) -> bool:
    return R.is_reflexive() and R.is_symmetric() and compatibility_witness(A, R) is None


def is_congruence(A: FiniteAlgebra, R: BinRel) -> bool:
    return is_tolerance(A, R) and R.is_transitive()


# -- closures -----------------------------------------------------------------

def _as_pairs(G) -> set[tuple[int, int]]:
    if isinstance(G, BinRel):
        return set(G.pairs())
    return {(int(a), int(b)) for a, b in G}


def _sweep_closure(A: FiniteAlgebra, rows: list[int]) -> list[int]:
    """Close row bitmasks under operations of arity <= 2.

    For a binary f, row f(a1, a2) must contain f(R[a1] x R[a2]).  A worklist of
    changed rows limits each round to the argument positions that can produce
    something new; row images of a single ``b1`` are memoised.
    """
    n = A.n
    unary = [op.table for op in A.ops if op.arity == 1]
    binary = [(op.table, {}) for op in A.ops if op.arity == 2]
    for op in A.ops:
        if op.arity == 0:
            c = op.table[0]
            rows[c] |= 1 << c
    everything = range(n)
    dirty = set(a for a in everything if rows[a])
    while dirty:
        todo = sorted(dirty)
        dirty = set()
        changed: set[int] = set()
        for t in unary:
            for a in todo:
                u = 0
                for b in iter_bits(rows[a]):
                    u |= 1 << t[b]
                x = t[a]
                if u & ~rows[x]:
                    rows[x] |= u
                    changed.add(x)
        for t, cache in binary:
            seen_pairs = set()
            for x in todo:
                for a1, a2 in [(x, y) for y in everything] + [(y, x) for y in everything]:
                    if (a1, a2) in seen_pairs:
                        continue
                    seen_pairs.add((a1, a2))
                    s1, s2 = rows[a1], rows[a2]
                    if not s1 or not s2:
                        continue
                    u = 0
                    for b1 in iter_bits(s1):
                        img = cache.get((b1, s2))
                        if img is None:
                            img = 0
                            base = b1 * n
                            for b2 in iter_bits(s2):
                                img |= 1 << t[base + b2]
                            cache[(b1, s2)] = img
                        u |= img
                    target = t[a1 * n + a2]
                    if u & ~rows[target]:
                        rows[target] |= u
                        changed.add(target)
        dirty = changed
    return rows


def compatible_closure(A: FiniteAlgebra, G, closed: BinRel | None = None) -> BinRel:
    """Least compatible relation containing ``G`` (and the already compatible ``closed``)."""
    if all(op.arity <= 2 for op in A.ops):
        rows = list(closed.rows) if closed is not None else [0] * A.n
        for a, b in _as_pairs(G):
            rows[a] |= 1 << b
        return BinRel(A.n, tuple(_sweep_closure(A, rows)))
    base = closed.pairs() if closed is not None else ()
    seed = _as_pairs(G) | {(op.table[0], op.table[0]) for op in A.ops if op.arity == 0}
    pairs = fixpoint(seed, pair_ops(A), base)
    return BinRel.from_pairs(A.n, pairs)


def compatible_reflexive_closure(A: FiniteAlgebra, G, closed: BinRel | None = None) -> BinRel:
    """Least reflexive compatible relation containing ``G``.

    ``closed``, if given, must already be reflexive and compatible; it is used
    as the starting point of the fixpoint.
    """
    seed = _as_pairs(G)
    for p in seed:
        if not (0 <= p[0] < A.n and 0 <= p[1] < A.n):
            raise ContractError(f"pair {p} outside universe of {A.name}")
    if closed is None:
        closed = BinRel.diagonal(A.n)  # the diagonal is always compatible
    return compatible_closure(A, seed, closed)


def transitive_closure(R: BinRel) -> BinRel:
    rows = list(R.rows)
    for k in range(R.n):
        bit = 1 << k
        rk = rows[k]
        for i in range(R.n):
            if rows[i] & bit:
                rows[i] |= rk
    return BinRel(R.n, tuple(rows))


def tolerance_closure(A: FiniteAlgebra, G, closed: BinRel | None = None) -> BinRel:
    """Least tolerance containing ``G``; ``closed`` must already be a tolerance."""
    R = compatible_reflexive_closure(A, G, closed)
    while not R.is_symmetric():
        R = compatible_closure(A, R.converse(), R)
    return R


def congruence_closure(A: FiniteAlgebra, G, closed: BinRel | None = None) -> BinRel:
    """Least congruence containing ``G``; ``closed`` must already be a congruence."""
    R = tolerance_closure(A, G, closed)
    while True:
        T = transitive_closure(R)
        if T == R:
            return R
        R = tolerance_closure(A, T, R)


# -- enumeration ----------------------------------------------------------------

def _join_closure(A: FiniteAlgebra, close, budget: Budget) -> list[BinRel]:
    n = A.n
    bottom = close(A, ())
    principals = sorted_rels(close(A, [(a, b)]) for a in range(n) for b in range(a + 1, n))
    seen = {bottom}
    queue = [bottom]
    for T in queue:
        for P in principals:
            if P <= T:
                continue
            J = close(A, P, T)
            if J not in seen:
                seen.add(J)
                queue.append(J)
                if len(seen) > budget.search:
                    raise BudgetExceeded(f"relations of {A.name}", len(seen), budget.search)
    return sorted_rels(seen)


def enumerate_tolerances(A: FiniteAlgebra, budget: Budget = DEFAULT_BUDGET) -> list[BinRel]:
    """All tolerances of A, sorted by (size, pairs)."""
    return _join_closure(A, tolerance_closure, budget)


def enumerate_congruences(A: FiniteAlgebra, budget: Budget = DEFAULT_BUDGET) -> list[BinRel]:
    return _join_closure(A, congruence_closure, budget)


def principal_tolerance(A: FiniteAlgebra, a: int, b: int) -> BinRel:
    return tolerance_closure(A, [(a, b)])


def symmetric_pairs(pairs: Iterable[tuple[int, int]]) -> set[tuple[int, int]]:
    out = set()
    for a, b in pairs:
        out.add((a, b))
        out.add((b, a))
    return out
