"""Brute-force reference computations.

Nothing here uses closures, bitset rows or the generator search: relations are
plain sets of pairs and candidates are enumerated as raw subsets.  These are
the independent checks the fast paths are compared against.
"""
from __future__ import annotations

from itertools import combinations, product as cartesian

import numpy as np

from .algebra import FiniteAlgebra


def _value(A: FiniteAlgebra, op, args) -> int:
    idx = 0
    for a in args:
        idx = idx * A.n + a
    return op.table[idx]


def naive_compatible(A: FiniteAlgebra, pairs: set) -> bool:
    plist = sorted(pairs)
    for op in A.ops:
        for rows in cartesian(plist, repeat=op.arity):
            x = _value(A, op, [r[0] for r in rows])
            y = _value(A, op, [r[1] for r in rows])
            if (x, y) not in pairs:
                return False
    return True


def naive_compose(R: set, S: set) -> set:
    return {(a, c) for (a, b) in R for (b2, c) in S if b == b2}


def naive_converse(R: set) -> set:
    return {(b, a) for a, b in R}


def naive_tolerances(A: FiniteAlgebra) -> list[frozenset]:
    """Every reflexive symmetric compatible relation, by subset enumeration."""
    n = A.n
    diag = {(a, a) for a in range(n)}
    edges = list(combinations(range(n), 2))
    out = []
    for mask in range(1 << len(edges)):
        pairs = set(diag)
        for i, (a, b) in enumerate(edges):
            if mask >> i & 1:
                pairs.add((a, b))
                pairs.add((b, a))
        if naive_compatible(A, pairs):
            out.append(frozenset(pairs))
    return sorted(out, key=lambda p: (len(p), sorted(p)))


def naive_congruences(A: FiniteAlgebra) -> list[frozenset]:
    return [T for T in naive_tolerances(A) if naive_compose(set(T), set(T)) <= T]


def _constraints(A: FiniteAlgebra, theta: set, offdiag: list):
    """Implications ``premises -> target`` that compatibility imposes on subsets of ``offdiag``.

    ``premises`` is a bitmask over ``offdiag``; ``target`` is a bit index,
    or -1 when the produced pair lies outside theta.
    """
    pos = {p: i for i, p in enumerate(offdiag)}
    n = A.n
    cands = [(a, a) for a in range(n)] + offdiag
    found = set()
    for op in A.ops:
        for rows in cartesian(cands, repeat=op.arity):
            mask = 0
            for r in rows:
                if r[0] != r[1]:
                    mask |= 1 << pos[r]
            out = (_value(A, op, [r[0] for r in rows]), _value(A, op, [r[1] for r in rows]))
            if out[0] == out[1]:
                continue
            target = pos.get(out, -1)
            if target >= 0 and mask >> target & 1:
                continue
            found.add((mask, target))
    # cheap, selective constraints first: fewer premises prune earlier
    return sorted(found, key=lambda c: (bin(c[0]).count("1"), c))


def naive_reflexive_compatible_subrelations(A: FiniteAlgebra, theta: set) -> list[set]:
    """All reflexive compatible R ⊆ theta, filtering all 2^m subsets of the off-diagonal part."""
    n = A.n
    offdiag = sorted(p for p in theta if p[0] != p[1])
    m = len(offdiag)
    cons = _constraints(A, theta, offdiag)
    out = []
    chunk = 1 << min(m, 20)
    for start in range(0, 1 << m, chunk):
        X = np.arange(start, min(start + chunk, 1 << m), dtype=np.int64)
        for mask, target in cons:
            hit = (X & mask) == mask
            if target < 0:
                X = X[~hit]
            else:
                X = X[~hit | ((X >> target) & 1).astype(bool)]
            if X.size == 0:
                break
        for x in X.tolist():
            R = {(a, a) for a in range(n)} | {offdiag[i] for i in range(m) if x >> i & 1}
            out.append(R)
    return out


def naive_is_representable(A: FiniteAlgebra, theta: set) -> bool:
    theta = set(theta)
    for R in naive_reflexive_compatible_subrelations(A, theta):
        if naive_compose(R, naive_converse(R)) == theta:
            return True
    return False


def naive_join_meet_check(A: FiniteAlgebra, join_idx: int, meet_idx: int, theta: set):
    """Direct evaluation of the lattice construction: R = order ∩ theta and R∘R⁻."""
    j = A.ops[join_idx]
    leq = {(a, b) for a in range(A.n) for b in range(A.n) if _value(A, j, (a, b)) == b}
    R = leq & set(theta)
    return naive_compose(R, naive_converse(R)) == set(theta)


def naive_n_permutable(A: FiniteAlgebra, n: int) -> bool:
    """Alternating composites of every pair of naive congruences, as plain sets."""
    def alt(a, b):
        out = set(a)
        for i in range(1, n):
            out = naive_compose(out, b if i % 2 else a)
        return out

    cons = [set(c) for c in naive_congruences(A)]
    return all(alt(a, b) == alt(b, a) for a, b in combinations(cons, 2))
