"""Built-in small algebras."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian

from .algebra import FiniteAlgebra, Operation, make_operation
from .binrel import BinRel


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    algebra: FiniteAlgebra
    note: str
    kind: str  # "lattice", "group" or "unary"
    # tolerance the entry exists to exhibit, if any
    tolerance: BinRel | None = None


def lattice_from_order(name: str, n: int, covers: list[tuple[int, int]]) -> FiniteAlgebra:
    """Lattice with operations (meet, join) from the cover relation of its order."""
    leq = [[a == b for b in range(n)] for a in range(n)]
    for a, b in covers:
        leq[a][b] = True
    for k, i, j in cartesian(range(n), repeat=3):
        if leq[i][k] and leq[k][j]:
            leq[i][j] = True

    def bound(a, b, below):
        cands = [c for c in range(n) if (leq[c][a] and leq[c][b] if below else leq[a][c] and leq[b][c])]
        for c in cands:
            if all((leq[d][c] if below else leq[c][d]) for d in cands):
                return c
        raise ValueError(f"{name}: no {'meet' if below else 'join'} for {a},{b}")

    meet = make_operation("meet", 2, n, lambda a, b: bound(a, b, True))
    join = make_operation("join", 2, n, lambda a, b: bound(a, b, False))
    return FiniteAlgebra(name, n, (meet, join))


def chain(n: int) -> FiniteAlgebra:
    return FiniteAlgebra(
        f"C{n}", n, (make_operation("meet", 2, n, min), make_operation("join", 2, n, max))
    )


def cyclic_group(n: int) -> FiniteAlgebra:
    return FiniteAlgebra(
        f"Z{n}",
        n,
        (
            make_operation("mul", 2, n, lambda x, y: (x + y) % n),
            make_operation("inv", 1, n, lambda x: (-x) % n),
        ),
    )


N5 = lattice_from_order("N5", 5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])
M3 = lattice_from_order("M3", 5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])

# the standard non-transitive tolerance on three elements
THETA3 = BinRel.from_pairs(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 0), (1, 2), (2, 1)])

# a single unary map on 4 elements; the 4-cycle 0-1-2-3-0 is an intersection of
# two representable tolerances without being representable itself
W4 = FiniteAlgebra("W4", 4, (Operation("f", 1, (1, 2, 1, 2)),))
CYCLE4 = BinRel.from_pairs(
    4, [(a, a) for a in range(4)] + [p for a in range(4) for p in ((a, (a + 1) % 4), ((a + 1) % 4, a))]
)


@lru_cache(maxsize=None)
def catalog() -> dict[str, CatalogEntry]:
    from .counterexamples import ExAlgebraSpec, build_ex_algebra

    ex3 = build_ex_algebra(ExAlgebraSpec.from_relation(THETA3), name="EX3")
    entries = [
        CatalogEntry("C2", chain(2), "2-element chain", "lattice"),
        CatalogEntry("C3", chain(3), "3-element chain", "lattice"),
        CatalogEntry("C4", chain(4), "4-element chain", "lattice"),
        CatalogEntry("N5", N5, "pentagon: 0 < 1 < 2 < 4, 0 < 3 < 4", "lattice"),
        CatalogEntry("M3", M3, "diamond: atoms 1, 2, 3", "lattice"),
        CatalogEntry("Z2", cyclic_group(2), "cyclic group of order 2 (mul, inv)", "group"),
        CatalogEntry("Z3", cyclic_group(3), "cyclic group of order 3 (mul, inv)", "group"),
        CatalogEntry("EX3", ex3, "unary counterexample algebra for {01,12} on 3 elements", "unary", THETA3),
        CatalogEntry("W4", W4, "mono-unary algebra with a 2-weakly representable 4-cycle", "unary", CYCLE4),
    ]
    return {e.key: e for e in entries}


def get(key: str) -> FiniteAlgebra:
    return catalog()[key].algebra


def lattices() -> list[FiniteAlgebra]:
    return [e.algebra for e in catalog().values() if e.kind == "lattice"]


def check_group_axioms(A: FiniteAlgebra):
    """First failing group identity for (mul, inv), identity element found by search."""
    mul, inv = A.ops[A.op_index("mul")], A.ops[A.op_index("inv")]
    n = A.n
    for x, y, z in cartesian(range(n), repeat=3):
        if mul(mul(x, y), z) != mul(x, mul(y, z)):
            return ("associativity", (x, y, z))
    units = [e for e in range(n) if all(mul(e, x) == x == mul(x, e) for x in range(n))]
    if not units:
        return ("identity", ())
    e = units[0]
    for x in range(n):
        if mul(x, inv(x)) != e or mul(inv(x), x) != e:
            return ("inverse", (x,))
    return None


def self_check(entry: CatalogEntry):
    from .representability import lattice_axiom_violation
    from .relations import is_tolerance

    if entry.kind == "lattice":
        A = entry.algebra
        return lattice_axiom_violation(A, A.op_index("join"), A.op_index("meet"))
    if entry.kind == "group":
        return check_group_axioms(entry.algebra)
    if entry.tolerance is not None and not is_tolerance(entry.algebra, entry.tolerance):
        return ("distinguished relation is not a tolerance", ())
    return None
