"""Finite algebras given by operation tables, and the constructions built on them.

Elements of an algebra of size n are the integers 0..n-1.  Tuples are encoded
mixed-radix with the last coordinate varying fastest, both for operation tables
and for elements of products and powers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as cartesian
from typing import Callable, Iterable, Sequence

from .binrel import BinRel, iter_bits
from .config import DEFAULT_BUDGET, Budget
from .errors import BudgetExceeded, Contradiction, ContractError, InputError


def encode_tuple(t: Sequence[int], n: int) -> int:
    x = 0
    for v in t:
        x = x * n + v
    return x


def decode_tuple(x: int, n: int, k: int) -> tuple[int, ...]:
    out = [0] * k
    for i in range(k - 1, -1, -1):
        x, out[i] = divmod(x, n)
    return tuple(out)


@dataclass(frozen=True)
class Operation:
    name: str
    arity: int
    table: tuple[int, ...]

    def __call__(self, *args: int) -> int:
        return self.table[encode_tuple(args, self._radix)]

    @cached_property
    def _radix(self) -> int:
        # table length is n**arity; recover n
        if self.arity == 0:
            return 1
        return round(len(self.table) ** (1 / self.arity))


@dataclass(frozen=True)
class FiniteAlgebra:
    name: str
    n: int
    ops: tuple[Operation, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"algebra {self.name!r}: universe must be nonempty")
        object.__setattr__(self, "ops", tuple(self.ops))
        for op in self.ops:
            if op.arity < 0:
                raise InputError(f"operation {op.name}: negative arity")
            if len(op.table) != self.n**op.arity:
                raise InputError(
                    f"operation {op.name}: arity {op.arity} needs {self.n ** op.arity} entries, got {len(op.table)}"
                )
            for v in op.table:
                if not 0 <= v < self.n:
                    raise InputError(f"operation {op.name}: entry {v} outside 0..{self.n - 1}")
            # cache the radix so Operation.__call__ never has to guess it
            op.__dict__["_radix"] = self.n

    @property
    def universe(self) -> range:
        return range(self.n)

    @property
    def signature(self) -> tuple[int, ...]:
        return tuple(op.arity for op in self.ops)

    def similar(self, other: FiniteAlgebra) -> bool:
        return self.signature == other.signature

    def op_index(self, name: str) -> int:
        for i, op in enumerate(self.ops):
            if op.name == name:
                return i
        raise InputError(f"{self.name} has no operation named {name!r}")

    def table_entries(self) -> int:
        return sum(len(op.table) for op in self.ops)

    def __repr__(self):
        return f"FiniteAlgebra({self.name!r}, n={self.n}, ops={[op.name for op in self.ops]})"


def make_operation(name: str, arity: int, n: int, fn: Callable[..., int]) -> Operation:
    """Tabulate ``fn`` over all ``arity``-tuples of {0..n-1}."""
    return Operation(name, arity, tuple(fn(*args) for args in cartesian(range(n), repeat=arity)))


def apply_op(A: FiniteAlgebra, op_index: int, args: Sequence[int]) -> int:
    if not 0 <= op_index < len(A.ops):
        raise InputError(f"{A.name} has no operation #{op_index}")
    op = A.ops[op_index]
    if len(args) != op.arity:
        raise InputError(f"{op.name} has arity {op.arity}, got {len(args)} arguments")
    for a in args:
        if not 0 <= a < A.n:
            raise InputError(f"argument {a} outside universe of {A.name}")
    return op.table[encode_tuple(args, A.n)]


def _check_budget(what: str, universe: int, entries: int, budget: Budget):
    if universe > budget.size:
        raise BudgetExceeded(what, universe, budget.size)
    if entries > budget.size:
        raise BudgetExceeded(f"{what} operation tables", entries, budget.size)


def product(A: FiniteAlgebra, B: FiniteAlgebra, budget: Budget = DEFAULT_BUDGET) -> FiniteAlgebra:
    """Direct product; the pair (a, b) is element ``a * B.n + b``."""
    if not A.similar(B):
        raise ContractError(f"{A.name} and {B.name} are not similar")
    m = A.n * B.n
    _check_budget(f"{A.name}x{B.name}", m, sum(m**op.arity for op in A.ops), budget)
    ops = []
    for fa, fb in zip(A.ops, B.ops):
        table = []
        for args in cartesian(range(m), repeat=fa.arity):
            xs = [divmod(x, B.n) for x in args]
            a = fa.table[encode_tuple([p[0] for p in xs], A.n)]
            b = fb.table[encode_tuple([p[1] for p in xs], B.n)]
            table.append(a * B.n + b)
        ops.append(Operation(fa.name, fa.arity, tuple(table)))
    return FiniteAlgebra(f"{A.name}x{B.name}", m, tuple(ops))


def trivial_algebra(like: FiniteAlgebra) -> FiniteAlgebra:
    """One-element algebra similar to ``like``."""
    return FiniteAlgebra("1", 1, tuple(Operation(op.name, op.arity, (0,)) for op in like.ops))


def power(A: FiniteAlgebra, k: int, budget: Budget = DEFAULT_BUDGET) -> FiniteAlgebra:
    if k < 0:
        raise InputError("exponent must be nonnegative")
    size = A.n**k
    _check_budget(f"{A.name}^{k}", size, sum(size**op.arity for op in A.ops), budget)
    P = trivial_algebra(A)
    for _ in range(k):
        P = product(P, A, budget)
    return FiniteAlgebra(f"{A.name}^{k}", P.n, P.ops)


# -- closures -----------------------------------------------------------------

def fixpoint(seed: Iterable, operations: Sequence[tuple[int, Callable]], closed: Iterable = ()) -> set:
    """Least superset of ``closed | seed`` closed under ``operations``.

    ``operations`` holds ``(arity, fn)`` with ``fn`` mapping a tuple of elements
    to an element.  ``closed`` must already be closed; it is never re-swept.
    Rounds only evaluate argument tuples that use at least one new element.
    """
    old = set(closed)
    delta = set(seed) - old
    for arity, fn in operations:
        if arity == 0:
            v = fn(())
            if v not in old:
                delta.add(v)
    while delta:
        full = old | delta
        old_l, delta_l, full_l = list(old), list(delta), list(full)
        new = set()
        for arity, fn in operations:
            for i in range(arity):
                pools = [old_l] * i + [delta_l] + [full_l] * (arity - i - 1)
                for args in cartesian(*pools):
                    v = fn(args)
                    if v not in full:
                        new.add(v)
        old, delta = full, new
    return old


def element_ops(A: FiniteAlgebra) -> list[tuple[int, Callable]]:
    n = A.n
    out = []
    for op in A.ops:
        table = op.table
        out.append((op.arity, lambda args, t=table: t[encode_tuple(args, n)]))
    return out


def tuple_ops(A: FiniteAlgebra) -> list[tuple[int, Callable]]:
    """Operations of A acting coordinatewise on tuples of any fixed width."""
    n = A.n
    out = []
    for op in A.ops:
        table = op.table
        if op.arity == 0:
            # width is unknown here; constants are handled by the callers
            continue
        out.append(
            (op.arity, lambda args, t=table: tuple(t[encode_tuple(col, n)] for col in zip(*args)))
        )
    return out


def pair_ops(A: FiniteAlgebra) -> list[tuple[int, Callable]]:
    """``tuple_ops`` specialised to pairs; constants are left to the callers."""
    n = A.n
    out = []
    for op in A.ops:
        t = op.table
        if op.arity == 1:
            out.append((1, lambda args, t=t: (t[args[0][0]], t[args[0][1]])))
        elif op.arity == 2:
            out.append((2, lambda args, t=t: (t[args[0][0] * n + args[1][0]], t[args[0][1] * n + args[1][1]])))
        elif op.arity > 2:
            out.append(
                (op.arity, lambda args, t=t: (t[encode_tuple([p[0] for p in args], n)],
                                              t[encode_tuple([p[1] for p in args], n)]))
            )
    return out


def subuniverse_closure(A: FiniteAlgebra, S: Iterable[int]) -> frozenset[int]:
    S = set(S)
    for a in S:
        if not 0 <= a < A.n:
            raise InputError(f"element {a} outside universe of {A.name}")
    return frozenset(fixpoint(S, element_ops(A)))


def tuple_subuniverse_closure(A: FiniteAlgebra, width: int, S: Iterable[tuple], closed: Iterable[tuple] = ()) -> frozenset:
    """Subuniverse of A^width generated by tuples ``S`` (over an already closed set)."""
    seed = set(S)
    for op in A.ops:
        if op.arity == 0:
            seed.add((op.table[0],) * width)
    ops = pair_ops(A) if width == 2 else tuple_ops(A)
    return frozenset(fixpoint(seed, ops, closed))


# -- subalgebras of powers ----------------------------------------------------

@dataclass(frozen=True, eq=False)
class PairAlgebra:
    """A subalgebra of ``base**width`` stored by its carrier of tuples.

    The carrier is sorted; element ``i`` of :attr:`algebra` is ``carrier[i]``.
    """

    base: FiniteAlgebra
    width: int
    carrier: tuple[tuple[int, ...], ...]
    budget: Budget = field(default=DEFAULT_BUDGET, repr=False)

    def __post_init__(self):
        carrier = tuple(sorted(set(tuple(t) for t in self.carrier)))
        if not carrier:
            raise InputError("empty carrier")
        for t in carrier:
            if len(t) != self.width or not all(0 <= v < self.base.n for v in t):
                raise InputError(f"tuple {t} is not in {self.base.name}^{self.width}")
        object.__setattr__(self, "carrier", carrier)
        # build eagerly: the tables double as the closure check
        self.algebra

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {t: i for i, t in enumerate(self.carrier)}

    @property
    def size(self) -> int:
        return len(self.carrier)

    @cached_property
    def algebra(self) -> FiniteAlgebra:
        m = len(self.carrier)
        _check_budget("subalgebra carrier", m, sum(m**op.arity for op in self.base.ops), self.budget)
        n = self.base.n
        index = self.index
        ops = []
        for op in self.base.ops:
            table = []
            for args in cartesian(self.carrier, repeat=op.arity):
                if op.arity == 0:
                    t = (op.table[0],) * self.width
                else:
                    t = tuple(op.table[encode_tuple(col, n)] for col in zip(*args))
                i = index.get(t)
                if i is None:
                    raise ContractError(
                        f"carrier not closed: {op.name}{tuple(args)} = {t} is missing"
                    )
                table.append(i)
            ops.append(Operation(op.name, op.arity, tuple(table)))
        return FiniteAlgebra(f"Sub({self.base.name}^{self.width})", m, tuple(ops))

    def contains_diagonal(self) -> bool:
        return all((a,) * self.width in self.index for a in self.base.universe)

    def as_relation(self) -> BinRel:
        if self.width != 2:
            raise ContractError("only width-2 carriers are binary relations")
        return BinRel.from_pairs(self.base.n, self.carrier)


def subalgebra_on_pairs(A: FiniteAlgebra, R: BinRel, budget: Budget = DEFAULT_BUDGET) -> PairAlgebra:
    from .relations import compatibility_witness

    if R.n != A.n:
        raise ContractError(f"relation size {R.n} does not match {A.name} (size {A.n})")
    bad = compatibility_witness(A, R)
    if bad is not None:
        raise ContractError(f"relation is not compatible: {bad}")
    return PairAlgebra(A, 2, tuple(R.pairs()), budget)


# -- homomorphisms ------------------------------------------------------------

def hom_violation(dom: FiniteAlgebra, cod: FiniteAlgebra, mapping: Sequence[int]):
    """First ``(op_name, args)`` where ``mapping`` fails to commute, else None."""
    if not dom.similar(cod):
        return ("<signature>", ())
    n, m = dom.n, cod.n
    for fd, fc in zip(dom.ops, cod.ops):
        for pos, args in enumerate(cartesian(range(n), repeat=fd.arity)):
            lhs = mapping[fd.table[pos]]
            rhs = fc.table[encode_tuple([mapping[a] for a in args], m)]
            if lhs != rhs:
                return (fd.name, args)
    return None


@dataclass(frozen=True, eq=False)
class Hom:
    """A map between similar algebras, checked against every table at construction."""

    dom: FiniteAlgebra
    cod: FiniteAlgebra
    map: tuple[int, ...]
    violation: tuple | None = field(init=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(self.map))
        if len(self.map) != self.dom.n:
            raise InputError(f"map has length {len(self.map)}, domain has {self.dom.n} elements")
        for v in self.map:
            if not 0 <= v < self.cod.n:
                raise InputError(f"image {v} outside codomain of size {self.cod.n}")
        object.__setattr__(self, "violation", hom_violation(self.dom, self.cod, self.map))

    @property
    def ok(self) -> bool:
        return self.violation is None

    @cached_property
    def surjective(self) -> bool:
        return len(set(self.map)) == self.cod.n

    def __call__(self, x: int) -> int:
        return self.map[x]


def verify_hom(h: Hom) -> tuple[bool, tuple | None]:
    return h.ok, h.violation


def compose_homs(outer: Hom, inner: Hom) -> Hom:
    """``outer ∘ inner``: apply ``inner`` first."""
    if inner.cod is not outer.dom and inner.cod != outer.dom:
        raise ContractError("codomain of the inner map is not the domain of the outer map")
    return Hom(inner.dom, outer.cod, tuple(outer.map[x] for x in inner.map))


def identity_hom(A: FiniteAlgebra) -> Hom:
    return Hom(A, A, tuple(range(A.n)))


def projection_hom(P: PairAlgebra, coord: int) -> Hom:
    if not 0 <= coord < P.width:
        raise InputError(f"coordinate {coord} out of range for width {P.width}")
    return Hom(P.algebra, P.base, tuple(t[coord] for t in P.carrier))


def coordinates_hom(P: PairAlgebra, coords: Sequence[int]) -> Hom:
    """Projection onto several coordinates, landing in the image subalgebra of the power."""
    coords = tuple(coords)
    image = PairAlgebra(P.base, len(coords), tuple(tuple(t[c] for c in coords) for t in P.carrier), P.budget)
    return Hom(P.algebra, image.algebra, tuple(image.index[tuple(t[c] for c in coords)] for t in P.carrier))


def kernel(h: Hom) -> BinRel:
    if not h.ok:
        raise ContractError(f"not a homomorphism: violation at {h.violation}")
    classes: dict[int, int] = {}
    for x, v in enumerate(h.map):
        classes[v] = classes.get(v, 0) | (1 << x)
    return BinRel(h.dom.n, tuple(classes[v] for v in h.map))


def image_of_relation(h: Hom, beta: BinRel, *, congruence: bool | None = None) -> BinRel:
    """``{(h(x), h(y)) : x beta y}`` for a surjective homomorphism ``h``.

    When ``beta`` is a congruence the result must be a tolerance; this is
    asserted.  ``congruence`` skips re-deriving that fact for large domains.
    """
    from .relations import is_congruence, is_tolerance

    if not h.surjective:
        raise ContractError("image_of_relation needs a surjective homomorphism")
    if beta.n != h.dom.n:
        raise ContractError(f"relation size {beta.n} does not match domain size {h.dom.n}")
    if not beta.is_reflexive():
        raise ContractError("relation must be reflexive")
    rows = [0] * h.cod.n
    hm = h.map
    for x, row in enumerate(beta.rows):
        acc = 0
        for y in iter_bits(row):
            acc |= 1 << hm[y]
        rows[hm[x]] |= acc
    image = BinRel(h.cod.n, tuple(rows))
    if congruence is None and h.dom.n <= 32 and h.ok:
        congruence = is_congruence(h.dom, beta)
    if congruence and h.ok and not is_tolerance(h.cod, image):
        raise Contradiction("image of a congruence under a surjective homomorphism is not a tolerance")
    return image
