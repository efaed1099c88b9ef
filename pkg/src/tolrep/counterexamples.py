"""Unary algebras on which a given non-transitive relation is a tolerance that is
not weakly representable, plus the checks that this is so."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian

from .algebra import FiniteAlgebra, Operation
from .binrel import BinRel
from .config import DEFAULT_BUDGET, Budget
from .errors import Contradiction, InputError


@dataclass(frozen=True)
class ExAlgebraSpec:
    n: int
    # unordered pairs (a, b) with a <= b; (a, a) marks a diagonal pair
    theta_pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        pairs = frozenset((min(a, b), max(a, b)) for a, b in self.theta_pairs)
        object.__setattr__(self, "theta_pairs", pairs)
        if self.n < 1:
            raise InputError("universe must be nonempty")
        for a, b in pairs:
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise InputError(f"pair {a}-{b} outside universe of size {self.n}")
        missing = [a for a in range(self.n) if (a, a) not in pairs]
        if missing:
            raise InputError(f"relation is not reflexive at {missing}")
        if self.relation.is_transitive():
            raise InputError("construction requires non-transitivity")

    @classmethod
    def from_relation(cls, theta: BinRel) -> ExAlgebraSpec:
        if not theta.is_symmetric():
            raise InputError("relation is not symmetric")
        return cls(theta.n, frozenset((a, b) for a, b in theta.pairs() if a <= b))

    @classmethod
    def from_text(cls, n: int, text: str) -> ExAlgebraSpec:
        """Parse ``"0-1,1-2"``; the diagonal is added automatically."""
        pairs = {(a, a) for a in range(n)}
        for chunk in text.replace(" ", "").split(","):
            if not chunk:
                continue
            try:
                a, b = (int(x) for x in chunk.split("-"))
            except ValueError:
                raise InputError(f"bad pair {chunk!r}; expected a-b") from None
            pairs.add((a, b))
        return cls(n, frozenset(pairs))

    @property
    def relation(self) -> BinRel:
        return BinRel.from_pairs(
            self.n, [p for a, b in self.theta_pairs for p in ((a, b), (b, a))]
        )


def ex_operations(spec: ExAlgebraSpec) -> list[Operation]:
    """All generating maps before deduplication, in canonical order."""
    n = spec.n
    ops = []
    for a, b in sorted(spec.theta_pairs):
        if a == b:
            ops.append(Operation(f"c{a}", 1, (a,) * n))
            continue
        for table in cartesian((a, b), repeat=n):
            ops.append(Operation(f"f{a}_{b}:" + ",".join(map(str, table)), 1, table))
    return ops


def build_ex_algebra(spec: ExAlgebraSpec, name: str | None = None) -> FiniteAlgebra:
    seen = set()
    ops = []
    for op in ex_operations(spec):
        if op.table not in seen:
            seen.add(op.table)
            ops.append(op)
    if name is None:
        name = f"EX{spec.n}[" + ",".join(f"{a}-{b}" for a, b in sorted(spec.theta_pairs) if a != b) + "]"
    return FiniteAlgebra(name, spec.n, tuple(ops))


@dataclass
class ExReport:
    algebra: str
    theta: BinRel
    is_tolerance: bool = False
    closures_contain_theta: bool = False
    strictly_grows: bool = False
    nonrep: object = None
    weak: object = None
    # finite-power image-of-congruence witness, if one was found
    power_witness: object = None
    power_exponents_tried: list[int] = field(default_factory=list)

    def lines(self) -> list[str]:
        out = [
            f"EX algebra={self.algebra}",
            f"EX tolerance={'yes' if self.is_tolerance else 'no'}",
            f"EX closures-contain-theta={'yes' if self.closures_contain_theta else 'no'}",
            f"EX theta-strictly-inside-square={'yes' if self.strictly_grows else 'no'}",
        ]
        if self.nonrep is not None:
            s = self.nonrep
            out.append(
                f"EX representable=no exhausted={'yes' if s.exhausted else 'no'} "
                f"examined={s.candidates_examined} pruned={s.pruned}"
            )
        if self.weak is not None:
            out.append("EX weakly-representable=no")
        if self.power_witness is not None:
            w = self.power_witness
            out.append(f"EX power-image-witness=found k={w.exponent} B-SIZE {w.carrier_size}")
        else:
            tried = ",".join(map(str, self.power_exponents_tried)) or "none"
            out.append(f"EX power-image-witness=not-found tried={tried}")
        return out


def verify_ex_properties(A: FiniteAlgebra, theta: BinRel, budget: Budget = DEFAULT_BUDGET,
                         search_powers: bool = True) -> ExReport:
    from .relations import compatible_reflexive_closure, is_tolerance
    from .representability import (NonRepCertificate, RepCertificate, WeakRepCertificate,
                                    find_power_image_witness, is_representable,
                                    is_weakly_representable)

    report = ExReport(A.name, theta)
    report.is_tolerance = is_tolerance(A, theta)
    if not report.is_tolerance:
        raise Contradiction("relation is not a tolerance of the constructed algebra")

    for a, b in cartesian(range(A.n), repeat=2):
        if a != b and not theta <= compatible_reflexive_closure(A, [(a, b)]):
            raise Contradiction(f"closure of ({a},{b}) does not contain the tolerance")
    report.closures_contain_theta = True

    square = theta.compose(theta)
    report.strictly_grows = theta < square
    if not report.strictly_grows:
        raise Contradiction("tolerance is transitive")

    rep = is_representable(A, theta, budget)
    if isinstance(rep, RepCertificate) or not rep.exhausted:
        raise Contradiction("counterexample tolerance was found representable")
    report.nonrep = rep
    weak = is_weakly_representable(A, theta, budget)
    if isinstance(weak, WeakRepCertificate):
        raise Contradiction("counterexample tolerance was found weakly representable")
    report.weak = weak
    assert isinstance(rep, NonRepCertificate)

    if search_powers:
        for k in range(2, budget.power_exponent + 1):
            report.power_exponents_tried.append(k)
            w = find_power_image_witness(A, theta, k, budget)
            if w is not None:
                report.power_witness = w
                break
    return report
