"""n-permutability of congruences, and the finite content of the 3-permutable case."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product as cartesian

from .algebra import FiniteAlgebra, PairAlgebra, image_of_relation, kernel, projection_hom, tuple_subuniverse_closure
from .binrel import BinRel
from .config import DEFAULT_BUDGET, Budget
from .errors import BudgetExceeded, Contradiction
from .relations import enumerate_congruences, enumerate_tolerances
from .representability import is_representable


def alternating(alpha: BinRel, beta: BinRel, n: int) -> BinRel:
    """``alpha ∘ beta ∘ alpha ∘ ...`` with n factors."""
    out = alpha
    for i in range(1, n):
        out = out.compose(beta if i % 2 else alpha)
    return out


def is_n_permutable_congruences(A: FiniteAlgebra, n: int, congruences: list[BinRel] | None = None):
    """``(True, None)`` or ``(False, (alpha, beta, pair))`` with ``pair`` in one chain but not the other."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if congruences is None:
        congruences = enumerate_congruences(A)
    for alpha, beta in combinations(congruences, 2):
        left, right = alternating(alpha, beta, n), alternating(beta, alpha, n)
        if left != right:
            diff = (left - right) | (right - left)
            return False, (alpha, beta, diff.pairs()[0])
    return True, None


def check_tolerances_are_congruences(A: FiniteAlgebra, tolerances: list[BinRel] | None = None):
    if tolerances is None:
        tolerances = enumerate_tolerances(A)
    for T in tolerances:
        if not T.is_transitive():
            return False, T
    return True, None


def enumerate_square_subuniverses(A: FiniteAlgebra, budget: Budget = DEFAULT_BUDGET,
                                  exhaustive: bool | None = None):
    """Nonempty subuniverses of A x A as sorted tuples of pairs, plus an exhaustiveness flag.

    Exhaustive mode joins the one-generated subuniverses; every subuniverse is
    the join of those it contains, so nothing is missed.  Otherwise only
    subuniverses generated by at most ``budget.square_generators`` pairs appear.
    """
    if exhaustive is None:
        exhaustive = A.n <= budget.square_exhaustive_max_n
    points = list(cartesian(range(A.n), repeat=2))
    bottom = tuple_subuniverse_closure(A, 2, ())
    principals = sorted({tuple_subuniverse_closure(A, 2, [p]) for p in points}, key=lambda s: (len(s), sorted(s)))
    seen = {bottom} | set(principals)
    if exhaustive:
        queue = list(seen)
        for S in queue:
            for P in principals:
                if P <= S:
                    continue
                J = tuple_subuniverse_closure(A, 2, P, S)
                if J not in seen:
                    seen.add(J)
                    queue.append(J)
                    if len(seen) > budget.search:
                        raise BudgetExceeded(f"subuniverses of {A.name}^2", len(seen), budget.search)
    else:
        # level k closures extend level k-1 closures by one more generator
        level = {(i,): tuple_subuniverse_closure(A, 2, [p]) for i, p in enumerate(points)}
        for _ in range(2, budget.square_generators + 1):
            nxt = {}
            for gens, S in level.items():
                for j in range(gens[-1] + 1, len(points)):
                    J = S if points[j] in S else tuple_subuniverse_closure(A, 2, [points[j]], S)
                    nxt[gens + (j,)] = J
                    seen.add(J)
            level = nxt
    subs = sorted((tuple(sorted(s)) for s in seen if s), key=lambda s: (len(s), s))
    return subs, exhaustive


@dataclass
class ToleranceRow:
    theta: BinRel
    representable: bool
    square_image: bool
    congruence: bool

    @property
    def agree(self) -> bool:
        return self.representable == self.square_image == self.congruence


@dataclass
class PermReport:
    algebra: str
    bound: int
    verdicts: dict[int, bool] = field(default_factory=dict)
    witnesses: dict[int, tuple] = field(default_factory=dict)
    congruence_pairs: int = 0
    subalgebras_checked: int = 0
    exhaustive: bool = True
    hypothesis: bool | None = None
    hypothesis_witness: tuple | None = None
    rows: list[ToleranceRow] = field(default_factory=list)
    equivalence_verified: bool | None = None

    def lines(self) -> list[str]:
        out = []
        for k in sorted(self.verdicts):
            w = self.witnesses.get(k)
            wtxt = "-" if w is None else f"{w[0]}|{w[1]}|{w[2][0]}-{w[2][1]}"
            out.append(f"NPERM n={k} verdict={'yes' if self.verdicts[k] else 'no'} witness={wtxt}")
        if self.hypothesis is not None:
            out.append(
                f"SQUARES subalgebras={self.subalgebras_checked} exhaustive={'yes' if self.exhaustive else 'no'} "
                f"all-3-permutable={'yes' if self.hypothesis else 'no'}"
            )
            for r in self.rows:
                out.append(
                    f"TOL {r.theta} rep={int(r.representable)} square-image={int(r.square_image)} "
                    f"congruence={int(r.congruence)}"
                )
            eq = {None: "not-asserted", True: "yes", False: "no"}[self.equivalence_verified]
            out.append(f"EQUIVALENCE {eq}")
        return out


def permutability_report(A: FiniteAlgebra, bound: int = 3) -> PermReport:
    cons = enumerate_congruences(A)
    report = PermReport(A.name, bound, congruence_pairs=len(cons) * (len(cons) - 1) // 2)
    for k in range(2, bound + 1):
        ok, w = is_n_permutable_congruences(A, k, cons)
        report.verdicts[k] = ok
        if w is not None:
            report.witnesses[k] = w
    vals = [report.verdicts[k] for k in sorted(report.verdicts)]
    if any(a and not b for a, b in zip(vals, vals[1:])):
        raise Contradiction("n-permutability verdicts are not monotone")
    return report


def square_image_of_kernel(A: FiniteAlgebra, carrier, budget: Budget = DEFAULT_BUDGET) -> BinRel | None:
    """pi_1(ker pi_2) for a subalgebra of A x A containing the diagonal, else None."""
    B = PairAlgebra(A, 2, tuple(carrier), budget)
    if not B.contains_diagonal():
        return None
    phi = projection_hom(B, 0)
    return image_of_relation(phi, kernel(projection_hom(B, 1)), congruence=True)


def check_3perm_equivalences(A: FiniteAlgebra, exhaustive_subalgebras: bool = True,
                             budget: Budget = DEFAULT_BUDGET, bound: int = 3) -> PermReport:
    """Test 3-permutability of every subalgebra of A x A; where it holds, check that
    representable, image-of-kernel-on-a-square-subalgebra and congruence agree on every tolerance."""
    report = permutability_report(A, max(bound, 2))
    exhaustive = exhaustive_subalgebras and A.n <= budget.square_exhaustive_max_n
    subs, report.exhaustive = enumerate_square_subuniverses(A, budget, exhaustive)
    report.subalgebras_checked = len(subs)
    report.hypothesis = True
    # one failing subalgebra settles the hypothesis
    for carrier in subs:
        B = PairAlgebra(A, 2, carrier, budget)
        ok, w = is_n_permutable_congruences(B.algebra, 3)
        if not ok:
            report.hypothesis = False
            report.hypothesis_witness = (carrier, w)
            break
    images = set()
    for carrier in subs:
        img = square_image_of_kernel(A, carrier, budget)
        if img is not None:
            images.add(img)
    for theta in enumerate_tolerances(A, budget):
        row = ToleranceRow(
            theta,
            representable=is_representable(A, theta, budget).representable,
            square_image=theta in images,
            congruence=theta.is_transitive(),
        )
        report.rows.append(row)
        if report.exhaustive and row.representable != row.square_image:
            raise Contradiction(f"representable and square-image disagree on {theta}")
    if report.hypothesis and report.exhaustive:
        if not all(r.agree for r in report.rows):
            raise Contradiction("3-permutable squares but the three conditions differ")
        report.equivalence_verified = True
    return report

