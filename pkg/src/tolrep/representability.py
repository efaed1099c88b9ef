"""Representable, weakly representable and strongly representable tolerances.

A tolerance T of A is representable when T = R∘R⁻ for a reflexive compatible
relation R.  Such an R is carried along as a certificate together with the
subalgebra B = R of A×A, the first projection phi: B -> A and the kernel beta
of the second projection, for which phi(beta) = T.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Callable, Sequence

from .algebra import (FiniteAlgebra, Hom, PairAlgebra, compose_homs, coordinates_hom,
                      image_of_relation, kernel, projection_hom, subalgebra_on_pairs)
from .binrel import BinRel, intersect, iter_bits
from .config import DEFAULT_BUDGET, Budget
from .errors import BudgetExceeded, Contradiction, ContractError, InputError
from .relations import (compatibility_witness, compatible_reflexive_closure, congruence_closure,
                        enumerate_tolerances, is_congruence, is_tolerance)

# -- lattices -------------------------------------------------------------------

JOIN_NAMES = ("join", "∨", "v")
MEET_NAMES = ("meet", "∧", "^")


def lattice_ops(A: FiniteAlgebra) -> tuple[int, int]:
    """Indices ``(join, meet)`` of the designated lattice operations."""
    names = [op.name for op in A.ops]
    join = next((i for i, nm in enumerate(names) if nm in JOIN_NAMES and A.ops[i].arity == 2), None)
    meet = next((i for i, nm in enumerate(names) if nm in MEET_NAMES and A.ops[i].arity == 2), None)
    if join is None or meet is None:
        raise InputError(f"{A.name} is not a lattice: no designated binary join/meet operations")
    return join, meet


def lattice_axiom_violation(A: FiniteAlgebra, join_idx: int, meet_idx: int):
    """First failing lattice identity as ``(identity, elements)``, or None."""
    j, m = A.ops[join_idx], A.ops[meet_idx]
    n = A.n
    for x in range(n):
        if j(x, x) != x:
            return ("x v x = x", (x,))
        if m(x, x) != x:
            return ("x ^ x = x", (x,))
    for x, y in cartesian(range(n), repeat=2):
        if j(x, y) != j(y, x):
            return ("x v y = y v x", (x, y))
        if m(x, y) != m(y, x):
            return ("x ^ y = y ^ x", (x, y))
        if j(x, m(x, y)) != x:
            return ("x v (x ^ y) = x", (x, y))
        if m(x, j(x, y)) != x:
            return ("x ^ (x v y) = x", (x, y))
    for x, y, z in cartesian(range(n), repeat=3):
        if j(j(x, y), z) != j(x, j(y, z)):
            return ("(x v y) v z = x v (y v z)", (x, y, z))
        if m(m(x, y), z) != m(x, m(y, z)):
            return ("(x ^ y) ^ z = x ^ (y ^ z)", (x, y, z))
    return None


def join_order(A: FiniteAlgebra, join_idx: int) -> BinRel:
    """``a M b`` iff ``a v b = b``."""
    j = A.ops[join_idx]
    return BinRel.from_pairs(A.n, [(a, b) for a, b in cartesian(range(A.n), repeat=2) if j(a, b) == b])


def lattice_order(A: FiniteAlgebra) -> BinRel:
    join, meet = lattice_ops(A)
    bad = lattice_axiom_violation(A, join, meet)
    if bad is not None:
        raise InputError(f"{A.name} is not a lattice: {bad[0]} fails at {bad[1]}")
    leq = join_order(A, join)
    antisym = leq & leq.converse()
    if not (leq.is_reflexive() and leq.is_transitive() and antisym == BinRel.diagonal(A.n)):
        raise Contradiction("lattice order is not a partial order")
    if compatibility_witness(A, leq) is not None:
        raise Contradiction("lattice order is not compatible")
    return leq


# -- certificates -------------------------------------------------------------------

@dataclass
class SearchStats:
    search_space_size: int
    candidates_examined: int = 0
    pruned: int = 0
    exhausted: bool = False
    generators: tuple[tuple[int, int], ...] | None = None


@dataclass
class RepCertificate:
    theta: BinRel
    witness_R: BinRel
    pair_alg: PairAlgebra
    phi: Hom
    beta: BinRel
    verified: bool = False
    search: SearchStats | None = None

    @property
    def representable(self) -> bool:
        return True


@dataclass
class NonRepCertificate:
    theta: BinRel
    search_space_size: int
    candidates_examined: int
    pruned: int
    exhausted: bool

    @property
    def representable(self) -> bool:
        return False


def _require_tolerance(A: FiniteAlgebra, theta: BinRel):
    if theta.n != A.n:
        raise InputError(f"relation on {theta.n} elements, {A.name} has {A.n}")
    if not is_tolerance(A, theta):
        raise InputError("relation is not a tolerance of the algebra")


def certificate_from_witness(A: FiniteAlgebra, theta: BinRel, R: BinRel,
                             budget: Budget = DEFAULT_BUDGET, search: SearchStats | None = None) -> RepCertificate:
    """Build (B, phi, beta) from a witness R and check phi(beta) = theta."""
    if not R.is_reflexive():
        raise ContractError("witness is not reflexive")
    B = subalgebra_on_pairs(A, R, budget)
    phi = projection_hom(B, 0)
    beta = kernel(projection_hom(B, 1))
    cert = RepCertificate(theta, R, B, phi, beta, search=search)
    cert.verified = verify_certificate(A, cert)
    if not cert.verified:
        raise Contradiction("witness does not represent the tolerance")
    return cert


def verify_certificate(A: FiniteAlgebra, cert: RepCertificate) -> bool:
    """Re-check a certificate from scratch."""
    R, theta = cert.witness_R, cert.theta
    if not R.is_reflexive() or compatibility_witness(A, R) is not None:
        return False
    if R.compose(R.converse()) != theta:
        return False
    if not (cert.phi.ok and cert.phi.surjective):
        return False
    return image_of_relation(cert.phi, cert.beta, congruence=True) == theta


# -- search over generating sets -----------------------------------------------------

def _search(A: FiniteAlgebra, theta: BinRel, derive: Callable[[BinRel], BinRel], budget: Budget):
    """Least generating set G (by size, then lexicographically) with derive(closure(G)) == theta.

    Candidates are compatible reflexive closures of sets G of off-diagonal
    pairs of theta.  ``derive`` must be monotone, so once derive(closure(G))
    leaves theta every superset of G can be skipped.  A set with a member
    already generated by the others has the closure of a smaller set and is
    skipped as well.  Both conditions are inherited by supersets, so level k
    is built only from level k-1 survivors.
    """
    pairs = theta.off_diagonal()
    m = len(pairs)
    stats = SearchStats(search_space_size=1 << m)
    base = compatible_reflexive_closure(A, ())
    stats.candidates_examined = 1
    d = derive(base)
    if d == theta:
        stats.generators = ()
        return base, stats
    if not d <= theta:
        stats.exhausted = True
        stats.pruned = stats.search_space_size - stats.candidates_examined
        return None, stats
    alive: dict[tuple[int, ...], BinRel] = {(): base}
    for k in range(1, m + 1):
        nxt: dict[tuple[int, ...], BinRel] = {}
        for S in sorted(alive):
            RS = alive[S]
            for j in range((S[-1] + 1) if S else 0, m):
                G = S + (j,)
                subs = [G[:i] + G[i + 1:] for i in range(k)]
                if any(s not in alive for s in subs):
                    stats.pruned += 1
                    continue
                if any(pairs[G[i]] in alive[subs[i]] for i in range(k)):
                    stats.pruned += 1
                    continue
                R = compatible_reflexive_closure(A, [pairs[j]], RS)
                stats.candidates_examined += 1
                if stats.candidates_examined > budget.search:
                    raise BudgetExceeded("representability search", stats.candidates_examined, budget.search)
                d = derive(R)
                if d == theta:
                    stats.generators = tuple(pairs[g] for g in G)
                    return R, stats
                if d <= theta:
                    nxt[G] = R
        alive = nxt
        if not alive:
            break
    stats.exhausted = True
    stats.pruned = stats.search_space_size - stats.candidates_examined
    return None, stats


def rep_square(R: BinRel) -> BinRel:
    return R.compose(R.converse())


def strong_square(R: BinRel) -> BinRel:
    """``(R∘R⁻) ∩ (R⁻∘R)``."""
    c = R.converse()
    return R.compose(c) & c.compose(R)


def eqm_relation(R: BinRel) -> BinRel:
    """Pairs (a, b) with c, d such that aRc, bRc, dRa, dRb and dRc."""
    n = R.n
    conv = R.converse()
    rows = [0] * n
    for a in range(n):
        for b in range(n):
            ups = R.rows[a] & R.rows[b]          # common upper c
            downs = conv.rows[a] & conv.rows[b]  # common lower d
            if not (ups and downs):
                continue
            for dd in iter_bits(downs):
                if R.rows[dd] & ups:
                    rows[a] |= 1 << b
                    break
    return BinRel(n, tuple(rows))


def is_representable(A: FiniteAlgebra, theta: BinRel, budget: Budget = DEFAULT_BUDGET):
    _require_tolerance(A, theta)
    R, stats = _search(A, theta, rep_square, budget)
    if R is None:
        return NonRepCertificate(theta, stats.search_space_size, stats.candidates_examined,
                                 stats.pruned, stats.exhausted)
    return certificate_from_witness(A, theta, R, budget, stats)


# -- the construction and its chain of equivalences --------------------------------------

@dataclass
class ChainReport:
    pairs_checked: int
    failures: list[tuple[int, int]]
    rows: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def rep_to_congruence_image(A: FiniteAlgebra, cert: RepCertificate, log: bool = False) -> ChainReport:
    """Check, pair by pair, the five equivalent conditions linking theta to phi(beta)."""
    theta, R = cert.theta, cert.witness_R
    conv = R.converse()
    carrier = cert.pair_alg.index
    image = image_of_relation(cert.phi, cert.beta, congruence=True)
    n = A.n
    report = ChainReport(0, [])
    for a, c in cartesian(range(n), repeat=2):
        c1 = (a, c) in theta
        c2 = any((a, b) in R and (b, c) in conv for b in range(n))
        c3 = any((a, b) in R and (c, b) in R for b in range(n))
        c4 = any((a, b) in carrier and (c, b) in carrier for b in range(n))
        c5 = (a, c) in image
        flags = (c1, c2, c3, c4, c5)
        report.pairs_checked += 1
        if len(set(flags)) != 1:
            report.failures.append((a, c))
        if log:
            report.rows.append(f"CHAIN ({a},{c}) " + " ".join("1" if f else "0" for f in flags))
    if report.failures:
        raise Contradiction(f"equivalence chain breaks at {report.failures[:3]}")
    return report


def lattice_witness(L: FiniteAlgebra, theta: BinRel, budget: Budget = DEFAULT_BUDGET) -> RepCertificate:
    """Certificate with R = (order) ∩ theta, checking both inclusions directly."""
    leq = lattice_order(L)
    _require_tolerance(L, theta)
    join_idx, meet_idx = lattice_ops(L)
    jn, mt = L.ops[join_idx], L.ops[meet_idx]
    R = leq & theta
    cert = certificate_from_witness(L, theta, R, budget)
    B = cert.pair_alg.index
    for a, b in theta.pairs():
        top = jn(a, b)
        if (a, top) not in B or (b, top) not in B:
            raise Contradiction(f"({a},{b}) in theta but ({a},{top}) or ({b},{top}) not in B")
    for (a, c), (b, c2) in cartesian(cert.pair_alg.carrier, repeat=2):
        if c != c2:
            continue
        if mt(a, c) != a or mt(c, b) != b or (mt(a, c), mt(c, b)) not in theta:
            raise Contradiction(f"meet argument fails for ({a},{c}), ({b},{c})")
    return cert


def extract_witness_from_image(A: FiniteAlgebra, B: PairAlgebra, theta: BinRel,
                               budget: Budget = DEFAULT_BUDGET) -> RepCertificate:
    if B.base != A or B.width != 2:
        raise InputError("B must be a subalgebra of A x A")
    if not B.contains_diagonal():
        raise InputError("B does not contain the diagonal")
    phi = projection_hom(B, 0)
    if not phi.surjective:
        raise InputError("first projection is not surjective")
    beta = kernel(projection_hom(B, 1))
    if image_of_relation(phi, beta, congruence=True) != theta:
        raise InputError("image of the kernel of the second projection is not theta")
    R = B.as_relation()
    if rep_square(R) != theta:
        raise Contradiction("R∘R⁻ differs from theta although phi(beta) = theta")
    cert = RepCertificate(theta, R, B, phi, beta)
    cert.verified = verify_certificate(A, cert)
    return cert


# -- weak representability --------------------------------------------------------------

@dataclass
class PowerWitness:
    """B ⊆ A × A^lam with phi the first projection and beta = ker(rest)."""

    pair_alg: PairAlgebra
    phi: Hom
    rest: Hom
    beta: BinRel
    image: BinRel
    verified: bool

    @property
    def carrier_size(self) -> int:
        return self.pair_alg.size


@dataclass
class WeakRepCertificate:
    theta: BinRel
    family: list[BinRel]
    certificates: list[RepCertificate]
    power_witness: PowerWitness | None = None
    power_skipped: str | None = None
    # the family is reduced greedily; it is minimal, not necessarily minimum
    minimality: str = "greedy"

    @property
    def lam(self) -> int:
        return len(self.family)

    @property
    def weakly_representable(self) -> bool:
        return True


@dataclass
class WeakNegative:
    theta: BinRel
    representable_supersets: list[BinRel]
    intersection: BinRel

    @property
    def weakly_representable(self) -> bool:
        return False

    @property
    def extra_pair(self) -> tuple[int, int]:
        return (self.intersection - self.theta).pairs()[0]


def power_witness(A: FiniteAlgebra, theta: BinRel, witnesses: Sequence[BinRel],
                  budget: Budget = DEFAULT_BUDGET) -> PowerWitness:
    """Tuples (a, a_1, ..., a_lam) with a R_i a_i; carrier built row by row, never the full power."""
    size = sum(
        _prod(R.rows[a].bit_count() for R in witnesses) for a in range(A.n)
    )
    if size > budget.size:
        raise BudgetExceeded("power witness carrier", size, budget.size)
    carrier = []
    for a in range(A.n):
        choices = [list(iter_bits(R.rows[a])) for R in witnesses]
        for rest in cartesian(*choices):
            carrier.append((a,) + rest)
    B = PairAlgebra(A, len(witnesses) + 1, tuple(carrier), budget)
    phi = projection_hom(B, 0)
    rest = coordinates_hom(B, range(1, len(witnesses) + 1))
    beta = kernel(rest)
    image = image_of_relation(phi, beta, congruence=True)
    return PowerWitness(B, phi, rest, beta, image, verified=phi.surjective and image == theta)


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def is_weakly_representable(A: FiniteAlgebra, theta: BinRel, budget: Budget = DEFAULT_BUDGET,
                            tolerances: list[BinRel] | None = None):
    """Decide whether theta is an intersection of representable tolerances.

    Every such intersection only uses representable tolerances containing
    theta, so theta qualifies iff the intersection of all of them is theta.
    """
    _require_tolerance(A, theta)
    own = is_representable(A, theta, budget)
    if isinstance(own, RepCertificate):
        family, certs = [theta], [own]
    else:
        if tolerances is None:
            tolerances = enumerate_tolerances(A, budget)
        certs = []
        for T in tolerances:
            if theta < T:
                c = is_representable(A, T, budget)
                if isinstance(c, RepCertificate):
                    certs.append(c)
        family = [c.theta for c in certs]
        meet = intersect(family) if family else BinRel.full(A.n)
        if meet != theta:
            return WeakNegative(theta, family, meet)
        # drop members, largest first, while the intersection stays theta
        for c in sorted(certs, key=lambda c: c.theta.sort_key(), reverse=True):
            trial = [x for x in certs if x is not c]
            if trial and intersect(x.theta for x in trial) == theta:
                certs = trial
        family = [c.theta for c in certs]
    cert = WeakRepCertificate(theta, family, certs)
    try:
        cert.power_witness = power_witness(A, theta, [c.witness_R for c in certs], budget)
    except BudgetExceeded as exc:
        cert.power_skipped = str(exc)
        return cert
    if not cert.power_witness.verified:
        raise Contradiction("power construction does not reproduce theta")
    return cert


# -- strong representations ---------------------------------------------------------------

def check_strong_rep(A: FiniteAlgebra, theta: BinRel, budget: Budget = DEFAULT_BUDGET):
    """``(R, stats)`` with theta = (R∘R⁻) ∩ (R⁻∘R), or ``(None, stats)``."""
    _require_tolerance(A, theta)
    return _search(A, theta, strong_square, budget)


def check_eqm(A: FiniteAlgebra, theta: BinRel, R: BinRel,
              c_of: Callable[[int, int], int] | None = None,
              d_of: Callable[[int, int], int] | None = None):
    """Whether theta is exactly the set of pairs with the c/d configuration in R.

    With ``c_of``/``d_of`` given, each theta pair must be witnessed by those
    particular elements.  Returns ``(ok, first_bad_pair)``.
    """
    if compatibility_witness(A, R) is not None:
        return False, None
    E = eqm_relation(R)
    for a, b in cartesian(range(A.n), repeat=2):
        if ((a, b) in E) != ((a, b) in theta):
            return False, (a, b)
    if c_of is not None and d_of is not None:
        for a, b in theta.pairs():
            c, d = c_of(a, b), d_of(a, b)
            if not ((a, c) in R and (b, c) in R and (d, a) in R and (d, b) in R and (d, c) in R):
                return False, (a, b)
    return True, None


@dataclass
class StrongLatticeReport:
    theta: BinRel
    R: BinRel
    eq_holds: bool
    eqm_holds: bool
    bad_pair: tuple[int, int] | None


def lattice_strong_witness(L: FiniteAlgebra, theta: BinRel) -> StrongLatticeReport:
    """R = theta ∩ order, with c = a v b and d = a ^ b."""
    leq = lattice_order(L)
    _require_tolerance(L, theta)
    j, m = lattice_ops(L)
    jn, mt = L.ops[j], L.ops[m]
    R = theta & leq
    eq = strong_square(R) == theta and compatibility_witness(L, R) is None
    ok, bad = check_eqm(L, theta, R, jn, mt)
    return StrongLatticeReport(theta, R, eq, ok, bad)


# -- sufficient conditions on (join, meet, M) ---------------------------------------------------

@dataclass
class LattgenReport:
    passed: bool
    violation: tuple | None = None  # (condition, elements)
    tolerances_checked: int = 0

    def line(self, tag: str) -> str:
        if self.passed:
            return f"{tag} pass tolerances={self.tolerances_checked}"
        cond, elems = self.violation
        return f"{tag} fail condition={cond} at={','.join(map(str, elems))}"


def _lattgen_conditions(A: FiniteAlgebra, join_idx: int, meet_idx: int, M: BinRel):
    j, m = A.ops[join_idx], A.ops[meet_idx]
    n = A.n
    for a in range(n):
        if j(a, a) != a:
            return ("(1)", (a,))
    for a, b in cartesian(range(n), repeat=2):
        ab = j(a, b)
        if (a, ab) not in M or (b, ab) not in M:
            return ("(2)", (a, b))
    for a, c in M.pairs():
        if not (m(a, c) == a and m(c, a) == a):
            return ("(3)", (a, c))
    return None


def _lattgen_pipeline(A: FiniteAlgebra, M: BinRel, budget: Budget) -> int:
    count = 0
    for theta in enumerate_tolerances(A, budget):
        R = M & theta
        if rep_square(R) != theta:
            raise Contradiction(f"M ∩ theta does not represent {theta}")
        rep_to_congruence_image(A, certificate_from_witness(A, theta, R, budget))
        count += 1
    return count


def lattgen_check(A: FiniteAlgebra, join_idx: int, meet_idx: int, M: BinRel,
                  budget: Budget = DEFAULT_BUDGET) -> LattgenReport:
    for i in (join_idx, meet_idx):
        if A.ops[i].arity != 2:
            raise InputError(f"operation {A.ops[i].name} is not binary")
    bad = compatibility_witness(A, M)
    if bad is not None:
        op, rows, img = bad
        return LattgenReport(False, ("M compatible", (op,) + tuple(x for r in rows for x in r) + img))
    bad = _lattgen_conditions(A, join_idx, meet_idx, M)
    if bad is not None:
        return LattgenReport(False, bad)
    return LattgenReport(True, None, _lattgen_pipeline(A, M, budget))


def lattgen2_check(A: FiniteAlgebra, budget: Budget = DEFAULT_BUDGET) -> LattgenReport:
    if len(A.ops) != 2 or any(op.arity != 2 for op in A.ops):
        raise InputError("needs exactly two binary operations and nothing else")
    try:
        join_idx, meet_idx = lattice_ops(A)
    except InputError:
        join_idx, meet_idx = 0, 1
    j, m = A.ops[join_idx], A.ops[meet_idx]
    n = A.n
    M = join_order(A, join_idx)
    # (0): M is preserved by both operations
    for (a, b), (a2, b2) in cartesian(M.pairs(), repeat=2):
        if j(j(a, a2), j(b, b2)) != j(b, b2):
            return LattgenReport(False, ("(0) join", (a, a2, b, b2)))
        if j(m(a, a2), m(b, b2)) != m(b, b2):
            return LattgenReport(False, ("(0) meet", (a, a2, b, b2)))
    for a in range(n):
        if j(a, a) != a:
            return LattgenReport(False, ("(1)", (a,)))
    for a, b in cartesian(range(n), repeat=2):
        ab = j(a, b)
        if j(a, ab) != ab or j(b, ab) != ab:
            return LattgenReport(False, ("(2)", (a, b)))
    for a, c in cartesian(range(n), repeat=2):
        if j(a, c) == c and not (m(a, c) == a and m(c, a) == a):
            return LattgenReport(False, ("(3)", (a, c)))
    return LattgenReport(True, None, _lattgen_pipeline(A, M, budget))


# -- chains of images -----------------------------------------------------------------------

def verify_image_chain(theta: BinRel, psi: Hom, Psi: BinRel, phi: Hom, Phi: BinRel) -> Hom:
    """Given theta = psi(Psi) and Psi = phi(Phi), return psi∘phi after checking theta = (psi∘phi)(Phi)."""
    if image_of_relation(psi, Psi) != theta:
        raise ContractError("theta is not the image of Psi")
    if image_of_relation(phi, Phi) != Psi:
        raise ContractError("Psi is not the image of Phi")
    composite = compose_homs(psi, phi)
    if not (composite.ok and composite.surjective):
        raise Contradiction("composite of surjective homomorphisms is not one")
    if image_of_relation(composite, Phi) != theta:
        raise Contradiction("composite map does not carry Phi onto theta")
    return composite


# -- image-of-congruence witnesses in larger powers ------------------------------------------

@dataclass
class PowerImageWitness:
    exponent: int
    pair_alg: PairAlgebra
    phi: Hom
    beta: BinRel

    @property
    def carrier_size(self) -> int:
        return self.pair_alg.size


def _path_carrier(theta: BinRel, k: int) -> list[tuple[int, ...]]:
    out = [(a,) for a in range(theta.n)]
    for _ in range(k - 1):
        out = [t + (b,) for t in out for b in iter_bits(theta.rows[t[-1]])]
    return out


def find_power_image_witness(A: FiniteAlgebra, theta: BinRel, k: int,
                             budget: Budget = DEFAULT_BUDGET) -> PowerImageWitness | None:
    """Greedy search for B ⊆ A^k and a congruence beta on B with pi_1(beta) = theta.

    B ranges over the tuples whose consecutive entries are theta-related, then
    over all of A^k.  beta is grown one principal congruence at a time; a
    failure says nothing about whether a witness exists.
    """
    candidates = [_path_carrier(theta, k)]
    if A.n**k <= budget.size:
        candidates.append(list(cartesian(range(A.n), repeat=k)))
    for carrier in candidates:
        try:
            B = PairAlgebra(A, k, tuple(carrier), budget)
        except (BudgetExceeded, ContractError):
            continue
        phi = projection_hom(B, 0)
        fibres: dict[int, list[int]] = {}
        for i, t in enumerate(B.carrier):
            fibres.setdefault(t[0], []).append(i)
        beta = BinRel.diagonal(B.size)
        for a, c in theta.off_diagonal():
            if a > c:
                continue
            if (a, c) in image_of_relation(phi, beta, congruence=True):
                continue
            for u, v in cartesian(fibres[a], fibres[c]):
                J = congruence_closure(B.algebra, [(u, v)], beta)
                if image_of_relation(phi, J, congruence=True) <= theta:
                    beta = J
                    break
            else:
                break
        if image_of_relation(phi, beta, congruence=True) == theta:
            if not is_congruence(B.algebra, beta):
                raise Contradiction("greedy congruence is not a congruence")
            return PowerImageWitness(k, B, phi, beta)
    return None


# -- text reports ---------------------------------------------------------------------------

def format_pairs(R: BinRel) -> str:
    return " ".join(f"{a}-{b}" for a, b in R.off_diagonal()) or "-"


def rep_report(A: FiniteAlgebra, result, chain: bool = True) -> list[str]:
    if isinstance(result, RepCertificate):
        lines = ["REP yes", f"WITNESS {format_pairs(result.witness_R)}", f"B-SIZE {result.pair_alg.size}"]
        if chain:
            rep_to_congruence_image(A, result)
            lines.append("CHAIN-VERIFIED yes")
        s = result.search
        if s is not None:
            lines.append(f"SEARCH examined={s.candidates_examined} pruned={s.pruned}")
        return lines
    return [
        "REP no",
        f"SEARCH examined={result.candidates_examined} pruned={result.pruned} "
        f"space={result.search_space_size} exhausted={'yes' if result.exhausted else 'no'}",
    ]


def weak_report(A: FiniteAlgebra, result) -> list[str]:
    if isinstance(result, WeakRepCertificate):
        lines = ["WEAKREP yes", f"LAMBDA {result.lam}"]
        for T in result.family:
            lines.append(f"MEMBER {format_pairs(T)}")
        if result.power_witness is not None:
            w = result.power_witness
            lines.append(f"POWER-B-SIZE {w.carrier_size}")
            lines.append(f"POWER-VERIFIED {'yes' if w.verified else 'no'}")
        else:
            lines.append(f"POWER-SKIPPED {result.power_skipped}")
        return lines
    a, b = result.extra_pair
    return [
        "WEAKREP no",
        f"REPRESENTABLE-SUPERSETS {len(result.representable_supersets)}",
        f"INTERSECTION {format_pairs(result.intersection)}",
        f"EXTRA-PAIR {a}-{b}",
    ]
