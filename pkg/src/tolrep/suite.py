"""The replay suite: every acceptance criterion as a function returning a verdict.

Report lines carry no timings, so two runs of the suite print identical bytes;
runtime limits still decide pass/fail.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import catalog as cat
from .algebra import FiniteAlgebra, make_operation
from .config import DEFAULT_BUDGET, Budget
from .counterexamples import verify_ex_properties
from .oracles import naive_is_representable
from .permutability import check_tolerances_are_congruences, is_n_permutable_congruences
from .relations import enumerate_tolerances
from .representability import (RepCertificate, WeakRepCertificate, format_pairs, is_representable,
                               is_weakly_representable, join_order, lattgen2_check, lattgen_check,
                               lattice_ops, lattice_order, lattice_strong_witness, lattice_witness,
                               rep_report, rep_to_congruence_image)

# tolerance counts of the catalog lattices, from naive subset enumeration
FROZEN_TOLERANCE_COUNTS = {"C2": 2, "C3": 5, "C4": 14, "N5": 5, "M3": 2}

LATTICE_KEYS = ("C2", "C3", "C4", "N5", "M3")


@dataclass
class CriterionResult:
    number: int
    key: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self, timings: bool = False) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        extra = f" time={self.seconds:.2f}s" if timings else ""
        return f"CRITERION {self.number} {self.key} {verdict} {self.detail}{extra}"


def small_catalog(max_n: int = 5) -> list[tuple[str, FiniteAlgebra]]:
    return [(k, e.algebra) for k, e in cat.catalog().items() if e.algebra.n <= max_n]


def z2_as_lattice() -> FiniteAlgebra:
    """Z2 with addition in both the join and the meet slot."""
    add = make_operation("join", 2, 2, lambda x, y: (x + y) % 2)
    return FiniteAlgebra("Z2(+,+)", 2, (add, make_operation("meet", 2, 2, lambda x, y: (x + y) % 2)))


def _timed(number: int, key: str, limit: float | None, body) -> CriterionResult:
    t0 = time.perf_counter()
    try:
        passed, detail = body()
    except Exception as exc:  # a crash is a named failure, never a silent pass
        passed, detail = False, f"error={type(exc).__name__}:{exc}"
    dt = time.perf_counter() - t0
    if limit is not None and dt >= limit:
        passed = False
        detail += f" over-time-limit={limit:g}s"
    return CriterionResult(number, key, passed, detail, dt)


def _lattice_certificates(budget: Budget):
    for key in LATTICE_KEYS:
        L = cat.get(key)
        for theta in enumerate_tolerances(L, budget):
            yield key, L, theta, lattice_witness(L, theta, budget)


def criterion_1(budget: Budget = DEFAULT_BUDGET) -> CriterionResult:
    def body():
        counts = {}
        failures = 0
        for key in LATTICE_KEYS:
            L = cat.get(key)
            tols = enumerate_tolerances(L, budget)
            counts[key] = len(tols)
            if len(tols) != FROZEN_TOLERANCE_COUNTS[key]:
                failures += 1
            for theta in tols:
                cert = lattice_witness(L, theta, budget)
                leq = lattice_order(L)
                if cert.witness_R != leq & theta or cert.witness_R.compose(cert.witness_R.converse()) != theta:
                    failures += 1
                if not rep_to_congruence_image(L, cert).ok:
                    failures += 1
        detail = "counts=" + ",".join(f"{k}:{v}" for k, v in counts.items()) + f" failures={failures}"
        return failures == 0, detail

    return _timed(1, "lattice-representability", 5.0, body)


def criterion_2(budget: Budget = DEFAULT_BUDGET) -> CriterionResult:
    def body():
        checked = disagreements = 0
        for key, A in small_catalog(5):
            for theta in enumerate_tolerances(A, budget):
                fast = is_representable(A, theta, budget).representable
                slow = naive_is_representable(A, set(theta.pairs()))
                checked += 1
                disagreements += fast != slow
        return disagreements == 0, f"tolerances={checked} disagreements={disagreements}"

    return _timed(2, "decision-completeness", 60.0, body)


def criterion_3(budget: Budget = DEFAULT_BUDGET) -> CriterionResult:
    def body():
        A = cat.get("EX3")
        rep = verify_ex_properties(A, cat.THETA3, budget, search_powers=False)
        s = rep.nonrep
        ok = (rep.is_tolerance and rep.closures_contain_theta and rep.strictly_grows
              and s.exhausted and rep.weak is not None)
        return ok, (f"exhausted={'yes' if s.exhausted else 'no'} examined={s.candidates_examined} "
                    f"pruned={s.pruned} weakrep=no strict-square=yes")

    return _timed(3, "nonrepresentable-counterexample", 5.0, body)


def criterion_4(budget: Budget = DEFAULT_BUDGET) -> CriterionResult:
    def body():
        certs = failures = pairs = 0
        for _, L, _, cert in _lattice_certificates(budget):
            r = rep_to_congruence_image(L, cert)
            certs += 1
            pairs += r.pairs_checked
            failures += len(r.failures)
        for _, A in small_catalog(5):
            for theta in enumerate_tolerances(A, budget):
                cert = is_representable(A, theta, budget)
                if isinstance(cert, RepCertificate):
                    r = rep_to_congruence_image(A, cert)
                    certs += 1
                    pairs += r.pairs_checked
                    failures += len(r.failures)
        return failures == 0, f"certificates={certs} pairs={pairs} failures={failures}"

    return _timed(4, "equivalence-chain", None, body)


def criterion_5(budget: Budget = DEFAULT_BUDGET) -> CriterionResult:
    def body():
        checked = failures = 0
        for key in LATTICE_KEYS:
            L = cat.get(key)
            for theta in enumerate_tolerances(L, budget):
                r = lattice_strong_witness(L, theta)
                checked += 1
                failures += not (r.eq_holds and r.eqm_holds)
        return failures == 0, f"tolerances={checked} failures={failures}"

    return _timed(5, "strong-representation", None, body)


def criterion_6(budget: Budget = DEFAULT_BUDGET) -> CriterionResult:
    def body():
        weak = lam1 = failures = 0
        lam_max = 0
        for _, A in cat_items():
            tols = enumerate_tolerances(A, budget)
            for theta in tols:
                w = is_weakly_representable(A, theta, budget, tolerances=tols)
                if not isinstance(w, WeakRepCertificate):
                    continue
                weak += 1
                lam_max = max(lam_max, w.lam)
                pw = w.power_witness
                if pw is None or not pw.verified or pw.image != theta:
                    failures += 1
                if w.lam == 1:
                    lam1 += 1
                    rep = is_representable(A, theta, budget)
                    same = (isinstance(rep, RepCertificate)
                            and rep.witness_R == w.certificates[0].witness_R
                            and pw is not None and pw.pair_alg.carrier == rep.pair_alg.carrier)
                    failures += not same
        return failures == 0, f"weakly-representable={weak} lambda1={lam1} lambda-max={lam_max} failures={failures}"

    return _timed(6, "weak-representability", None, body)


def cat_items():
    return [(k, e.algebra) for k, e in cat.catalog().items()]


def criterion_7(budget: Budget = DEFAULT_BUDGET) -> CriterionResult:
    def body():
        problems = []
        for key in ("Z2", "Z3"):
            A = cat.get(key)
            if not check_tolerances_are_congruences(A)[0]:
                problems.append(f"{key}-tolerances")
            if not is_n_permutable_congruences(A, 2)[0]:
                problems.append(f"{key}-2perm")
        ok, w = check_tolerances_are_congruences(cat.get("C3"))
        if ok or w != cat.THETA3:
            problems.append("C3-witness")
        for key in LATTICE_KEYS:
            L = cat.get(key)
            j, m = lattice_ops(L)
            if not lattgen_check(L, j, m, lattice_order(L), budget).passed:
                problems.append(f"{key}-lattgen")
            if not lattgen2_check(L, budget).passed:
                problems.append(f"{key}-lattgen2")
        Z = z2_as_lattice()
        r1 = lattgen_check(Z, 0, 1, join_order(Z, 0), budget)
        r2 = lattgen2_check(Z, budget)
        if r1.passed or r2.passed:
            problems.append("Z2-not-refuted")
        detail = (f"z2-lattgen={r1.violation[0] if r1.violation else '-'}"
                  f" z2-lattgen2={r2.violation[0] if r2.violation else '-'}"
                  f" c3-witness={format_pairs(w) if w is not None else '-'}")
        if problems:
            detail += " problems=" + ",".join(problems)
        return not problems, detail

    return _timed(7, "permutability-and-lattgen", None, body)


def replay_report(budget: Budget = DEFAULT_BUDGET, jobs: int = 1) -> str:
    """Representation report for every tolerance of every catalog algebra."""
    keys = list(cat.catalog())
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_replay_one, keys, [budget] * len(keys)))
    else:
        parts = [_replay_one(k, budget) for k in keys]
    return "".join(parts)


def _replay_one(key: str, budget: Budget) -> str:
    A = cat.get(key)
    out = []
    for theta in enumerate_tolerances(A, budget):
        out.append(f"ALGEBRA {key} THETA {format_pairs(theta)}")
        out.extend(rep_report(A, is_representable(A, theta, budget)))
    return "\n".join(out) + "\n"


def criterion_8(budget: Budget = DEFAULT_BUDGET, jobs: int = 2) -> CriterionResult:
    def body():
        a = replay_report(budget, 1)
        b = replay_report(budget, max(2, jobs))
        return a == b, f"bytes={len(a.encode())} identical={'yes' if a == b else 'no'}"

    return _timed(8, "determinism", None, body)


CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
    5: criterion_5, 6: criterion_6, 7: criterion_7, 8: criterion_8,
}


def _run(number: int, budget: Budget) -> CriterionResult:
    return CRITERIA[number](budget)


def run_suite(budget: Budget = DEFAULT_BUDGET, jobs: int = 1, only=None) -> list[CriterionResult]:
    numbers = sorted(only) if only else sorted(CRITERIA)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run, numbers, [budget] * len(numbers)))
    return [_run(k, budget) for k in numbers]

