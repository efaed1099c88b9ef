"""Command-line interface.

Exit codes: 0 decided or verified, 1 property refuted (certificate printed),
2 input error, 3 resource budget exceeded.  Every report is a sequence of
``KEY value`` lines in a fixed order.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from . import catalog as cat
from .algebra import FiniteAlgebra
from .binrel import BinRel
from .config import DEFAULT_BUDGET, Budget
from .counterexamples import ExAlgebraSpec, build_ex_algebra, verify_ex_properties
from .errors import InputError, TolrepError
from .fileio import format_algebra, load_algebra, load_relation
from .permutability import check_3perm_equivalences, permutability_report
from .relations import classify, compatibility_witness, enumerate_congruences, enumerate_tolerances, is_tolerance
from .representability import (RepCertificate, check_eqm, check_strong_rep, find_power_image_witness,
                                format_pairs, is_representable, is_weakly_representable, join_order,
                                lattgen2_check, lattgen_check, lattice_ops,
                                lattice_strong_witness, rep_report, rep_to_congruence_image, weak_report)
from .suite import run_suite


# -- argument helpers -------------------------------------------------------------------

def resolve_algebra(ref: str) -> FiniteAlgebra:
    """A catalog key or the path of an algebra file."""
    entries = cat.catalog()
    if ref in entries:
        return entries[ref].algebra
    if Path(ref).exists():
        return load_algebra(ref)
    raise InputError(f"{ref!r} is neither a catalog key ({', '.join(entries)}) nor a file")


def theta_from_text(n: int, text: str) -> BinRel:
    """``"0-1,1-2"`` as the least reflexive symmetric relation containing those pairs."""
    pairs = {(a, a) for a in range(n)}
    for item in filter(None, (s.strip() for s in text.split(","))):
        try:
            a, b = (int(x) for x in item.split("-"))
        except ValueError:
            raise InputError(f"bad pair {item!r}, expected a-b") from None
        if not (0 <= a < n and 0 <= b < n):
            raise InputError(f"pair {item} outside 0..{n - 1}")
        pairs |= {(a, b), (b, a)}
    return BinRel.from_pairs(n, pairs)


def resolve_relation(args, A: FiniteAlgebra, required: bool = True) -> BinRel | None:
    if args.rel is not None:
        return load_relation(args.rel, A.n)
    if args.theta is not None:
        return theta_from_text(A.n, args.theta)
    entry = cat.catalog().get(args.algebra)
    if entry is not None and entry.tolerance is not None:
        return entry.tolerance
    if required:
        raise InputError("a relation is required: --rel FILE or --theta a-b,...")
    return None


def budget_from(args) -> Budget:
    b = DEFAULT_BUDGET
    changes = {
        "size": args.size_budget,
        "search": args.search_budget,
        "power_exponent": args.power_exponent,
        "square_generators": args.square_generators,
        "square_exhaustive_max_n": args.square_exhaustive_max_n,
    }
    for key, value in changes.items():
        if value is not None and value < 0:
            raise InputError(f"budget {key} must be nonnegative")
    return replace(b, **{k: v for k, v in changes.items() if v is not None})


def require_tolerance(A: FiniteAlgebra, theta: BinRel):
    if not is_tolerance(A, theta):
        raise InputError(f"relation is not a tolerance of {A.name}: {classify(A, theta).label()}")


# -- subcommands --------------------------------------------------------------------------

def _hasse_dot(name: str, rels: list[BinRel]) -> list[str]:
    out = [f'digraph "{name}" {{']
    for i, R in enumerate(rels):
        out.append(f'  t{i} [label="{format_pairs(R)}"];')
    for i, R in enumerate(rels):
        for j, S in enumerate(rels):
            if R < S and not any(R < T < S for T in rels):
                out.append(f"  t{i} -> t{j};")
    out.append("}")
    return out


def cmd_list(args, budget, congruences: bool):
    A = resolve_algebra(args.algebra)
    rels = enumerate_congruences(A, budget) if congruences else enumerate_tolerances(A, budget)
    tag = "CON" if congruences else "TOL"
    if getattr(args, "dot", False):
        return 0, _hasse_dot(A.name, rels)
    lines = [f"ALGEBRA {A.name}", f"COUNT {len(rels)}"]
    lines += [f"{tag} {format_pairs(R)}" for R in rels]
    return 0, lines


def cmd_classify(args, budget):
    A = resolve_algebra(args.algebra)
    R = resolve_relation(args, A)
    lines = [f"CLASS {classify(A, R).label()}"]
    bad = compatibility_witness(A, R)
    if bad is not None:
        op, rows, img = bad
        args_txt = " ".join(f"{a}-{b}" for a, b in rows)
        lines.append(f"VIOLATION op={op} args={args_txt or '-'} image={img[0]}-{img[1]}")
    return 0, lines


def cmd_represent(args, budget):
    A = resolve_algebra(args.algebra)
    theta = resolve_relation(args, A)
    require_tolerance(A, theta)
    return 0, rep_report(A, is_representable(A, theta, budget))


def cmd_weakrep(args, budget):
    A = resolve_algebra(args.algebra)
    theta = resolve_relation(args, A)
    require_tolerance(A, theta)
    tols = enumerate_tolerances(A, budget)
    return 0, weak_report(A, is_weakly_representable(A, theta, budget, tolerances=tols))


def cmd_image_witness(args, budget):
    A = resolve_algebra(args.algebra)
    theta = resolve_relation(args, A)
    require_tolerance(A, theta)
    cert = is_representable(A, theta, budget)
    if isinstance(cert, RepCertificate):
        chain = rep_to_congruence_image(A, cert)
        B = cert.pair_alg
        lines = ["IMAGE-WITNESS square", f"B-SIZE {B.size}",
                 "B " + " ".join(f"{a}-{b}" for a, b in B.carrier),
                 "PHI projection=1", "BETA kernel-of-projection=2",
                 f"IMAGE {format_pairs(theta)}",
                 f"CHAIN-VERIFIED {'yes' if chain.ok else 'no'} pairs={chain.pairs_checked}"]
        return 0, lines
    lines = ["IMAGE-WITNESS square=none"]
    for k in range(2, budget.power_exponent + 1):
        w = find_power_image_witness(A, theta, k, budget)
        if w is not None:
            lines += [f"IMAGE-WITNESS power k={w.exponent}", f"B-SIZE {w.carrier_size}",
                      "PHI projection=1", f"BETA-PAIRS {len(w.beta)}", f"IMAGE {format_pairs(theta)}"]
            return 0, lines
        lines.append(f"POWER k={k} found=no")
    return 0, lines


def cmd_strong_rep(args, budget):
    A = resolve_algebra(args.algebra)
    theta = resolve_relation(args, A)
    require_tolerance(A, theta)
    R, stats = check_strong_rep(A, theta, budget)
    lines = []
    if R is None:
        lines.append("STRONG no")
    else:
        ok, bad = check_eqm(A, theta, R)
        lines += ["STRONG yes", f"WITNESS {format_pairs(R)}",
                  f"EQM {'yes' if ok else 'no'}" + ("" if bad is None else f" at={bad[0]}-{bad[1]}")]
    lines.append(f"SEARCH examined={stats.candidates_examined} pruned={stats.pruned}")
    try:
        lattice_ops(A)
    except InputError:
        return 0, lines
    r = lattice_strong_witness(A, theta)
    lines += [f"LATTICE-WITNESS {format_pairs(r.R)}", f"LATTICE-EQ {'yes' if r.eq_holds else 'no'}",
              f"LATTICE-EQM {'yes' if r.eqm_holds else 'no'}"]
    return 0, lines


def _op_index(A: FiniteAlgebra, name: str | None, default: int) -> int:
    return default if name is None else A.op_index(name)


def cmd_lattgen(args, budget):
    A = resolve_algebra(args.algebra)
    try:
        dj, dm = lattice_ops(A)
    except InputError:
        dj, dm = 0, 1
    j, m = _op_index(A, args.join, dj), _op_index(A, args.meet, dm)
    if args.rel is not None:
        M = load_relation(args.rel, A.n)
    else:
        M = join_order(A, j)
    report = lattgen_check(A, j, m, M, budget)
    return (0 if report.passed else 1), [f"M {format_pairs(M)}", report.line("LATTGEN")]


def cmd_lattgen2(args, budget):
    A = resolve_algebra(args.algebra)
    report = lattgen2_check(A, budget)
    return (0 if report.passed else 1), [report.line("LATTGEN2")]


def cmd_counterexample(args, budget):
    if args.size < 2:
        raise InputError("--size must be at least 2")
    theta = theta_from_text(args.size, args.theta)
    spec = ExAlgebraSpec.from_relation(theta)
    A = build_ex_algebra(spec)
    report = verify_ex_properties(A, theta, budget, search_powers=not args.no_powers)
    return 0, format_algebra(A).splitlines() + report.lines()


def cmd_npermutable(args, budget):
    A = resolve_algebra(args.algebra)
    if args.n < 2:
        raise InputError("--n must be at least 2")
    if args.exhaustive_squares or args.squares:
        report = check_3perm_equivalences(A, args.exhaustive_squares, budget, bound=args.n)
    else:
        report = permutability_report(A, args.n)
    return 0, [f"ALGEBRA {A.name}"] + report.lines()


def cmd_verify_suite(args, budget):
    only = None
    if args.only:
        try:
            only = sorted({int(x) for x in args.only.split(",")})
        except ValueError:
            raise InputError(f"bad criterion list {args.only!r}") from None
    results = run_suite(budget, jobs=args.jobs, only=only)
    lines = [r.line(timings=args.timings) for r in results]
    ok = all(r.passed for r in results)
    lines.append(f"SUITE {'PASS' if ok else 'FAIL'} criteria={len(results)}")
    return (0 if ok else 1), lines


def cmd_catalog(args, budget):
    lines = []
    for key, e in cat.catalog().items():
        sc = cat.self_check(e)
        lines.append(f"ENTRY {key} size={e.algebra.n} kind={e.kind} ops={len(e.algebra.ops)} "
                     f"self-check={'ok' if sc is None else 'fail'}")
    return 0, lines


# -- parser ----------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("budgets")
    g.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    g.add_argument("--size-budget", type=int, help="largest built algebra (default TOLREP_BUDGET or 10^6)")
    g.add_argument("--search-budget", type=int, help="generator sets examined per search")
    g.add_argument("--power-exponent", type=int, help="largest power tried for image witnesses")
    g.add_argument("--square-generators", type=int, help="generators per subuniverse of A x A above the exhaustive size")
    g.add_argument("--square-exhaustive-max-n", type=int, help="largest n with all subuniverses of A x A enumerated")

    def rel_opts(p):
        p.add_argument("--rel", help="relation file")
        p.add_argument("--theta", help='reflexive symmetric relation as "a-b,c-d"')

    parser = argparse.ArgumentParser(prog="tolrep", description="Tolerances of finite algebras.",
                                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, help_text, algebra=True, rel=False):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if algebra:
            p.add_argument("algebra", help="catalog key or algebra file")
        if rel:
            rel_opts(p)
        p.set_defaults(func=fn)
        return p

    p = add("list-tolerances", lambda a, b: cmd_list(a, b, False), "all tolerances, smallest first")
    p.add_argument("--dot", action="store_true", help="Graphviz dump of the inclusion order")
    p = add("list-congruences", lambda a, b: cmd_list(a, b, True), "all congruences, smallest first")
    p.add_argument("--dot", action="store_true", help="Graphviz dump of the inclusion order")
    add("classify", cmd_classify, "reflexive/symmetric/transitive/compatible flags of a relation", rel=True)
    add("represent", cmd_represent, "decide whether a tolerance is R∘R⁻ for a compatible reflexive R", rel=True)
    add("weakrep", cmd_weakrep, "decide whether a tolerance is an intersection of representable ones", rel=True)
    add("image-witness", cmd_image_witness, "exhibit a tolerance as the image of a congruence", rel=True)
    add("strong-rep", cmd_strong_rep, "search R with theta = (R∘R⁻) ∩ (R⁻∘R)", rel=True)
    p = add("lattgen-check", cmd_lattgen, "check the (join, meet, M) sufficient conditions")
    p.add_argument("--join", help="name of the join-like operation")
    p.add_argument("--meet", help="name of the meet-like operation")
    p.add_argument("--rel", help="relation file for M (default: a <= b iff a v b = b)")
    add("lattgen2-check", cmd_lattgen2, "check the two-operation conditions with M from the join")
    p = add("counterexample", cmd_counterexample, "build and verify the unary non-representable algebra",
            algebra=False)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--theta", required=True, help='non-transitive relation as "0-1,1-2"')
    p.add_argument("--no-powers", action="store_true", help="skip the search in finite powers")
    p = add("npermutable", cmd_npermutable, "n-permutability of congruences")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--squares", action="store_true", help="also check subalgebras of A x A (bounded generators)")
    p.add_argument("--exhaustive-squares", action="store_true",
                   help="also check all subalgebras of A x A when n is small enough")
    p = add("verify-suite", cmd_verify_suite, "run every acceptance criterion", algebra=False)
    p.add_argument("--timings", action="store_true", help="append wall-clock times (not byte-stable)")
    p.add_argument("--only", help="comma-separated criterion numbers")
    add("catalog", cmd_catalog, "list the built-in algebras", algebra=False)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.jobs < 1:
            raise InputError("--jobs must be at least 1")
        code, lines = args.func(args, budget_from(args))
    except TolrepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    sys.stdout.write("".join(line + "\n" for line in lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
