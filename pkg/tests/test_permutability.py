from itertools import product

import pytest
from hypothesis import given

from strategies import algebras
from tolrep import catalog as cat
from tolrep.algebra import trivial_algebra
from tolrep.binrel import BinRel
from tolrep.config import Budget
from tolrep.errors import BudgetExceeded
from tolrep.permutability import (alternating, check_3perm_equivalences, check_tolerances_are_congruences,
                                  enumerate_square_subuniverses, is_n_permutable_congruences,
                                  permutability_report)
from tolrep.oracles import naive_n_permutable
from tolrep.relations import enumerate_congruences

C3 = cat.get("C3")


def test_alternating():
    a = BinRel.from_pairs(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 0)])
    b = BinRel.from_pairs(3, [(0, 0), (1, 1), (2, 2), (1, 2), (2, 1)])
    assert alternating(a, b, 1) == a
    assert alternating(a, b, 3) == a.compose(b).compose(a)


def test_permutability_examples():
    one = trivial_algebra(C3)
    for n in (2, 3, 4):
        assert is_n_permutable_congruences(one, n) == (True, None)
    assert is_n_permutable_congruences(cat.get("Z2"), 2)[0]
    ok, (alpha, beta, pair) = is_n_permutable_congruences(C3, 2)
    assert not ok
    assert (pair in alpha.compose(beta)) != (pair in beta.compose(alpha))
    assert is_n_permutable_congruences(C3, 3)[0]
    with pytest.raises(ValueError):
        is_n_permutable_congruences(C3, 1)


# verdicts per n = 2, 3, 4, frozen from naive_n_permutable
FROZEN = {
    "C2": (True, True, True), "C3": (False, True, True), "C4": (False, False, True),
    "N5": (True, True, True), "M3": (True, True, True), "Z2": (True, True, True),
    "Z3": (True, True, True), "EX3": (True, True, True), "W4": (False, False, True),
}


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_verdicts_frozen_and_monotone(key):
    r = permutability_report(cat.get(key), 4)
    assert tuple(r.verdicts[k] for k in (2, 3, 4)) == FROZEN[key]


@given(algebras(max_n=4, max_ops=2))
def test_monotone_random_and_oracle(A):
    cons = enumerate_congruences(A)
    verdicts = [is_n_permutable_congruences(A, n, cons)[0] for n in (2, 3, 4)]
    assert verdicts == sorted(verdicts)
    assert verdicts == [naive_n_permutable(A, n) for n in (2, 3, 4)]


def test_tolerances_are_congruences_examples():
    assert check_tolerances_are_congruences(cat.get("Z2")) == (True, None)
    assert check_tolerances_are_congruences(cat.get("Z3")) == (True, None)
    assert check_tolerances_are_congruences(trivial_algebra(C3)) == (True, None)
    assert check_tolerances_are_congruences(C3) == (False, cat.THETA3)


def closed_subsets_by_brute_force(A):
    """Every nonempty subset of A x A that no operation leads out of."""
    pts = [(a, b) for a in range(A.n) for b in range(A.n)]
    out = []
    for mask in range(1, 1 << len(pts)):
        S = {p for i, p in enumerate(pts) if mask >> i & 1}
        closed = True
        for op in A.ops:
            for rows in product(sorted(S), repeat=op.arity):
                img = tuple(op(*[r[c] for r in rows]) for c in (0, 1))
                if img not in S:
                    closed = False
                    break
            if not closed:
                break
        if closed:
            out.append(tuple(sorted(S)))
    return sorted(out, key=lambda s: (len(s), s))


@pytest.mark.parametrize("key,count", [("C2", 12), ("C3", 146), ("Z2", 5), ("Z3", 6), ("EX3", 5)])
def test_square_subuniverses_match_brute_force(key, count):
    A = cat.get(key)
    subs, exhaustive = enumerate_square_subuniverses(A)
    assert exhaustive
    assert subs == closed_subsets_by_brute_force(A)
    assert len(subs) == count


def test_square_subuniverses_generated_are_subset():
    C2 = cat.get("C2")
    gen, flag = enumerate_square_subuniverses(C2, exhaustive=False)
    assert not flag
    assert set(gen) <= set(closed_subsets_by_brute_force(C2))


def test_square_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_square_subuniverses(C3, Budget(search=10), exhaustive=True)


@pytest.mark.parametrize("key", ["Z2", "Z3"])
def test_3perm_groups(key):
    r = check_3perm_equivalences(cat.get(key))
    assert r.hypothesis and r.exhaustive and r.equivalence_verified
    assert all(row.agree and row.congruence for row in r.rows)


def test_3perm_trivial():
    r = check_3perm_equivalences(trivial_algebra(C3))
    assert r.hypothesis and r.equivalence_verified


def test_3perm_c3():
    r = check_3perm_equivalences(C3)
    assert r.exhaustive and r.hypothesis is False
    assert r.equivalence_verified is None
    assert all(row.representable == row.square_image for row in r.rows)
    assert not all(row.congruence for row in r.rows)
    assert r.lines()[-1] == "EQUIVALENCE not-asserted"


@pytest.mark.parametrize("key", ["C2", "C4", "EX3", "W4"])
def test_3perm_small_catalog(key):
    r = check_3perm_equivalences(cat.get(key))
    assert all(row.representable == row.square_image for row in r.rows)
    if r.hypothesis:
        assert all(row.agree for row in r.rows)
        # every tolerance with a square-image certificate is transitive
        assert all(row.congruence for row in r.rows if row.square_image)


def test_report_lines():
    lines = permutability_report(C3, 3).lines()
    assert lines[0].startswith("NPERM n=2 verdict=no witness=")
    assert lines[1] == "NPERM n=3 verdict=yes witness=-"
