from itertools import product as cartesian

import pytest
from hypothesis import given, strategies as st

from strategies import algebras, pairs, relations
from tolrep import catalog as cat
from tolrep.binrel import BinRel
from tolrep.config import Budget
from tolrep.errors import BudgetExceeded
from tolrep.oracles import naive_compatible, naive_congruences, naive_tolerances
from tolrep.relations import (classify, compatibility_witness, compatible_closure,
                              compatible_reflexive_closure, congruence_closure, enumerate_congruences,
                              enumerate_tolerances, is_compatible, is_congruence, is_tolerance,
                              tolerance_closure, transitive_closure)
from tolrep.representability import lattice_order

C3 = cat.get("C3")
THETA = cat.THETA3


def D(n):
    return BinRel.diagonal(n)


def naive_closure(A, seed, reflexive=True):
    """Apply every operation to every tuple of pairs until nothing new appears."""
    cur = set(seed) | ({(a, a) for a in range(A.n)} if reflexive else set())
    while True:
        new = set(cur)
        for op in A.ops:
            for rows in cartesian(sorted(cur), repeat=op.arity):
                x = op.table[sum(r[0] * A.n**(op.arity - 1 - i) for i, r in enumerate(rows))]
                y = op.table[sum(r[1] * A.n**(op.arity - 1 - i) for i, r in enumerate(rows))]
                new.add((x, y))
        if new == cur:
            return cur
        cur = new


def test_compatibility_examples():
    for A in (C3, cat.get("Z3"), cat.get("EX3"), cat.get("N5")):
        assert is_compatible(A, D(A.n))[0]
        assert is_compatible(A, BinRel.full(A.n))[0]
    bad = BinRel.from_pairs(3, [(0, 0), (1, 1), (2, 2), (0, 2), (2, 0)])
    ok, w = is_compatible(C3, bad)
    assert not ok
    assert w == ("meet", ((0, 2), (1, 1)), (0, 1))


def test_compatibility_witness_is_genuine():
    bad = BinRel.from_pairs(3, [(0, 0), (1, 1), (2, 2), (0, 2), (2, 0)])
    op, rows, image = compatibility_witness(C3, bad)
    f = C3.ops[C3.op_index(op)]
    assert all(r in bad for r in rows)
    assert (f(*[r[0] for r in rows]), f(*[r[1] for r in rows])) == image


def test_classify_examples():
    assert classify(C3, D(3)).label() == "congruence"
    assert classify(C3, THETA).label() == "tolerance, not congruence"
    leq = lattice_order(C3)
    c = classify(C3, leq)
    assert (c.compatible, c.reflexive, c.transitive, c.symmetric) == (True, True, True, False)


def test_closure_examples():
    assert compatible_reflexive_closure(C3, []) == D(3)
    assert compatible_reflexive_closure(C3, [(0, 1)]) == D(3) | BinRel.from_pairs(3, [(0, 1)])
    ex = cat.get("EX3")
    assert THETA <= compatible_reflexive_closure(ex, [(0, 1)])
    for close in (tolerance_closure, congruence_closure):
        assert close(C3, []) == D(3)
        assert close(C3, [(0, 2)]) == BinRel.full(3)
        assert close(C3, [(0, 1)]) == BinRel.from_pairs(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 0)])


@given(algebras(max_n=4, max_ops=2, arities=(0, 1, 2, 3)), st.data())
def test_closures_match_naive_fixpoint(A, data):
    G = data.draw(pairs(A.n))
    fast = compatible_reflexive_closure(A, G)
    assert set(fast.pairs()) == naive_closure(A, G)
    assert set(compatible_closure(A, G).pairs()) == naive_closure(A, G, reflexive=False)


@given(algebras(max_n=4), st.data())
def test_closure_monotone_and_idempotent(A, data):
    G = data.draw(pairs(A.n))
    H = data.draw(pairs(A.n))
    small = compatible_reflexive_closure(A, G)
    big = compatible_reflexive_closure(A, G + H)
    assert small <= big
    assert compatible_reflexive_closure(A, small) == small
    T = tolerance_closure(A, G)
    assert is_tolerance(A, T) and small <= T
    C = congruence_closure(A, G)
    assert is_congruence(A, C) and T <= C


@given(algebras(max_n=4), st.data())
def test_closure_from_closed_start(A, data):
    G = data.draw(pairs(A.n))
    H = data.draw(pairs(A.n))
    T = tolerance_closure(A, G)
    assert tolerance_closure(A, H, T) == tolerance_closure(A, G + H)
    C = congruence_closure(A, G)
    assert congruence_closure(A, H, C) == congruence_closure(A, G + H)


@given(st.integers(1, 5).flatmap(relations))
def test_transitive_closure(R):
    T = transitive_closure(R)
    assert R <= T and T.is_transitive()
    acc = R
    for _ in range(R.n):
        acc = acc | acc.compose(R)
    assert T == acc


def test_enumeration_examples():
    from tolrep.algebra import trivial_algebra
    T = trivial_algebra(C3)
    assert enumerate_tolerances(T) == [D(1)]
    tols = enumerate_tolerances(C3)
    expected = [
        D(3),
        D(3) | BinRel.from_pairs(3, [(0, 1), (1, 0)]),
        D(3) | BinRel.from_pairs(3, [(1, 2), (2, 1)]),
        THETA,
        BinRel.full(3),
    ]
    assert tols == expected
    Z2 = cat.get("Z2")
    assert enumerate_tolerances(Z2) == enumerate_congruences(Z2) == [D(2), BinRel.full(2)]


# tolerance and congruence counts frozen from naive_tolerances (subset enumeration)
FROZEN = {
    "C2": (2, 2), "C3": (5, 4), "C4": (14, 8), "N5": (5, 5), "M3": (2, 2),
    "Z2": (2, 2), "Z3": (2, 2), "EX3": (3, 2), "W4": (36, 9),
}


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_enumeration_counts_frozen(key):
    A = cat.get(key)
    assert (len(enumerate_tolerances(A)), len(enumerate_congruences(A))) == FROZEN[key]


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_enumeration_matches_oracle(key):
    A = cat.get(key)
    assert [frozenset(T.pairs()) for T in enumerate_tolerances(A)] == naive_tolerances(A)
    assert [frozenset(T.pairs()) for T in enumerate_congruences(A)] == naive_congruences(A)


@given(algebras(max_n=4, max_ops=2))
def test_enumeration_matches_oracle_random(A):
    assert [frozenset(T.pairs()) for T in enumerate_tolerances(A)] == naive_tolerances(A)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(algebras(max_n=n), st.just(n))), st.data())
def test_compatible_matches_oracle(An, data):
    A, _ = An
    R = data.draw(relations(A.n))
    assert is_compatible(A, R)[0] == naive_compatible(A, set(R.pairs()))


def test_enumeration_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_tolerances(cat.get("C4"), Budget(search=3))
