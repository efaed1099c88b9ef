from itertools import combinations

import pytest
from hypothesis import given

from strategies import algebras
from tolrep import catalog as cat
from tolrep.algebra import PairAlgebra, kernel, projection_hom, subalgebra_on_pairs
from tolrep.binrel import BinRel, intersect
from tolrep.config import Budget
from tolrep.errors import BudgetExceeded, InputError
from tolrep.oracles import naive_is_representable, naive_join_meet_check
from tolrep.relations import compatible_reflexive_closure, enumerate_tolerances
from tolrep.representability import (NonRepCertificate, RepCertificate, WeakNegative, WeakRepCertificate,
                                     check_eqm, check_strong_rep, extract_witness_from_image,
                                     is_representable, is_weakly_representable, join_order,
                                     lattgen2_check, lattgen_check, lattice_ops, lattice_order,
                                     lattice_strong_witness, lattice_witness, rep_report,
                                     rep_to_congruence_image, verify_certificate, verify_image_chain,
                                     weak_report)
from tolrep.suite import z2_as_lattice

C3 = cat.get("C3")
THETA = cat.THETA3
LATTICES = ["C2", "C3", "C4", "N5", "M3"]


def D(n):
    return BinRel.diagonal(n)


def first_witness_by_brute_force(A, theta):
    """Closure of the first G in (|G|, lex) order with closure∘closure⁻ = theta."""
    pairs = theta.off_diagonal()
    for k in range(len(pairs) + 1):
        for G in combinations(pairs, k):
            R = compatible_reflexive_closure(A, G)
            if R <= theta and R.compose(R.converse()) == theta:
                return R
    return None


# -- lattice order ------------------------------------------------------------------------

def test_lattice_order_examples():
    assert lattice_order(C3) == BinRel.from_pairs(3, [(a, b) for a in range(3) for b in range(3) if a <= b])
    n5 = lattice_order(cat.get("N5"))
    covers = {(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)}
    strict = set(n5.pairs()) - set(D(5).pairs())
    assert {p for p in strict if not any(p[0] != c and (p[0], c) in strict and (c, p[1]) in strict
                                         for c in range(5))} == covers
    with pytest.raises(InputError, match="not a lattice"):
        lattice_order(cat.get("Z2"))


@pytest.mark.parametrize("key", LATTICES)
def test_lattice_witness_every_tolerance(key):
    L = cat.get(key)
    j, m = lattice_ops(L)
    for theta in enumerate_tolerances(L):
        cert = lattice_witness(L, theta)
        assert cert.witness_R == lattice_order(L) & theta
        assert verify_certificate(L, cert)
        assert naive_join_meet_check(L, j, m, set(theta.pairs()))
        assert rep_to_congruence_image(L, cert).ok


def test_lattice_witness_examples():
    cert = lattice_witness(C3, D(3))
    assert cert.witness_R == D(3) and cert.verified
    cert = lattice_witness(C3, THETA)
    assert cert.witness_R == BinRel.from_pairs(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)])
    assert cert.witness_R.compose(cert.witness_R.converse()) == THETA
    with pytest.raises(InputError):
        lattice_witness(C3, lattice_order(C3))


# -- the decision procedure ------------------------------------------------------------------

def test_is_representable_examples():
    cert = is_representable(C3, THETA)
    assert isinstance(cert, RepCertificate) and cert.verified
    assert cert.witness_R == lattice_witness(C3, THETA).witness_R
    assert cert.search.candidates_examined == 7
    neg = is_representable(cat.get("EX3"), THETA)
    assert isinstance(neg, NonRepCertificate) and neg.exhausted
    assert (neg.search_space_size, neg.candidates_examined, neg.pruned) == (16, 5, 11)


@pytest.mark.parametrize("key", sorted(cat.catalog()))
def test_congruences_are_representable(key):
    from tolrep.relations import enumerate_congruences
    A = cat.get(key)
    for theta in enumerate_congruences(A):
        cert = is_representable(A, theta)
        assert isinstance(cert, RepCertificate)
        assert theta.compose(theta.converse()) == theta
        # the search returns the least witness, which may be smaller than theta
        assert cert.witness_R <= theta


def test_full_relation_on_c3_has_order_witness():
    cert = is_representable(C3, BinRel.full(3))
    assert cert.witness_R == lattice_order(C3)


@pytest.mark.parametrize("key", ["Z2", "Z3"])
def test_group_witness_is_theta(key):
    A = cat.get(key)
    for theta in enumerate_tolerances(A):
        assert is_representable(A, theta).witness_R == theta


@pytest.mark.parametrize("key", sorted(cat.catalog()))
def test_catalog_agrees_with_naive_oracle(key):
    A = cat.get(key)
    for theta in enumerate_tolerances(A):
        fast = is_representable(A, theta)
        assert fast.representable == naive_is_representable(A, set(theta.pairs()))
        expected = first_witness_by_brute_force(A, theta)
        if expected is None:
            assert fast.exhausted
        else:
            assert fast.witness_R == expected


@given(algebras(max_n=4, max_ops=2))
def test_random_algebras_agree_with_oracle(A):
    for theta in enumerate_tolerances(A):
        fast = is_representable(A, theta)
        assert fast.representable == naive_is_representable(A, set(theta.pairs()))
        if isinstance(fast, RepCertificate):
            assert verify_certificate(A, fast)
            assert fast.witness_R == first_witness_by_brute_force(A, theta)


def test_search_rejects_non_tolerance():
    with pytest.raises(InputError):
        is_representable(C3, lattice_order(C3))


def test_search_budget():
    with pytest.raises(BudgetExceeded):
        is_representable(cat.get("C4"), BinRel.full(4), Budget(search=2))


# -- certificates as images of congruences ------------------------------------------------------

def test_chain_examples():
    cert = is_representable(C3, D(3))
    assert cert.pair_alg.size == 3
    assert cert.beta == D(3)
    r = rep_to_congruence_image(C3, cert, log=True)
    assert r.ok and r.pairs_checked == 9 and len(r.rows) == 9
    cert = is_representable(C3, THETA)
    assert cert.pair_alg.size == 5
    assert rep_to_congruence_image(C3, cert).ok


def test_extract_witness_examples():
    B = PairAlgebra(C3, 2, tuple((a, a) for a in range(3)))
    assert extract_witness_from_image(C3, B, D(3)).witness_R == D(3)
    B = subalgebra_on_pairs(C3, lattice_order(C3) & THETA)
    assert extract_witness_from_image(C3, B, THETA).witness_R == lattice_order(C3) & THETA
    B = subalgebra_on_pairs(C3, BinRel.full(3))
    assert extract_witness_from_image(C3, B, BinRel.full(3)).witness_R == BinRel.full(3)


def test_extract_witness_preconditions():
    B = subalgebra_on_pairs(C3, lattice_order(C3))
    with pytest.raises(InputError, match="not theta"):
        extract_witness_from_image(C3, B, THETA)
    no_diag = PairAlgebra(C3, 2, ((0, 0), (1, 1)))
    with pytest.raises(InputError, match="diagonal"):
        extract_witness_from_image(C3, no_diag, D(3))


def test_image_chain_composition():
    cert = is_representable(C3, THETA)
    B = cert.pair_alg.algebra
    # beta is itself the image of ker(pi_2) on the pairs of B that beta relates
    Bb = subalgebra_on_pairs(B, cert.beta)
    pi1 = projection_hom(Bb, 0)
    Phi = kernel(projection_hom(Bb, 1))
    composite = verify_image_chain(THETA, cert.phi, cert.beta, pi1, Phi)
    assert composite.ok and composite.surjective


# -- weak representability ----------------------------------------------------------------------

def test_weak_examples():
    w = is_weakly_representable(C3, THETA)
    assert isinstance(w, WeakRepCertificate) and w.lam == 1 and w.power_witness.verified
    neg = is_weakly_representable(cat.get("EX3"), THETA)
    assert isinstance(neg, WeakNegative)
    sq = THETA.compose(THETA)
    assert all(sq <= T for T in neg.representable_supersets)
    assert neg.extra_pair == (0, 2)
    for key in cat.catalog():
        A = cat.get(key)
        assert isinstance(is_weakly_representable(A, BinRel.full(A.n)), WeakRepCertificate)


def test_weak_lambda_two():
    A = cat.get("W4")
    theta = cat.CYCLE4
    assert isinstance(is_representable(A, theta), NonRepCertificate)
    w = is_weakly_representable(A, theta)
    assert w.lam == 2 and w.minimality == "greedy"
    assert intersect(w.family) == theta
    assert all(isinstance(c, RepCertificate) and c.verified for c in w.certificates)
    pw = w.power_witness
    assert pw.verified and pw.image == theta and pw.pair_alg.width == 3


def test_weak_power_budget():
    w = is_weakly_representable(cat.get("W4"), cat.CYCLE4, Budget(size=12))
    assert w.power_witness is None and "budget" in w.power_skipped


def test_weak_reports():
    lines = weak_report(C3, is_weakly_representable(C3, THETA))
    assert lines[:2] == ["WEAKREP yes", "LAMBDA 1"]
    lines = weak_report(cat.get("EX3"), is_weakly_representable(cat.get("EX3"), THETA))
    assert lines[0] == "WEAKREP no" and lines[-1] == "EXTRA-PAIR 0-2"


def test_rep_report_lines():
    assert rep_report(C3, is_representable(C3, THETA)) == [
        "REP yes", "WITNESS 0-1 1-2", "B-SIZE 5", "CHAIN-VERIFIED yes", "SEARCH examined=7 pruned=0",
    ]
    assert rep_report(cat.get("EX3"), is_representable(cat.get("EX3"), THETA)) == [
        "REP no", "SEARCH examined=5 pruned=11 space=16 exhausted=yes",
    ]


# -- strong representations ---------------------------------------------------------------------

def test_strong_examples():
    R, _ = check_strong_rep(C3, D(3))
    assert R == D(3)
    assert check_eqm(C3, D(3), D(3), lambda a, b: a, lambda a, b: a) == (True, None)
    r = lattice_strong_witness(C3, THETA)
    assert r.eq_holds and r.eqm_holds and r.R == lattice_order(C3) & THETA
    R, stats = check_strong_rep(cat.get("EX3"), THETA)
    assert R is None and stats.exhausted


@pytest.mark.parametrize("key", LATTICES)
def test_strong_all_lattice_tolerances(key):
    L = cat.get(key)
    for theta in enumerate_tolerances(L):
        r = lattice_strong_witness(L, theta)
        assert r.eq_holds and r.eqm_holds, theta


# -- sufficient conditions for lattice-like algebras ----------------------------------------------

@pytest.mark.parametrize("key", LATTICES)
def test_lattgen_passes_on_lattices(key):
    L = cat.get(key)
    j, m = lattice_ops(L)
    r = lattgen_check(L, j, m, lattice_order(L))
    assert r.passed and r.tolerances_checked == len(enumerate_tolerances(L))
    assert lattgen2_check(L).passed


def test_lattgen_violations():
    j, m = lattice_ops(C3)
    assert lattgen_check(C3, j, m, D(3)).violation == ("(2)", (0, 1))
    # with M the full relation, (3) fails at a=1, c=0: 1 ^ 0 = 0, not 1
    assert lattgen_check(C3, j, m, BinRel.full(3)).violation == ("(3)", (1, 0))
    Z = z2_as_lattice()
    assert lattgen2_check(Z).violation == ("(1)", (1,))
    assert lattgen_check(Z, 0, 1, join_order(Z, 0)).violation == ("(1)", (1,))
    assert lattgen2_check(Z).line("LATTGEN2") == "LATTGEN2 fail condition=(1) at=1"


def test_lattgen_rejects_incompatible_m():
    j, m = lattice_ops(C3)
    bad = D(3) | BinRel.from_pairs(3, [(0, 2)])
    r = lattgen_check(C3, j, m, bad)
    assert not r.passed and r.violation[0] == "M compatible"


def test_lattgen2_requires_two_binary_ops():
    with pytest.raises(InputError):
        lattgen2_check(cat.get("Z2"))
    with pytest.raises(InputError):
        lattgen2_check(cat.get("EX3"))
