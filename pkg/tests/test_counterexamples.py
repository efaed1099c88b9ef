import pytest
from hypothesis import given, settings, strategies as st

from tolrep import catalog as cat
from tolrep.binrel import BinRel
from tolrep.errors import InputError
from tolrep.counterexamples import ExAlgebraSpec, build_ex_algebra, ex_operations, verify_ex_properties
from tolrep.oracles import naive_is_representable
from tolrep.relations import compatible_reflexive_closure, enumerate_tolerances, is_tolerance
from tolrep.representability import is_representable


def test_transitive_input_rejected():
    with pytest.raises(InputError, match="non-transitivity"):
        ExAlgebraSpec.from_relation(BinRel.full(2))
    with pytest.raises(InputError):
        ExAlgebraSpec.from_text(3, "0-1")


def test_non_reflexive_input_rejected():
    with pytest.raises(InputError):
        ExAlgebraSpec(3, frozenset({(0, 1), (1, 2)}))


def test_operation_counts():
    spec = ExAlgebraSpec.from_text(3, "0-1,1-2")
    assert len(ex_operations(spec)) == 19
    # frozen from the table-dedup oracle: the two constant maps into {0,1} and {1,2}
    # coincide with c0, c1, c2, and f0_1 / f1_2 share the constant-1 map
    A = build_ex_algebra(spec)
    assert len(A.ops) == 15
    assert len({op.table for op in A.ops}) == 15
    assert cat.get("EX3").ops == A.ops


def test_theta_is_tolerance_of_construction():
    spec = ExAlgebraSpec.from_text(3, "0-1,1-2")
    assert is_tolerance(build_ex_algebra(spec), spec.relation)


def test_ex3_report():
    A = cat.get("EX3")
    r = verify_ex_properties(A, cat.THETA3)
    assert r.is_tolerance and r.closures_contain_theta and r.strictly_grows
    assert r.nonrep.exhausted
    assert (0, 2) in cat.THETA3.compose(cat.THETA3)
    assert r.lines()[0] == "EX algebra=EX3"
    assert r.power_witness is not None and r.power_witness.exponent == 2


def test_path_of_four():
    spec = ExAlgebraSpec.from_text(4, "0-1,1-2,2-3")
    A = build_ex_algebra(spec)
    r = verify_ex_properties(A, spec.relation, search_powers=False)
    assert r.nonrep.exhausted and r.weak is not None


def test_dedup_preserves_compatible_relations():
    spec = ExAlgebraSpec.from_text(3, "0-1,1-2")
    from tolrep.algebra import FiniteAlgebra
    full = FiniteAlgebra("full", 3, tuple(ex_operations(spec)))
    dedup = build_ex_algebra(spec)
    assert enumerate_tolerances(full) == enumerate_tolerances(dedup)
    assert is_representable(full, spec.relation).representable is False


@st.composite
def non_transitive(draw):
    n = draw(st.integers(3, 4))
    while True:
        edges = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), min_size=2, max_size=4))
        pairs = {(a, a) for a in range(n)} | edges | {(b, a) for a, b in edges}
        R = BinRel.from_pairs(n, pairs)
        if not R.is_transitive():
            return R


@settings(max_examples=15)
@given(non_transitive())
def test_random_non_transitive_relations(theta):
    A = build_ex_algebra(ExAlgebraSpec.from_relation(theta))
    r = verify_ex_properties(A, theta, search_powers=False)
    assert r.nonrep.exhausted
    assert not naive_is_representable(A, set(theta.pairs()))
    for a in range(A.n):
        for b in range(A.n):
            if a != b:
                assert theta <= compatible_reflexive_closure(A, [(a, b)])
