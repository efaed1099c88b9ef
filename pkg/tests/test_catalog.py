import pytest

from tolrep import catalog as cat
from tolrep.counterexamples import verify_ex_properties
from tolrep.permutability import check_tolerances_are_congruences
from tolrep.representability import lattice_order


def test_required_keys():
    assert {"C2", "C3", "C4", "N5", "M3", "Z2", "Z3", "EX3"} <= set(cat.catalog())
    assert cat.get("N5").n == 5


@pytest.mark.parametrize("key", sorted(cat.catalog()))
def test_self_check(key):
    assert cat.self_check(cat.catalog()[key]) is None


def test_n5_shape():
    leq = lattice_order(cat.get("N5"))
    assert (1, 2) in leq and (0, 3) in leq and (3, 4) in leq
    assert (1, 3) not in leq and (3, 2) not in leq and (2, 3) not in leq


def test_m3_atoms_incomparable():
    leq = lattice_order(cat.get("M3"))
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            assert ((a, b) in leq) == (a == b)


def test_group_tables():
    Z3 = cat.get("Z3")
    mul, inv = Z3.ops[Z3.op_index("mul")], Z3.ops[Z3.op_index("inv")]
    assert mul(1, 2) == 0 and inv(1) == 2


def test_examples():
    assert verify_ex_properties(cat.get("EX3"), cat.THETA3, search_powers=False).nonrep.exhausted
    assert check_tolerances_are_congruences(cat.get("Z2"))[0]


def test_broken_group_detected():
    from tolrep.algebra import FiniteAlgebra, Operation
    bad = FiniteAlgebra("bad", 2, (Operation("mul", 2, (0, 0, 0, 1)), Operation("inv", 1, (0, 1))))
    assert cat.check_group_axioms(bad) is not None
