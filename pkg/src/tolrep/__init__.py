"""Tolerances of finite algebras: representability as R∘R⁻, weak representability,
images of congruences, and the checks that go with them."""

from .algebra import FiniteAlgebra, Hom, Operation, PairAlgebra, make_operation
from .binrel import BinRel
from .config import DEFAULT_BUDGET, Budget
from .errors import BudgetExceeded, ContractError, Contradiction, InputError, TolrepError
from .relations import (classify, compatible_reflexive_closure, congruence_closure, enumerate_congruences,
                        enumerate_tolerances, is_congruence, is_tolerance, tolerance_closure)
from .representability import (NonRepCertificate, RepCertificate, WeakRepCertificate, is_representable,
                                is_weakly_representable, lattice_witness, rep_to_congruence_image)

__all__ = [
    "BinRel", "Budget", "BudgetExceeded", "ContractError", "Contradiction", "DEFAULT_BUDGET",
    "FiniteAlgebra", "Hom", "InputError", "NonRepCertificate", "Operation", "PairAlgebra",
    "RepCertificate", "TolrepError", "WeakRepCertificate", "classify", "compatible_reflexive_closure",
    "congruence_closure", "enumerate_congruences", "enumerate_tolerances", "is_congruence",
    "is_representable", "is_tolerance", "is_weakly_representable", "lattice_witness", "make_operation",
    "rep_to_congruence_image", "tolerance_closure",
]
