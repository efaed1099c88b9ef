"""Resource budgets shared by the searches and constructions."""
from __future__ import annotations

import os
from dataclasses import dataclass, field

DEFAULT_SIZE_BUDGET = 10**6


def _env_size() -> int:
    raw = os.environ.get("TOLREP_BUDGET")
    if raw is None:
        return DEFAULT_SIZE_BUDGET
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_SIZE_BUDGET
    return value if value > 0 else DEFAULT_SIZE_BUDGET


@dataclass(frozen=True)
class Budget:
    # universe sizes and total operation-table entries of built algebras
    size: int = field(default_factory=_env_size)
    # generator sets examined by the representability searches
    search: int = 1 << 22
    # largest n for which all subuniverses of A x A are enumerated
    square_exhaustive_max_n: int = 4
    # generator-set size used for subuniverses of A x A above that
    square_generators: int = 3
    # largest exponent tried when looking for image-of-congruence witnesses in powers
    power_exponent: int = 3


DEFAULT_BUDGET = Budget()
