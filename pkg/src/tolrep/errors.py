"""Exception hierarchy; the CLI maps these onto exit codes."""


class TolrepError(Exception):
    exit_code = 2


class InputError(TolrepError, ValueError):
    """Malformed or out-of-range input (bad file, wrong size, not a tolerance, ...)."""


class ContractError(InputError):
    """A documented precondition of an operation does not hold."""


class BudgetExceeded(TolrepError):
    exit_code = 3

    def __init__(self, what, size, limit):
        super().__init__(f"{what}: size {size} exceeds budget {limit}")
        self.what = what
        self.size = size
        self.limit = limit


class Contradiction(TolrepError, AssertionError):
    """A guaranteed construction failed to verify; indicates a bug."""

    exit_code = 1
