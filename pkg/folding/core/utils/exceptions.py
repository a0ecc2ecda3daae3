# folding/core/utils/exceptions.py

from typing import Any, Optional

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class FoldingException(Exception):
    """
    Base class for application exceptions.
    Carries the process exit code the CLI should terminate with.
    """

    default_exit_code: int = EXIT_FAILURE
    default_detail: str = "Internal error."

    def __init__(
        self,
        detail: Any = None,
        exit_code: Optional[int] = None,
    ) -> None:
        self.detail = detail if detail is not None else self.default_detail
        self.exit_code = exit_code if exit_code is not None else self.default_exit_code
        super().__init__(self.detail)


# ---------------------------
# Usage errors (exit 2)
# ---------------------------
class InvalidArgument(FoldingException):
    default_exit_code = EXIT_USAGE
    default_detail = "Invalid argument."


class NotPrime(InvalidArgument):
    default_detail = "Characteristic is not a prime."


class NotPrimePower(InvalidArgument):
    default_detail = "Field order is not a prime power."


class SizeExceeded(InvalidArgument):
    default_detail = "Input exceeds the configured size guard."


# ---------------------------
# Internal failures (exit 1)
# ---------------------------
class NonInvariantInput(FoldingException):
    default_detail = "Laurent polynomial is not invariant under the substitution group."


class ReductionStall(FoldingException):
    default_detail = "Reduction to fundamental invariants failed to make progress."


class NonIntegralFormula(FoldingException):
    default_detail = "Cardinality formula evaluated to a non-integer."
