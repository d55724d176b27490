"""Exception types shared across the library."""


class DomainError(ValueError):
    """An input is outside the mathematical domain of the operation."""


class ParityError(DomainError):
    """An odd-degree projection was requested where parity makes it vanish."""


class ConvergenceError(RuntimeError):
    """An adaptive refinement stalled above its tolerance."""


class NotSPDError(ArithmeticError):
    """A tridiagonal factorization hit a non-positive pivot."""


class UsageError(ValueError):
    """Invalid command-line invocation."""
