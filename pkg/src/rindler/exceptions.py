"""Exception types raised across the package."""


class DimensionError(ValueError):
    """Matrix shape does not agree with the declared subsystem dimensions."""


class NotHermitianError(ValueError):
    """A Hermitian-only routine received a non-Hermitian matrix."""


class NotAStateError(ValueError):
    """Input is not a valid density matrix (trace, Hermiticity or positivity)."""


class NotXStateError(ValueError):
    """Input is not a real symmetric X-shaped two-qubit matrix."""


class DomainError(ValueError):
    """A physical parameter lies outside its allowed range."""


class ConvergenceError(RuntimeError):
    """An iterative routine exhausted its iteration budget."""


class NumericalError(ArithmeticError):
    """A computed quantity violates its contract beyond roundoff."""
