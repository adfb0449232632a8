"""Exception types shared across the package."""


class XilapError(Exception):
    pass


class PoleError(XilapError, ZeroDivisionError):
    """Evaluation requested exactly at a pole."""


class BranchError(XilapError, ValueError):
    """Argument sits on a branch cut (negative real axis)."""


class RangeError(XilapError, ValueError):
    """Argument outside a precomputed table (e.g. Moebius sieve bound)."""


class CancellationError(XilapError, ArithmeticError):
    """Series lost too many digits to cancellation even in extended precision."""


class DomainError(XilapError, ValueError):
    """Parameters outside the admissible region of the operation."""


class DivergenceError(XilapError, ValueError):
    """A series or convolution that provably diverges for these parameters."""


class ConvergenceError(XilapError, ArithmeticError):
    """Quadrature failed to reach the requested tolerance."""


class StripError(XilapError, ValueError):
    """Transform evaluated outside its strip of convergence."""


class UnknownIdentityError(XilapError, KeyError):
    """Identity id not present in the verification catalog."""
