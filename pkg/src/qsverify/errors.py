"""Exception types shared across the package."""


class VerificationError(Exception):
    """Base class for all domain errors raised by this package."""


class OutOfRange(VerificationError, ValueError):
    """A numeric argument lies outside its admissible interval."""


class MissingUnitEigenvalue(VerificationError, ValueError):
    """The largest eigenvalue of a strategy must equal 1."""


class DegenerateTop(VerificationError, ValueError):
    """The unit eigenvalue must be nondegenerate."""


class NumericalRange(VerificationError, ArithmeticError):
    """A quantity is too extreme to evaluate reliably in floating point."""


class SizeLimit(VerificationError, RuntimeError):
    """An exact enumeration would exceed the configured size cap."""


class DivByZeroGuard(VerificationError, ZeroDivisionError):
    """A conditional figure of merit was requested at a zero denominator."""


class SingularSpectrum(VerificationError, ValueError):
    """The operation requires a positive-definite strategy (smallest eigenvalue > 0)."""


class SingularHedge(VerificationError, ValueError):
    """The hedged strategy is still singular (only possible at p=0 with tau=0)."""


class InvalidParams(VerificationError, ValueError):
    """Family-specific protocol parameters are inconsistent or unsupported."""


class NormalizationError(InvalidParams):
    """A probability or amplitude vector fails its normalization constraint."""
