"""Exception hierarchy shared by all modules."""


class WeylError(Exception):
    """Base class for errors raised by weylcycles."""


class IncompatibleAmbientError(WeylError):
    """Two classes live on different blow-ups (n, s)."""


class InvalidIndexSetError(WeylError):
    pass


class UnsupportedError(WeylError):
    """The requested operation is not implemented for this (n, s)."""


class OrbitUnboundedError(WeylError):
    """Orbit enumeration exceeded its size cap."""


class NotAWeylDivisorError(WeylError):
    pass


class NotAWeylCurveError(WeylError):
    pass


class CatalogUnavailableError(WeylError):
    pass


class WdimUndefinedError(WeylError):
    """wdim was requested for a non-effective divisor."""


class NoDecompositionError(WeylError):
    """A 2-cycle has no nonnegative integer decomposition into Weyl surfaces."""


class PrimeTooSmallError(WeylError):
    pass
