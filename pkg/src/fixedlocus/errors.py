"""Exception types raised by fixedlocus."""


class FixedLocusError(ValueError):
    """Base class for all validation errors in this package."""


class RootCountMismatch(FixedLocusError):
    pass


class NotAUnit(FixedLocusError):
    pass


class InsufficientDegree(FixedLocusError):
    pass


class InconsistentSurface(FixedLocusError):
    """Surface data whose Noether completion is not integral."""


class TraceError(FixedLocusError):
    """Base for inadmissible values of the trace on H^{1,1}."""


class TraceParityError(TraceError):
    pass


class TraceRangeError(TraceError):
    pass


class ParameterRangeError(FixedLocusError):
    pass
