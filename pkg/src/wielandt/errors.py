"""Exception hierarchy shared by every module of the package."""


class WielandtError(ValueError):
    """Base class for all errors raised by this package."""


class DimensionError(WielandtError):
    pass


class NotPositiveDefinite(WielandtError):
    pass


class NotHermitian(WielandtError):
    pass


class EigFailure(WielandtError):
    """The Jacobi iteration hit its sweep cap without converging."""


class ZeroVector(WielandtError):
    pass


class DependentVectors(WielandtError):
    pass


class RangeError(WielandtError):
    """A scalar argument lies outside its admissible interval."""


class DegeneratePencil(WielandtError):
    """Raised when a construction needs m < M but the pencil is scalar."""


class ParseError(WielandtError):
    """Malformed matrix file or command-line vector."""
