"""Exception hierarchy shared by all modules."""


class SubresError(Exception):
    """Base class for all library errors."""


class DimensionError(SubresError, ValueError):
    pass


class BasisError(SubresError, ValueError):
    """Knot vector too short, mismatched knots, or a non-polynomial basis ratio."""


class DegreeError(SubresError, ValueError):
    pass


class IndexRangeError(SubresError, ValueError):
    """A multi-index delta with |delta| > d0 or of the wrong length."""


class NullMatrixError(SubresError, ValueError):
    """The subresultant matrix for delta = (0, ..., 0) has no rows."""


class SingularOracleError(SubresError, ValueError):
    """The root-based formula needs pairwise distinct roots."""


class ParameterError(SubresError, ValueError):
    pass
