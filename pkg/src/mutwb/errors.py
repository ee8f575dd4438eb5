"""Exception types shared across the workbench."""


class MutwbError(Exception):
    """Base class for all domain errors raised by this package."""


class NotSquare(MutwbError):
    """A square matrix was required."""


class NotUnimodular(MutwbError):
    """An integer matrix with determinant +-1 was required."""


class NotSkewSymmetric(MutwbError):
    """A skew-symmetric matrix was required."""


class DimensionMismatch(MutwbError):
    """Operand shapes or label sets are incompatible."""


class IndexOutOfRange(MutwbError, IndexError):
    """A vertex or slot index is outside [0, n)."""


class NegativeMultiplicity(MutwbError):
    """Triangle data contained a negative summand multiplicity."""


class WrongCount(MutwbError):
    """A triangulation of an m-gon must have exactly m - 3 diagonals."""


class Crossing(MutwbError):
    """Two diagonals intersect in the interior of the polygon."""


class BoundaryEdge(MutwbError):
    """A claimed diagonal is a polygon side or degenerate."""


class NotADiagonal(MutwbError):
    """The named diagonal does not belong to the triangulation."""


class PolygonMismatch(MutwbError):
    """Two triangulations live on polygons of different sizes."""


class PolygonTooSmall(MutwbError):
    """Polygon models need at least 4 vertices."""


class SearchSpaceExceeded(MutwbError):
    """Flip-graph search hit the configured state cap."""
