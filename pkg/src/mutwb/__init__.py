"""mutwb: an exact-arithmetic workbench for quiver mutation.

Core pieces:

* :mod:`mutwb.intmatrix` / :mod:`mutwb.snf` -- arbitrary-precision integer
  matrices, Smith normal form, cokernels, unimodular inverses.
* :mod:`mutwb.exchange` -- skew-symmetric exchange matrices, quivers, the
  Fomin-Zelevinsky mutation rule and its S-matrix form.
* :mod:`mutwb.genmut` -- the generalized mutation rule B' = T B T^t with T
  built from approximation-triangle data.
* :mod:`mutwb.typea` -- polygon triangulations as a combinatorial oracle:
  flips, exchange relations, composed T-matrices, Grothendieck groups.
* :mod:`mutwb.cli` / :mod:`mutwb.service` -- command-line verbs and a
  local JSON-over-HTTP session service.
"""

from .errors import (
    BoundaryEdge,
    Crossing,
    DimensionMismatch,
    IndexOutOfRange,
    MutwbError,
    NegativeMultiplicity,
    NotADiagonal,
    NotSkewSymmetric,
    NotSquare,
    NotUnimodular,
    PolygonMismatch,
    PolygonTooSmall,
    SearchSpaceExceeded,
    WrongCount,
)
from .exchange import (
    ExchangeMatrix,
    Quiver,
    antisymmetric_pairing,
    fz_mutate,
    matrix_to_quiver,
    mutate_via_s,
    quiver_to_matrix,
    s_matrix,
)
from .genmut import (
    ApproxTriangleData,
    ConsistencyReport,
    TMatrix,
    fz_consistency_check,
    generalized_mutate,
    s_from_t,
    single_step_t,
    t_from_triangles,
)
from .intmatrix import IntMatrix
from .snf import AbelianGroupDescriptor, SnfResult, cokernel, snf, unimodular_inverse
from .typea import (
    FlipMove,
    Triangulation,
    all_triangulations,
    composed_t,
    exchange_matrix_of,
    exchange_middle_terms,
    exchange_relation,
    fan,
    flip,
    flip_path,
    k0_of_type_a,
    quiver_of,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroupDescriptor",
    "ApproxTriangleData",
    "BoundaryEdge",
    "ConsistencyReport",
    "Crossing",
    "DimensionMismatch",
    "ExchangeMatrix",
    "FlipMove",
    "IndexOutOfRange",
    "IntMatrix",
    "MutwbError",
    "NegativeMultiplicity",
    "NotADiagonal",
    "NotSkewSymmetric",
    "NotSquare",
    "NotUnimodular",
    "PolygonMismatch",
    "PolygonTooSmall",
    "Quiver",
    "SearchSpaceExceeded",
    "SnfResult",
    "TMatrix",
    "Triangulation",
    "WrongCount",
    "all_triangulations",
    "antisymmetric_pairing",
    "cokernel",
    "composed_t",
    "exchange_matrix_of",
    "exchange_middle_terms",
    "exchange_relation",
    "fan",
    "flip",
    "flip_path",
    "fz_consistency_check",
    "fz_mutate",
    "generalized_mutate",
    "k0_of_type_a",
    "matrix_to_quiver",
    "mutate_via_s",
    "quiver_of",
    "quiver_to_matrix",
    "s_from_t",
    "s_matrix",
    "single_step_t",
    "snf",
    "t_from_triangles",
    "unimodular_inverse",
    "validate",
]
