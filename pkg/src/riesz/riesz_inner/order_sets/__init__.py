"""Package for order intervals, the set grammar and structure procedures."""

from .codec import decode_set, encode_set
from .exceptions import (
    EmptyGeneratorsError,
    InvalidIntervalError,
    NotPositiveError,
    SetExprFormatError,
)
from .grid import anchor_points, candidate_points, grid_points
from .interval import (
    DEFAULT_SEMANTICS,
    Interval,
    IntervalKind,
    IntervalSemantics,
    Projection,
    parse_semantics,
    semantics_name,
    strictly_below,
)
from .set_expr import (
    Band,
    Complement,
    CoordHalfSpace,
    Dilate,
    Ideal,
    Intersection,
    IntervalSet,
    Relation,
    SetExpr,
    SolidHull,
    TailZero,
    Translate,
    Union,
    empty_set,
    full_space,
    member,
    push_complement,
    resolve_carrier,
)
from .solidity import SolidityVerdict, check_solid
from .structure import (
    AtomCatalog,
    IdealMembership,
    band_member,
    carrier_atoms,
    disjoint,
    ideal_member,
    is_atom,
    principal_ideal_dimension,
    solid_hull_member,
)

__all__ = [
    "DEFAULT_SEMANTICS",
    "AtomCatalog",
    "Band",
    "Complement",
    "CoordHalfSpace",
    "Dilate",
    "EmptyGeneratorsError",
    "Ideal",
    "IdealMembership",
    "Intersection",
    "Interval",
    "IntervalKind",
    "IntervalSemantics",
    "IntervalSet",
    "InvalidIntervalError",
    "NotPositiveError",
    "Projection",
    "Relation",
    "SetExpr",
    "SetExprFormatError",
    "SolidHull",
    "SolidityVerdict",
    "TailZero",
    "Translate",
    "Union",
    "anchor_points",
    "band_member",
    "candidate_points",
    "carrier_atoms",
    "check_solid",
    "decode_set",
    "disjoint",
    "empty_set",
    "encode_set",
    "full_space",
    "grid_points",
    "ideal_member",
    "is_atom",
    "member",
    "parse_semantics",
    "principal_ideal_dimension",
    "push_complement",
    "resolve_carrier",
    "semantics_name",
    "solid_hull_member",
    "strictly_below",
]
