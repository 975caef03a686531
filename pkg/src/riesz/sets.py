"""Module for grouping order intervals, set expressions and their structure."""

from .riesz_inner.order_sets import (
    DEFAULT_SEMANTICS,
    Band,
    Complement,
    CoordHalfSpace,
    Dilate,
    EmptyGeneratorsError,
    Ideal,
    Intersection,
    Interval,
    IntervalSemantics,
    IntervalSet,
    InvalidIntervalError,
    NotPositiveError,
    Relation,
    SetExpr,
    SetExprFormatError,
    SolidHull,
    SolidityVerdict,
    TailZero,
    Translate,
    Union,
    band_member,
    carrier_atoms,
    check_solid,
    decode_set,
    disjoint,
    empty_set,
    encode_set,
    full_space,
    ideal_member,
    is_atom,
    member,
    principal_ideal_dimension,
    push_complement,
    solid_hull_member,
)

__all__ = [
    "DEFAULT_SEMANTICS",
    "Band",
    "Complement",
    "CoordHalfSpace",
    "Dilate",
    "EmptyGeneratorsError",
    "Ideal",
    "Intersection",
    "Interval",
    "IntervalSemantics",
    "IntervalSet",
    "InvalidIntervalError",
    "NotPositiveError",
    "Relation",
    "SetExpr",
    "SetExprFormatError",
    "SolidHull",
    "SolidityVerdict",
    "TailZero",
    "Translate",
    "Union",
    "band_member",
    "carrier_atoms",
    "check_solid",
    "decode_set",
    "disjoint",
    "empty_set",
    "encode_set",
    "full_space",
    "ideal_member",
    "is_atom",
    "member",
    "principal_ideal_dimension",
    "push_complement",
    "solid_hull_member",
]
