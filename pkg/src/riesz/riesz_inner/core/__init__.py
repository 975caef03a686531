"""Package for exact scalars, lattice carriers and vector-lattice operations."""

from .builders import ones, shift_vector, unit_vector, zero
from .carrier import TAIL_SEQ, Carrier, CarrierKind
from .codec import Json, decode_carrier, decode_vec, encode_carrier, encode_vec
from .exceptions import (
    CarrierMismatchError,
    DimensionError,
    InvalidCarrierError,
    NotRationalError,
    PositionError,
    RationalFormatError,
)
from .rational import (
    ONE,
    ZERO,
    Rat,
    RationalLike,
    ceil_rational,
    floor_rational,
    format_rational,
    parse_rational,
    sign,
    to_rational,
)
from .vector import (
    Vec,
    absolute,
    add,
    aligned_length,
    aligned_pairs,
    check_same_carrier,
    inf,
    leq,
    neg,
    normalize,
    pos,
    scale,
    sub,
    sup,
    sup_all,
)

__all__ = [
    "ONE",
    "TAIL_SEQ",
    "ZERO",
    "Carrier",
    "CarrierKind",
    "CarrierMismatchError",
    "DimensionError",
    "InvalidCarrierError",
    "Json",
    "NotRationalError",
    "PositionError",
    "Rat",
    "RationalFormatError",
    "RationalLike",
    "Vec",
    "absolute",
    "add",
    "aligned_length",
    "aligned_pairs",
    "ceil_rational",
    "check_same_carrier",
    "decode_carrier",
    "decode_vec",
    "encode_carrier",
    "encode_vec",
    "floor_rational",
    "format_rational",
    "inf",
    "leq",
    "neg",
    "normalize",
    "ones",
    "parse_rational",
    "pos",
    "scale",
    "shift_vector",
    "sign",
    "sub",
    "sup",
    "sup_all",
    "to_rational",
    "unit_vector",
    "zero",
]
