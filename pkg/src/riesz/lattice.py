"""Module for grouping the lattice carriers, elements and exact scalars."""

from .riesz_inner.config import DEFAULT_CONFIG, SearchConfig
from .riesz_inner.core import (
    TAIL_SEQ,
    Carrier,
    CarrierMismatchError,
    DimensionError,
    InvalidCarrierError,
    NotRationalError,
    PositionError,
    RationalFormatError,
    Vec,
    absolute,
    add,
    decode_carrier,
    decode_vec,
    encode_carrier,
    encode_vec,
    format_rational,
    inf,
    leq,
    neg,
    normalize,
    ones,
    parse_rational,
    pos,
    scale,
    shift_vector,
    sub,
    sup,
    to_rational,
    unit_vector,
    zero,
)
from .riesz_inner.status import Status, status_name

__all__ = [
    "DEFAULT_CONFIG",
    "TAIL_SEQ",
    "Carrier",
    "CarrierMismatchError",
    "DimensionError",
    "InvalidCarrierError",
    "NotRationalError",
    "PositionError",
    "RationalFormatError",
    "SearchConfig",
    "Status",
    "Vec",
    "absolute",
    "add",
    "decode_carrier",
    "decode_vec",
    "encode_carrier",
    "encode_vec",
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
    "status_name",
    "sub",
    "sup",
    "to_rational",
    "unit_vector",
    "zero",
]
