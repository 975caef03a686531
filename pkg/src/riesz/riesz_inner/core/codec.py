"""Module for the JSON form of scalars and lattice elements.

FinDim elements are JSON arrays of rational strings; TailSeq elements are
objects {"prefix": [...], "tail": "..."}.
"""

from typing import Any, cast

from .carrier import TAIL_SEQ, Carrier
from .exceptions import CarrierMismatchError
from .rational import format_rational, parse_rational
from .vector import Vec

type Json = Any


def encode_vec(vector: Vec) -> Json:
    """Return the JSON form of the element."""
    entries = [format_rational(value) for value in vector.prefix]
    if vector.carrier.is_tail_seq:
        return {"prefix": entries, "tail": format_rational(vector.tail)}
    return entries


def decode_vec(data: Json, carrier: Carrier | None = None) -> Vec:
    """Return the element described by the JSON form.

    The carrier is inferred from the shape of the data; when a carrier is
    given, the decoded element must belong to it.

    Raises:
        ValueError: The data has neither the array nor the object shape.
        CarrierMismatchError: The element does not belong to the given carrier.
    """
    if isinstance(data, list):
        values = [parse_rational(value) for value in cast("list[Json]", data)]
        if not values:
            msg = "A FinDim element needs at least one coordinate."
            raise ValueError(msg)
        vector = Vec.fin_dim(values)
    elif isinstance(data, dict):
        fields = cast("dict[str, Json]", data)
        if set(fields) != {"prefix", "tail"}:
            msg = f'A TailSeq element needs exactly "prefix" and "tail", got {sorted(fields)}.'
            raise ValueError(msg)
        prefix = fields["prefix"]
        if not isinstance(prefix, list):
            msg = "The prefix of a TailSeq element must be an array."
            raise ValueError(msg)
        vector = Vec(
            TAIL_SEQ,
            [parse_rational(value) for value in cast("list[Json]", prefix)],
            parse_rational(fields["tail"]),
        )
    else:
        msg = f"Value [{data!r}] is not a lattice element."
        raise ValueError(msg)  # noqa: TRY004
    if carrier is not None and vector.carrier != carrier:
        raise CarrierMismatchError(carrier, vector.carrier)
    return vector


def encode_carrier(carrier: Carrier) -> Json:
    """Return the JSON form of the carrier."""
    if carrier.is_tail_seq:
        return {"kind": "tail-seq"}
    return {"kind": "fin-dim", "dimension": carrier.dimension}


def decode_carrier(data: Json) -> Carrier:
    """Return the carrier described by the JSON form.

    Raises:
        ValueError: The data is not a carrier description.
    """
    if not isinstance(data, dict):
        msg = f"Value [{data!r}] is not a carrier description."
        raise ValueError(msg)  # noqa: TRY004
    fields = cast("dict[str, Json]", data)
    kind = fields.get("kind")
    if kind == "tail-seq" and set(fields) == {"kind"}:
        return TAIL_SEQ
    if kind == "fin-dim" and set(fields) == {"kind", "dimension"}:
        dimension = fields["dimension"]
        if isinstance(dimension, int) and not isinstance(dimension, bool):
            return Carrier.fin_dim(dimension)
    msg = f"Value [{data!r}] is not a carrier description."
    raise ValueError(msg)
