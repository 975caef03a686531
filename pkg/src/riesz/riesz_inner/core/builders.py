"""Module for frequently used lattice elements."""

from .carrier import TAIL_SEQ, Carrier
from .exceptions import PositionError
from .vector import Vec


def zero(carrier: Carrier) -> Vec:
    """Return the zero element of the carrier."""
    return Vec(carrier, [0] * (carrier.dimension or 0), 0)


def ones(carrier: Carrier) -> Vec:
    """Return the all-ones strong unit (constant-1 sequence in TailSeq)."""
    if carrier.is_tail_seq:
        return Vec(carrier, [], 1)
    return Vec(carrier, [1] * (carrier.dimension or 0))


def unit_vector(carrier: Carrier, position: int) -> Vec:
    """Return the standard unit vector with a 1 at the 0-based position.

    Raises:
        PositionError: The position does not exist in a FinDim carrier.
    """
    dimension = carrier.dimension
    if position < 0 or (dimension is not None and position >= dimension):
        raise PositionError(position, carrier)
    length = dimension if dimension is not None else position + 1
    coords = [0] * length
    coords[position] = 1
    return Vec(carrier, coords, 0)


def shift_vector(zeros: int) -> Vec:
    """Return the sequence whose first `zeros` terms are 0 and the rest 1."""
    return Vec(TAIL_SEQ, [0] * zeros, 1)
