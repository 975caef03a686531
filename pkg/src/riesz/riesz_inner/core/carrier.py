"""Module for the lattice carrier classes."""

from enum import IntEnum
from typing import Final

from .exceptions import InvalidCarrierError


class CarrierKind(IntEnum):
    """The kind of executable lattice model.

    FIN_DIM models Q^n with the coordinatewise order. TAIL_SEQ models the
    sequences (p_0, ..., p_{m-1}, t, t, t, ...) inside l-infinity, which form a
    sublattice of the convergent sequences.
    """

    FIN_DIM = 1
    TAIL_SEQ = 2


class Carrier:
    """An executable model of a vector lattice."""

    def __init__(self, kind: CarrierKind, dimension: int | None = None) -> None:
        """Initialise a new carrier.

        A dimension is required for FIN_DIM and ignored for TAIL_SEQ.

        Raises:
            InvalidCarrierError: A finite-dimensional carrier was given a
                missing or non-positive dimension.
        """
        if kind == CarrierKind.FIN_DIM:
            if dimension is None or dimension < 1:
                raise InvalidCarrierError(0 if dimension is None else dimension)
            self._dimension: int | None = dimension
        else:
            self._dimension = None
        self._kind = kind

    @classmethod
    def fin_dim(cls, dimension: int) -> "Carrier":
        """Return the carrier Q^dimension."""
        return cls(CarrierKind.FIN_DIM, dimension)

    @classmethod
    def tail_seq(cls) -> "Carrier":
        """Return the prefix-plus-constant-tail sequence carrier."""
        return cls(CarrierKind.TAIL_SEQ)

    @property
    def kind(self) -> CarrierKind:
        """The kind of the carrier."""
        return self._kind

    @property
    def dimension(self) -> int | None:
        """The dimension of a finite-dimensional carrier, otherwise None."""
        return self._dimension

    @property
    def is_tail_seq(self) -> bool:
        """Whether the carrier is the tail-sequence carrier."""
        return self._kind == CarrierKind.TAIL_SEQ

    def __eq__(self, other: object) -> bool:
        """Return whether the objects are equal carriers."""
        if not isinstance(other, Carrier):
            return NotImplemented

        return self._kind == other._kind and self._dimension == other._dimension

    def __hash__(self) -> int:
        """Return the hash of the carrier."""
        return hash((self._kind, self._dimension))

    def __str__(self) -> str:
        """Return a string representation of the carrier."""
        if self._kind == CarrierKind.FIN_DIM:
            return f"FinDim({self._dimension})"
        return "TailSeq"

    def __repr__(self) -> str:
        """Return a string representation of the carrier for developers."""
        if self._kind == CarrierKind.FIN_DIM:
            return f"{__class__.__name__}.fin_dim({self._dimension})"
        return f"{__class__.__name__}.tail_seq()"


TAIL_SEQ: Final = Carrier.tail_seq()
