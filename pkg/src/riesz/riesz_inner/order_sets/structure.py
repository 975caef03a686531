"""Module for ideal, band, solid-hull, atom and disjointness procedures."""

# ruff: noqa: TID252

from collections.abc import Iterator, Sequence
from fractions import Fraction

from ..core import (
    Carrier,
    Vec,
    absolute,
    aligned_length,
    check_same_carrier,
    inf,
    leq,
    unit_vector,
    zero,
)
from .exceptions import EmptyGeneratorsError, NotPositiveError


def _positions(*vectors: Vec) -> Iterator[tuple[Fraction, ...]]:
    """Yield the aligned coordinates of the vectors, position by position.

    For TailSeq the last tuple holds the tails and stands for every position
    beyond the aligned prefix.
    """
    length = aligned_length(*vectors)
    yield from zip(*(vector.padded(length) for vector in vectors), strict=True)
    if vectors[0].carrier.is_tail_seq:
        yield tuple(vector.tail for vector in vectors)


def _modulus_sum(generators: Sequence[Vec], construction: str) -> Vec:
    if not generators:
        raise EmptyGeneratorsError(construction)
    total = absolute(generators[0])
    for generator in generators[1:]:
        check_same_carrier(total, generator)
        total = total + absolute(generator)
    return total


class IdealMembership:
    """Outcome of an ideal membership test."""

    def __init__(self, *, is_member: bool, factor: Fraction | None) -> None:
        """Initialise a new ideal membership outcome."""
        self._is_member = is_member
        self._factor = factor

    @property
    def is_member(self) -> bool:
        """Whether the element is in the ideal."""
        return self._is_member

    @property
    def factor(self) -> Fraction | None:
        """The least λ with |y| ≤ λ·(|g_1| + ... + |g_m|), when a member.

        The value is 0 for the zero element, where λ can be taken arbitrarily
        small.
        """
        return self._factor

    def __bool__(self) -> bool:
        """Return whether the element is in the ideal."""
        return self._is_member

    def __repr__(self) -> str:
        """Return a string representation of the outcome for developers."""
        return (
            f"{__class__.__name__}(is_member={self._is_member}, "
            f"factor={self._factor!r})"
        )


def ideal_member(generators: Sequence[Vec], y: Vec) -> IdealMembership:
    """Test membership in the ideal generated by the generators.

    Raises:
        EmptyGeneratorsError: No generators were given.
        CarrierMismatchError: The elements live in different carriers.
    """
    total = _modulus_sum(generators, "ideal")
    check_same_carrier(total, y)
    factor = Fraction(0)
    for bound, value in _positions(total, absolute(y)):
        if bound == 0:
            if value != 0:
                return IdealMembership(is_member=False, factor=None)
        else:
            factor = max(factor, value / bound)
    return IdealMembership(is_member=True, factor=factor)


def band_member(generators: Sequence[Vec], y: Vec) -> bool:
    """Test membership in the band generated by the generators.

    y belongs iff it vanishes at every position, tail included, where all
    generators vanish.

    Raises:
        EmptyGeneratorsError: No generators were given.
        CarrierMismatchError: The elements live in different carriers.
    """
    total = _modulus_sum(generators, "band")
    check_same_carrier(total, y)
    return all(bound != 0 or value == 0 for bound, value in _positions(total, y))


def solid_hull_member(generators: Sequence[Vec], y: Vec) -> bool:
    """Test whether |y| ≤ |g| for some generator g.

    Raises:
        EmptyGeneratorsError: No generators were given.
        CarrierMismatchError: The elements live in different carriers.
    """
    if not generators:
        raise EmptyGeneratorsError("solid hull")
    modulus = absolute(y)
    return any(leq(modulus, absolute(generator)) for generator in generators)


def disjoint(x: Vec, y: Vec) -> bool:
    """Return whether |x| ∧ |y| = 0.

    Raises:
        CarrierMismatchError: The carriers differ.
    """
    return inf(absolute(x), absolute(y)).is_zero


def _nonzero_positions(x: Vec) -> int | None:
    """Return how many coordinates are non-zero, None when infinitely many."""
    if x.carrier.is_tail_seq and x.tail != 0:
        return None
    return sum(1 for value in x.prefix if value != 0)


def is_atom(x: Vec) -> bool:
    """Return whether the positive element x is an atom.

    An atom has exactly one non-zero coordinate; a non-zero tail stands for
    infinitely many coordinates, so such an element is never an atom.

    Raises:
        NotPositiveError: x is not ≥ 0, or x is 0.
    """
    if x.is_zero or not leq(zero(x.carrier), x):
        raise NotPositiveError(x)
    return _nonzero_positions(x) == 1


def principal_ideal_dimension(x: Vec) -> int | None:
    """Return the dimension of the principal ideal E_x, None when infinite.

    E_x consists of the elements supported where x is, so its dimension is
    the number of non-zero coordinates of x.
    """
    return _nonzero_positions(x)


class AtomCatalog:
    """The atoms of a carrier: positive multiples of standard unit vectors."""

    def __init__(self, carrier: Carrier) -> None:
        """Initialise the atom description of the carrier."""
        self._carrier = carrier

    @property
    def carrier(self) -> Carrier:
        """The carrier described."""
        return self._carrier

    @property
    def atomic(self) -> bool:
        """Whether the span of the atoms is order dense (always for our carriers)."""
        return True

    @property
    def count(self) -> int | None:
        """The number of atom directions, None when countably infinite."""
        return self._carrier.dimension

    def directions(self, limit: int) -> list[Vec]:
        """Return the first unit-vector directions, at most `limit` of them."""
        count = self._carrier.dimension
        total = limit if count is None else min(limit, count)
        return [unit_vector(self._carrier, index) for index in range(total)]

    def describe(self) -> str:
        """Return a human-readable description of the atom set."""
        if self._carrier.dimension is None:
            return "{λ·e_i : λ > 0, i ≥ 0}"
        return f"{{λ·e_i : λ > 0, 0 ≤ i < {self._carrier.dimension}}}"

    def __repr__(self) -> str:
        """Return a string representation of the catalog for developers."""
        return f"{__class__.__name__}({self._carrier!r})"


def carrier_atoms(carrier: Carrier) -> AtomCatalog:
    """Return the atom description of the carrier."""
    return AtomCatalog(carrier)
