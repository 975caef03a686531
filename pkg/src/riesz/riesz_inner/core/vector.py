"""Module for lattice elements and the vector-lattice operations on them."""

from collections.abc import Callable, Iterable, Iterator
from fractions import Fraction

from .carrier import TAIL_SEQ, Carrier, CarrierKind
from .exceptions import CarrierMismatchError, DimensionError, PositionError
from .rational import ZERO, RationalLike, format_rational, to_rational


class Vec:
    """An element of a lattice carrier.

    In FinDim(n) the element is an n-tuple of rationals. In TailSeq it is a
    prefix plus a constant tail, meaning (p_0, ..., p_{m-1}, t, t, t, ...).
    The prefix of a stored TailSeq element never ends with an entry equal to
    the tail, so equal sequences always have field-wise equal storage.
    """

    __slots__ = ("_carrier", "_coords", "_tail")

    def __init__(
        self,
        carrier: Carrier,
        coords: Iterable[RationalLike],
        tail: RationalLike = 0,
    ) -> None:
        """Initialise a new lattice element in canonical form.

        For FinDim carriers the coordinates are the full tuple and the tail is
        ignored. For TailSeq the coordinates are the prefix.

        Raises:
            DimensionError: A FinDim element got the wrong number of coordinates.
            NotRationalError: A coordinate or the tail is not an exact rational.
        """
        values = tuple(to_rational(value) for value in coords)
        if carrier.kind == CarrierKind.FIN_DIM:
            if len(values) != carrier.dimension:
                raise DimensionError(carrier.dimension or 0, len(values))
            self._tail = ZERO
        else:
            self._tail = to_rational(tail)
            end = len(values)
            while end > 0 and values[end - 1] == self._tail:
                end -= 1
            values = values[:end]
        self._carrier = carrier
        self._coords = values

    @classmethod
    def fin_dim(cls, coords: Iterable[RationalLike]) -> "Vec":
        """Return the element of Q^n with the coordinates."""
        values = tuple(coords)
        return cls(Carrier.fin_dim(len(values)), values)

    @classmethod
    def tail_seq(cls, prefix: Iterable[RationalLike], tail: RationalLike) -> "Vec":
        """Return the sequence (prefix..., tail, tail, ...)."""
        return cls(TAIL_SEQ, prefix, tail)

    @property
    def carrier(self) -> Carrier:
        """The carrier the element belongs to."""
        return self._carrier

    @property
    def coords(self) -> tuple[Fraction, ...]:
        """The FinDim coordinates, or the TailSeq prefix."""
        return self._coords

    @property
    def prefix(self) -> tuple[Fraction, ...]:
        """The canonical prefix (the full coordinates for FinDim)."""
        return self._coords

    @property
    def tail(self) -> Fraction:
        """The constant tail value (always zero for FinDim)."""
        return self._tail

    @property
    def is_zero(self) -> bool:
        """Whether the element is the zero vector."""
        return self._tail == 0 and all(value == 0 for value in self._coords)

    def coordinate(self, position: int | None) -> Fraction:
        """Return the coordinate at the position; None addresses the tail.

        Raises:
            PositionError: The position is outside a FinDim carrier, or the
                tail of a FinDim element was requested.
        """
        if position is None:
            if not self._carrier.is_tail_seq:
                raise PositionError(position, self._carrier)
            return self._tail
        if position < 0:
            raise PositionError(position, self._carrier)
        if position < len(self._coords):
            return self._coords[position]
        if self._carrier.is_tail_seq:
            return self._tail
        raise PositionError(position, self._carrier)

    def padded(self, length: int) -> tuple[Fraction, ...]:
        """Return the first `length` coordinates (TailSeq) or all coordinates."""
        if not self._carrier.is_tail_seq:
            return self._coords
        return self._coords + (self._tail,) * (length - len(self._coords))

    def __add__(self, other: "Vec") -> "Vec":
        """Return the sum of the elements."""
        return add(self, other)

    def __sub__(self, other: "Vec") -> "Vec":
        """Return the difference of the elements."""
        return sub(self, other)

    def __neg__(self) -> "Vec":
        """Return the additive inverse of the element."""
        return scale(-1, self)

    def __mul__(self, value: RationalLike) -> "Vec":
        """Return the element scaled by the value."""
        return scale(value, self)

    def __rmul__(self, value: RationalLike) -> "Vec":
        """Return the element scaled by the value."""
        return scale(value, self)

    def __truediv__(self, value: RationalLike) -> "Vec":
        """Return the element scaled by the inverse of the value."""
        return scale(1 / to_rational(value), self)

    def __abs__(self) -> "Vec":
        """Return the modulus x ∨ (−x) of the element."""
        return absolute(self)

    def __or__(self, other: "Vec") -> "Vec":
        """Return the supremum of the elements."""
        return sup(self, other)

    def __and__(self, other: "Vec") -> "Vec":
        """Return the infimum of the elements."""
        return inf(self, other)

    def __le__(self, other: "Vec") -> bool:
        """Return whether the element is below the other in the lattice order."""
        return leq(self, other)

    def __ge__(self, other: "Vec") -> bool:
        """Return whether the element is above the other in the lattice order."""
        return leq(other, self)

    def __eq__(self, other: object) -> bool:
        """Return whether the objects are equal lattice elements."""
        if not isinstance(other, Vec):
            return NotImplemented

        return (
            self._carrier == other._carrier
            and self._coords == other._coords
            and self._tail == other._tail
        )

    def __hash__(self) -> int:
        """Return the hash of the element."""
        return hash((self._carrier, self._coords, self._tail))

    def __str__(self) -> str:
        """Return a string representation of the element."""
        entries = ", ".join(format_rational(value) for value in self._coords)
        if self._carrier.is_tail_seq:
            return f"[{entries}]/{format_rational(self._tail)}"
        return f"({entries})"

    def __repr__(self) -> str:
        """Return a string representation of the element for developers."""
        entries = ", ".join(f"'{format_rational(value)}'" for value in self._coords)
        if self._carrier.is_tail_seq:
            return (
                f"{__class__.__name__}.tail_seq([{entries}], "
                f"'{format_rational(self._tail)}')"
            )
        return f"{__class__.__name__}.fin_dim([{entries}])"


def check_same_carrier(x: Vec, y: Vec) -> None:
    """Check that two elements share a carrier.

    Raises:
        CarrierMismatchError: The carriers differ.
    """
    if x.carrier != y.carrier:
        raise CarrierMismatchError(x.carrier, y.carrier)


def aligned_length(*vectors: Vec) -> int:
    """Return the length to which TailSeq prefixes must be padded to align."""
    return max((len(vector.prefix) for vector in vectors), default=0)


def aligned_pairs(x: Vec, y: Vec) -> Iterator[tuple[Fraction, Fraction]]:
    """Yield corresponding coordinates, ending with the tails for TailSeq.

    Raises:
        CarrierMismatchError: The carriers differ.
    """
    check_same_carrier(x, y)
    length = aligned_length(x, y)
    yield from zip(x.padded(length), y.padded(length), strict=True)
    if x.carrier.is_tail_seq:
        yield x.tail, y.tail


def _combine(
    x: Vec,
    y: Vec,
    operation: Callable[[Fraction, Fraction], Fraction],
) -> Vec:
    check_same_carrier(x, y)
    length = aligned_length(x, y)
    coords = [
        operation(a, b)
        for a, b in zip(x.padded(length), y.padded(length), strict=True)
    ]
    return Vec(x.carrier, coords, operation(x.tail, y.tail))


def _map(x: Vec, operation: Callable[[Fraction], Fraction]) -> Vec:
    return Vec(x.carrier, [operation(value) for value in x.prefix], operation(x.tail))


def leq(x: Vec, y: Vec) -> bool:
    """Return whether x ≤ y coordinatewise, tail included.

    Raises:
        CarrierMismatchError: The carriers differ.
    """
    return all(a <= b for a, b in aligned_pairs(x, y))


def sup(x: Vec, y: Vec) -> Vec:
    """Return the least upper bound x ∨ y.

    Raises:
        CarrierMismatchError: The carriers differ.
    """
    return _combine(x, y, max)


def inf(x: Vec, y: Vec) -> Vec:
    """Return the greatest lower bound x ∧ y.

    Raises:
        CarrierMismatchError: The carriers differ.
    """
    return _combine(x, y, min)


def add(x: Vec, y: Vec) -> Vec:
    """Return x + y.

    Raises:
        CarrierMismatchError: The carriers differ.
    """
    return _combine(x, y, lambda a, b: a + b)


def sub(x: Vec, y: Vec) -> Vec:
    """Return x − y.

    Raises:
        CarrierMismatchError: The carriers differ.
    """
    return _combine(x, y, lambda a, b: a - b)


def scale(t: RationalLike, x: Vec) -> Vec:
    """Return t·x."""
    factor = to_rational(t)
    return _map(x, lambda value: factor * value)


def absolute(x: Vec) -> Vec:
    """Return |x| = x ∨ (−x)."""
    return _map(x, abs)


def pos(x: Vec) -> Vec:
    """Return the positive part x⁺ = x ∨ 0."""
    return _map(x, lambda value: max(value, ZERO))


def neg(x: Vec) -> Vec:
    """Return the negative part x⁻ = (−x) ∨ 0."""
    return _map(x, lambda value: max(-value, ZERO))


def normalize(x: Vec) -> Vec:
    """Return the canonical form of the element."""
    return Vec(x.carrier, x.prefix, x.tail)


def sup_all(vectors: Iterable[Vec]) -> Vec:
    """Return the supremum of a non-empty finite collection.

    Raises:
        ValueError: The collection is empty.
    """
    iterator = iter(vectors)
    try:
        result = next(iterator)
    except StopIteration as e:
        msg = "Supremum of an empty collection is undefined."
        raise ValueError(msg) from e
    for vector in iterator:
        result = sup(result, vector)
    return result
