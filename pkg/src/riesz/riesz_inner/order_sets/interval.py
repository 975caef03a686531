"""Module for order intervals and their strictness semantics."""

# ruff: noqa: TID252

from enum import IntEnum
from fractions import Fraction

from ..core import Vec, aligned_length, aligned_pairs, check_same_carrier, leq
from .exceptions import InvalidIntervalError


class IntervalSemantics(IntEnum):
    """The meaning of the strict order a < z used by open intervals.

    STRICT_PARTIAL: a ≤ z and a ≠ z.
    STRICT_UNIFORM: a is strictly below z in every coordinate, tail included.
    """

    STRICT_PARTIAL = 1
    STRICT_UNIFORM = 2


class IntervalKind(IntEnum):
    """Whether an interval includes its endpoints."""

    OPEN = 1
    CLOSED = 2


DEFAULT_SEMANTICS = IntervalSemantics.STRICT_PARTIAL

_SEMANTICS_NAMES = {
    IntervalSemantics.STRICT_PARTIAL: "strict-partial",
    IntervalSemantics.STRICT_UNIFORM: "strict-uniform",
}


def semantics_name(semantics: IntervalSemantics) -> str:
    """Return the serialised name of the semantics."""
    return _SEMANTICS_NAMES[semantics]


def parse_semantics(name: str) -> IntervalSemantics:
    """Return the semantics with the serialised name.

    Raises:
        ValueError: The name is not a known semantics.
    """
    for semantics, known in _SEMANTICS_NAMES.items():
        if known == name:
            return semantics
    msg = f"Semantics [{name}] is not one of {sorted(_SEMANTICS_NAMES.values())}."
    raise ValueError(msg)


def strictly_below(a: Vec, z: Vec, semantics: IntervalSemantics) -> bool:
    """Return whether a < z under the semantics.

    Raises:
        CarrierMismatchError: The carriers differ.
    """
    if semantics == IntervalSemantics.STRICT_UNIFORM:
        return all(x < y for x, y in aligned_pairs(a, z))
    return leq(a, z) and a != z


class Interval:
    """An order interval [lo, hi] or (lo, hi)."""

    def __init__(
        self,
        lo: Vec,
        hi: Vec,
        kind: IntervalKind,
        semantics: IntervalSemantics = DEFAULT_SEMANTICS,
    ) -> None:
        """Initialise a new order interval.

        Raises:
            CarrierMismatchError: The endpoints live in different carriers.
            InvalidIntervalError: lo ≰ hi, or the open interval would be empty
                under the semantics.
        """
        check_same_carrier(lo, hi)
        if not leq(lo, hi):
            raise InvalidIntervalError(lo, hi, "lower endpoint is not below upper")
        if kind == IntervalKind.OPEN and not strictly_below(lo, hi, semantics):
            raise InvalidIntervalError(
                lo,
                hi,
                f"open interval is empty under {semantics_name(semantics)} semantics",
            )
        self._lo = lo
        self._hi = hi
        self._kind = kind
        self._semantics = semantics

    @classmethod
    def open(
        cls,
        lo: Vec,
        hi: Vec,
        semantics: IntervalSemantics = DEFAULT_SEMANTICS,
    ) -> "Interval":
        """Return the open interval (lo, hi)."""
        return cls(lo, hi, IntervalKind.OPEN, semantics)

    @classmethod
    def closed(cls, lo: Vec, hi: Vec) -> "Interval":
        """Return the closed interval [lo, hi]."""
        return cls(lo, hi, IntervalKind.CLOSED)

    @property
    def lo(self) -> Vec:
        """The lower endpoint."""
        return self._lo

    @property
    def hi(self) -> Vec:
        """The upper endpoint."""
        return self._hi

    @property
    def kind(self) -> IntervalKind:
        """Whether the interval is open or closed."""
        return self._kind

    @property
    def semantics(self) -> IntervalSemantics:
        """The strictness semantics used when the interval is open."""
        return self._semantics

    @property
    def is_open(self) -> bool:
        """Whether the interval excludes its endpoints."""
        return self._kind == IntervalKind.OPEN

    @property
    def width(self) -> Vec:
        """The width hi − lo."""
        return self._hi - self._lo

    def contains(self, z: Vec) -> bool:
        """Return whether z lies in the interval.

        Raises:
            CarrierMismatchError: z lives in a different carrier.
        """
        if self._kind == IntervalKind.CLOSED:
            return leq(self._lo, z) and leq(z, self._hi)
        return strictly_below(self._lo, z, self._semantics) and strictly_below(
            z,
            self._hi,
            self._semantics,
        )

    def projection(self, position: int | None) -> "Projection":
        """Return the exact set of values z_position takes for z in the interval.

        None addresses the tail.
        """
        low = self._lo.coordinate(position)
        high = self._hi.coordinate(position)
        if low == high:
            return Projection(low, high, low_closed=True, high_closed=True)
        if self._kind == IntervalKind.CLOSED:
            return Projection(low, high, low_closed=True, high_closed=True)
        if self._semantics == IntervalSemantics.STRICT_UNIFORM:
            return Projection(low, high, low_closed=False, high_closed=False)
        # an endpoint value is reachable iff another position can move
        reachable = self._has_room_outside(position)
        return Projection(low, high, low_closed=reachable, high_closed=reachable)

    def _has_room_outside(self, position: int | None) -> bool:
        length = aligned_length(self._lo, self._hi)
        lows = self._lo.padded(length)
        highs = self._hi.padded(length)
        for index, (low, high) in enumerate(zip(lows, highs, strict=True)):
            if index != position and low < high:
                return True
        # the tail stands for infinitely many positions
        return self._lo.carrier.is_tail_seq and self._lo.tail < self._hi.tail

    def translated(self, shift: Vec) -> "Interval":
        """Return the interval moved by the shift."""
        return Interval(self._lo + shift, self._hi + shift, self._kind, self._semantics)

    def scaled(self, factor: Fraction) -> "Interval":
        """Return the image of the interval under z ↦ factor·z, factor ≠ 0."""
        lo, hi = self._lo * factor, self._hi * factor
        if factor < 0:
            lo, hi = hi, lo
        return Interval(lo, hi, self._kind, self._semantics)

    def __eq__(self, other: object) -> bool:
        """Return whether the objects are equal intervals."""
        if not isinstance(other, Interval):
            return NotImplemented

        return (
            self._lo == other._lo
            and self._hi == other._hi
            and self._kind == other._kind
            and (self._kind == IntervalKind.CLOSED or self._semantics == other._semantics)
        )

    def __hash__(self) -> int:
        """Return the hash of the interval."""
        return hash((self._lo, self._hi, self._kind))

    def __str__(self) -> str:
        """Return a string representation of the interval."""
        if self._kind == IntervalKind.CLOSED:
            return f"[{self._lo}, {self._hi}]"
        return f"({self._lo}, {self._hi})"

    def __repr__(self) -> str:
        """Return a string representation of the interval for developers."""
        return (
            f"{__class__.__name__}({self._lo!r}, {self._hi!r}, "
            f"{self._kind.name}, {self._semantics.name})"
        )


class Projection:
    """The range of one coordinate over an interval, with endpoint flags."""

    def __init__(
        self,
        low: Fraction,
        high: Fraction,
        *,
        low_closed: bool,
        high_closed: bool,
    ) -> None:
        """Initialise a new coordinate range."""
        self._low = low
        self._high = high
        self._low_closed = low_closed
        self._high_closed = high_closed

    @property
    def low(self) -> Fraction:
        """The infimum of the range."""
        return self._low

    @property
    def high(self) -> Fraction:
        """The supremum of the range."""
        return self._high

    @property
    def low_closed(self) -> bool:
        """Whether the infimum is attained."""
        return self._low_closed

    @property
    def high_closed(self) -> bool:
        """Whether the supremum is attained."""
        return self._high_closed

    def contains(self, value: Fraction) -> bool:
        """Return whether the value is in the range."""
        above = value > self._low or (self._low_closed and value == self._low)
        below = value < self._high or (self._high_closed and value == self._high)
        return above and below

    def within(self, low: Fraction, high: Fraction, *, closed: bool) -> bool:
        """Return whether the range lies inside [low, high] or (low, high)."""
        if closed:
            return self._low >= low and self._high <= high
        low_ok = self._low > low or (self._low == low and not self._low_closed)
        high_ok = self._high < high or (self._high == high and not self._high_closed)
        return low_ok and high_ok

    def all_at_most(self, bound: Fraction) -> bool:
        """Return whether every value in the range is ≤ bound."""
        return self._high <= bound

    def all_at_least(self, bound: Fraction) -> bool:
        """Return whether every value in the range is ≥ bound."""
        return self._low >= bound

    def none_at_most(self, bound: Fraction) -> bool:
        """Return whether no value in the range is ≤ bound."""
        return self._low > bound or (self._low == bound and not self._low_closed)

    def none_at_least(self, bound: Fraction) -> bool:
        """Return whether no value in the range is ≥ bound."""
        return self._high < bound or (self._high == bound and not self._high_closed)
