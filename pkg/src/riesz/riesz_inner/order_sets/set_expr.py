"""Module for the closed grammar of subsets of a carrier.

Every node answers membership exactly and reports, per coordinate position,
the rationals a coordinate must be compared against to decide membership.
That finite information is what makes eventual membership of the sequence
families decidable.
"""

# ruff: noqa: TID252

from abc import ABC, abstractmethod
from collections.abc import Iterable, Iterator, Sequence
from enum import IntEnum
from fractions import Fraction

from ..core import (
    Carrier,
    CarrierMismatchError,
    PositionError,
    RationalLike,
    Vec,
    absolute,
    check_same_carrier,
    to_rational,
)
from .exceptions import EmptyGeneratorsError
from .interval import Interval
from .structure import band_member, ideal_member, solid_hull_member


class Relation(IntEnum):
    """Direction of a coordinate half-space."""

    AT_MOST = 1
    AT_LEAST = 2


def _common_carrier(carriers: Iterable[Carrier | None]) -> Carrier | None:
    found: Carrier | None = None
    for carrier in carriers:
        if carrier is None:
            continue
        if found is None:
            found = carrier
        elif carrier != found:
            raise CarrierMismatchError(found, carrier)
    return found


class SetExpr(ABC):
    """A subset of a carrier described by the set grammar."""

    @property
    @abstractmethod
    def carrier(self) -> Carrier | None:
        """The carrier of the embedded elements, None when none are embedded."""

    @abstractmethod
    def _contains(self, z: Vec) -> bool: ...

    @abstractmethod
    def children(self) -> tuple["SetExpr", ...]:
        """The direct sub-expressions."""

    @abstractmethod
    def own_vectors(self) -> tuple[Vec, ...]:
        """The elements embedded directly in this node."""

    @abstractmethod
    def critical_values(self, position: int | None) -> frozenset[Fraction]:
        """Return the comparison values for the coordinate at the position.

        Membership of z depends only on how each relevant coordinate of z
        compares with these values. None addresses the tail. The result may
        be a superset of what is strictly needed.
        """

    @abstractmethod
    def _key(self) -> tuple[object, ...]: ...

    def contains(self, z: Vec) -> bool:
        """Return whether z is in the set.

        Raises:
            CarrierMismatchError: z lives in a different carrier.
        """
        carrier = self.carrier
        if carrier is not None and z.carrier != carrier:
            raise CarrierMismatchError(carrier, z.carrier)
        return self._contains(z)

    def vectors(self) -> Iterator[Vec]:
        """Yield every element embedded anywhere in the expression."""
        yield from self.own_vectors()
        for child in self.children():
            yield from child.vectors()

    def horizon(self) -> int:
        """Return a position count beyond which every embedded element is constant."""
        own = max((len(vector.prefix) for vector in self.own_vectors()), default=0)
        return max([own, *(child.horizon() for child in self.children())])

    def __eq__(self, other: object) -> bool:
        """Return whether the objects are structurally equal expressions."""
        if not isinstance(other, SetExpr):
            return NotImplemented

        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self) -> int:
        """Return the hash of the expression."""
        return hash((type(self).__name__, self._key()))


class _Leaf(SetExpr):
    def children(self) -> tuple[SetExpr, ...]:
        return ()


class IntervalSet(_Leaf):
    """The points of an order interval."""

    def __init__(self, interval: Interval) -> None:
        """Initialise a new interval set."""
        self._interval = interval

    @property
    def interval(self) -> Interval:
        """The interval."""
        return self._interval

    @property
    def carrier(self) -> Carrier | None:
        """The carrier of the interval endpoints."""
        return self._interval.lo.carrier

    def _contains(self, z: Vec) -> bool:
        return self._interval.contains(z)

    def own_vectors(self) -> tuple[Vec, ...]:
        """The interval endpoints."""
        return (self._interval.lo, self._interval.hi)

    def critical_values(self, position: int | None) -> frozenset[Fraction]:
        """The endpoint coordinates at the position."""
        return frozenset(
            {
                self._interval.lo.coordinate(position),
                self._interval.hi.coordinate(position),
            },
        )

    def _key(self) -> tuple[object, ...]:
        return (self._interval,)

    def __repr__(self) -> str:
        """Return a string representation of the set for developers."""
        return f"{__class__.__name__}({self._interval!r})"


class _Generated(_Leaf):
    _construction = ""

    def __init__(self, generators: Sequence[Vec]) -> None:
        if not generators:
            raise EmptyGeneratorsError(self._construction)
        for generator in generators[1:]:
            check_same_carrier(generators[0], generator)
        self._generators = tuple(generators)

    @property
    def generators(self) -> tuple[Vec, ...]:
        """The generating elements."""
        return self._generators

    @property
    def carrier(self) -> Carrier | None:
        """The carrier of the generators."""
        return self._generators[0].carrier

    def own_vectors(self) -> tuple[Vec, ...]:
        """The generators."""
        return self._generators

    def critical_values(self, position: int | None) -> frozenset[Fraction]:
        """Zero: membership only asks where coordinates vanish."""
        del position
        return frozenset({Fraction(0)})

    def _key(self) -> tuple[object, ...]:
        return self._generators

    def __repr__(self) -> str:
        """Return a string representation of the set for developers."""
        return f"{type(self).__name__}({list(self._generators)!r})"


class Ideal(_Generated):
    """The order ideal generated by finitely many elements."""

    _construction = "ideal"

    def _contains(self, z: Vec) -> bool:
        return ideal_member(self._generators, z).is_member


class Band(_Generated):
    """The band generated by finitely many elements."""

    _construction = "band"

    def _contains(self, z: Vec) -> bool:
        return band_member(self._generators, z)


class SolidHull(_Generated):
    """The solid hull of finitely many elements."""

    _construction = "solid hull"

    def _contains(self, z: Vec) -> bool:
        return solid_hull_member(self._generators, z)

    def critical_values(self, position: int | None) -> frozenset[Fraction]:
        """Zero and ±|g| at the position for every generator g."""
        values = {Fraction(0)}
        for generator in self._generators:
            bound = absolute(generator).coordinate(position)
            values.update((bound, -bound))
        return frozenset(values)


class CoordHalfSpace(_Leaf):
    """The half-space {z : z_index ≤ bound} or {z : z_index ≥ bound}.

    An index of None constrains the tail of a TailSeq element.
    """

    def __init__(
        self,
        index: int | None,
        relation: Relation,
        bound: RationalLike,
    ) -> None:
        """Initialise a new coordinate half-space.

        Raises:
            PositionError: The index is negative.
        """
        if index is not None and index < 0:
            raise PositionError(index, Carrier.tail_seq())
        self._index = index
        self._relation = relation
        self._bound = to_rational(bound)

    @property
    def index(self) -> int | None:
        """The constrained position (None is the tail)."""
        return self._index

    @property
    def relation(self) -> Relation:
        """Whether the coordinate is bounded above or below."""
        return self._relation

    @property
    def bound(self) -> Fraction:
        """The bound on the coordinate."""
        return self._bound

    @property
    def carrier(self) -> Carrier | None:
        """No carrier is fixed by a half-space."""
        return None

    def _contains(self, z: Vec) -> bool:
        value = z.coordinate(self._index)
        if self._relation == Relation.AT_MOST:
            return value <= self._bound
        return value >= self._bound

    def own_vectors(self) -> tuple[Vec, ...]:
        """No embedded elements."""
        return ()

    def horizon(self) -> int:
        """One past the constrained index."""
        return 0 if self._index is None else self._index + 1

    def critical_values(self, position: int | None) -> frozenset[Fraction]:
        """The bound."""
        del position
        return frozenset({self._bound})

    def _key(self) -> tuple[object, ...]:
        return (self._index, self._relation, self._bound)

    def __repr__(self) -> str:
        """Return a string representation of the set for developers."""
        return (
            f"{__class__.__name__}({self._index!r}, {self._relation.name}, "
            f"'{self._bound}')"
        )


class TailZero(_Leaf):
    """The TailSeq elements whose tail is 0 (finitely supported sequences)."""

    @property
    def carrier(self) -> Carrier | None:
        """Always the tail-sequence carrier."""
        return Carrier.tail_seq()

    def _contains(self, z: Vec) -> bool:
        return z.tail == 0

    def own_vectors(self) -> tuple[Vec, ...]:
        """No embedded elements."""
        return ()

    def critical_values(self, position: int | None) -> frozenset[Fraction]:
        """Zero."""
        del position
        return frozenset({Fraction(0)})

    def _key(self) -> tuple[object, ...]:
        return ()

    def __repr__(self) -> str:
        """Return a string representation of the set for developers."""
        return f"{__class__.__name__}()"


class Complement(SetExpr):
    """The points outside a set."""

    def __init__(self, inner: SetExpr) -> None:
        """Initialise a new complement."""
        self._inner = inner

    @property
    def inner(self) -> SetExpr:
        """The complemented set."""
        return self._inner

    @property
    def carrier(self) -> Carrier | None:
        """The carrier of the complemented set."""
        return self._inner.carrier

    def _contains(self, z: Vec) -> bool:
        return not self._inner.contains(z)

    def children(self) -> tuple[SetExpr, ...]:
        """The complemented set."""
        return (self._inner,)

    def own_vectors(self) -> tuple[Vec, ...]:
        """No embedded elements."""
        return ()

    def critical_values(self, position: int | None) -> frozenset[Fraction]:
        """The comparison values of the complemented set."""
        return self._inner.critical_values(position)

    def _key(self) -> tuple[object, ...]:
        return (self._inner,)

    def __repr__(self) -> str:
        """Return a string representation of the set for developers."""
        return f"{__class__.__name__}({self._inner!r})"


class _Combination(SetExpr):
    def __init__(self, parts: Sequence[SetExpr]) -> None:
        self._parts = tuple(parts)
        self._carrier = _common_carrier(part.carrier for part in self._parts)

    @property
    def parts(self) -> tuple[SetExpr, ...]:
        """The combined sets."""
        return self._parts

    @property
    def carrier(self) -> Carrier | None:
        """The carrier shared by the parts."""
        return self._carrier

    def children(self) -> tuple[SetExpr, ...]:
        """The combined sets."""
        return self._parts

    def own_vectors(self) -> tuple[Vec, ...]:
        """No embedded elements."""
        return ()

    def critical_values(self, position: int | None) -> frozenset[Fraction]:
        """The union of the comparison values of the parts."""
        return frozenset().union(
            *(part.critical_values(position) for part in self._parts),
        )

    def _key(self) -> tuple[object, ...]:
        return self._parts

    def __repr__(self) -> str:
        """Return a string representation of the set for developers."""
        return f"{type(self).__name__}({list(self._parts)!r})"


class Union(_Combination):
    """The points in at least one part; the empty union is the empty set."""

    def _contains(self, z: Vec) -> bool:
        return any(part.contains(z) for part in self._parts)


class Intersection(_Combination):
    """The points in every part; the empty intersection is the whole space."""

    def _contains(self, z: Vec) -> bool:
        return all(part.contains(z) for part in self._parts)


class Translate(SetExpr):
    """The image S + a of a set under translation."""

    def __init__(self, inner: SetExpr, shift: Vec) -> None:
        """Initialise a new translated set.

        Raises:
            CarrierMismatchError: The shift and the set live in different carriers.
        """
        self._carrier = _common_carrier([inner.carrier, shift.carrier])
        self._inner = inner
        self._shift = shift

    @property
    def inner(self) -> SetExpr:
        """The translated set."""
        return self._inner

    @property
    def shift(self) -> Vec:
        """The translation vector a."""
        return self._shift

    @property
    def carrier(self) -> Carrier | None:
        """The carrier of the shift."""
        return self._carrier

    def _contains(self, z: Vec) -> bool:
        return self._inner.contains(z - self._shift)

    def children(self) -> tuple[SetExpr, ...]:
        """The translated set."""
        return (self._inner,)

    def own_vectors(self) -> tuple[Vec, ...]:
        """The shift."""
        return (self._shift,)

    def critical_values(self, position: int | None) -> frozenset[Fraction]:
        """The inner comparison values moved by the shift coordinate."""
        offset = self._shift.coordinate(position)
        return frozenset(
            value + offset for value in self._inner.critical_values(position)
        )

    def _key(self) -> tuple[object, ...]:
        return (self._inner, self._shift)

    def __repr__(self) -> str:
        """Return a string representation of the set for developers."""
        return f"{__class__.__name__}({self._inner!r}, {self._shift!r})"


class Dilate(SetExpr):
    """The image t·S of a set under a non-zero scaling."""

    def __init__(self, inner: SetExpr, factor: RationalLike) -> None:
        """Initialise a new dilated set.

        Raises:
            ValueError: The factor is zero.
        """
        self._factor = to_rational(factor)
        if self._factor == 0:
            msg = "Dilation factor must be non-zero."
            raise ValueError(msg)
        self._inner = inner

    @property
    def inner(self) -> SetExpr:
        """The dilated set."""
        return self._inner

    @property
    def factor(self) -> Fraction:
        """The non-zero scaling t."""
        return self._factor

    @property
    def carrier(self) -> Carrier | None:
        """The carrier of the dilated set."""
        return self._inner.carrier

    def _contains(self, z: Vec) -> bool:
        return self._inner.contains(z / self._factor)

    def children(self) -> tuple[SetExpr, ...]:
        """The dilated set."""
        return (self._inner,)

    def own_vectors(self) -> tuple[Vec, ...]:
        """No embedded elements."""
        return ()

    def critical_values(self, position: int | None) -> frozenset[Fraction]:
        """The inner comparison values scaled by the factor."""
        return frozenset(
            value * self._factor for value in self._inner.critical_values(position)
        )

    def _key(self) -> tuple[object, ...]:
        return (self._inner, self._factor)

    def __repr__(self) -> str:
        """Return a string representation of the set for developers."""
        return f"{__class__.__name__}({self._inner!r}, '{self._factor}')"


def full_space() -> SetExpr:
    """Return the whole carrier (the empty intersection)."""
    return Intersection([])


def empty_set() -> SetExpr:
    """Return the empty set (the empty union)."""
    return Union([])


def member(expression: SetExpr, z: Vec) -> bool:
    """Return whether z is in the set.

    Raises:
        CarrierMismatchError: z lives in a different carrier.
    """
    return expression.contains(z)


def push_complement(expression: SetExpr) -> SetExpr:
    """Return an equivalent expression whose complements wrap only leaves.

    Complements are moved inwards by De Morgan's laws, cancelled in pairs, and
    commuted with translations and dilations, which are bijections.
    """
    if isinstance(expression, Complement):
        return _negate(expression.inner)
    if isinstance(expression, Union):
        return Union([push_complement(part) for part in expression.parts])
    if isinstance(expression, Intersection):
        return Intersection([push_complement(part) for part in expression.parts])
    if isinstance(expression, Translate):
        return Translate(push_complement(expression.inner), expression.shift)
    if isinstance(expression, Dilate):
        return Dilate(push_complement(expression.inner), expression.factor)
    return expression


def _negate(expression: SetExpr) -> SetExpr:
    if isinstance(expression, Complement):
        return push_complement(expression.inner)
    if isinstance(expression, Union):
        return Intersection([_negate(part) for part in expression.parts])
    if isinstance(expression, Intersection):
        return Union([_negate(part) for part in expression.parts])
    if isinstance(expression, Translate):
        return Translate(_negate(expression.inner), expression.shift)
    if isinstance(expression, Dilate):
        return Dilate(_negate(expression.inner), expression.factor)
    return Complement(expression)


def resolve_carrier(expression: SetExpr, carrier: Carrier | None) -> Carrier:
    """Return the carrier of the expression, falling back to the given one.

    Raises:
        CarrierMismatchError: The given carrier contradicts the expression.
        ValueError: Neither the expression nor the caller fixes a carrier.
    """
    own = expression.carrier
    if own is None:
        if carrier is None:
            msg = "The expression embeds no elements, so a carrier must be given."
            raise ValueError(msg)
        return carrier
    if carrier is not None and carrier != own:
        raise CarrierMismatchError(carrier, own)
    return own
