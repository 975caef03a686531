"""Module for sequence families and their templates.

Every family reduces to one of two exact forms. A sequence form gives each
coordinate position its own scalar sequence, with one shared sequence for
all positions of the tail. A splice form takes the first k coordinates of
value(k) from a head element and the remaining ones from a rest element.
"""

# ruff: noqa: TID252

from abc import ABC, abstractmethod
from collections.abc import Callable, Sequence
from fractions import Fraction

from ..core import (
    TAIL_SEQ,
    Carrier,
    RationalLike,
    Vec,
    absolute,
    aligned_length,
    check_same_carrier,
    leq,
    ones,
    to_rational,
    zero,
)
from .exceptions import InvalidTemplateError
from .sequences import (
    ConstantSequence,
    CoordinateSequence,
    ExplicitSequence,
    GeometricSequence,
    HarmonicSequence,
    PrefixedSequence,
    clamp,
    deviation,
    from_index,
    running_max,
)


class SequenceForm:
    """A family given by one scalar sequence per coordinate position."""

    def __init__(
        self,
        carrier: Carrier,
        sequences: Sequence[CoordinateSequence],
        tail: CoordinateSequence | None,
    ) -> None:
        """Initialise a new sequence form.

        For TailSeq the tail sequence drives every position from
        `len(sequences)` on; FinDim forms have exactly one sequence per
        coordinate and no tail sequence.
        """
        self._carrier = carrier
        self._sequences = tuple(sequences)
        self._tail = tail

    @property
    def carrier(self) -> Carrier:
        """The carrier of the values."""
        return self._carrier

    @property
    def width(self) -> int:
        """The number of positions with their own sequence."""
        return len(self._sequences)

    @property
    def length(self) -> int:
        """The index beyond which every listed sequence is constant."""
        sequences = [*self._sequences, *([self._tail] if self._tail else [])]
        return max((sequence.length for sequence in sequences), default=0)

    def sequence(self, position: int | None) -> CoordinateSequence:
        """Return the sequence driving the position; None is the tail."""
        if position is not None and position < len(self._sequences):
            return self._sequences[position]
        if self._tail is None:
            msg = f"Position [{position}] has no sequence in [{self._carrier}]."
            raise IndexError(msg)
        return self._tail

    def positions(self, width: int = 0) -> list[int | None]:
        """Return the positions to inspect, padded to the width, then the tail."""
        if self._tail is None:
            return list(range(len(self._sequences)))
        return [*range(max(width, len(self._sequences))), None]

    def value(self, k: int) -> Vec:
        """Return the family value at index k."""
        coords = [sequence.value(k) for sequence in self._sequences]
        tail = self._tail.value(k) if self._tail is not None else 0
        return Vec(self._carrier, coords, tail)

    def limit(self) -> Vec:
        """Return the coordinatewise limit."""
        coords = [sequence.limit for sequence in self._sequences]
        tail = self._tail.limit if self._tail is not None else 0
        return Vec(self._carrier, coords, tail)


class SpliceForm:
    """A family whose value(k) agrees with head before position k and rest after."""

    def __init__(self, head: Vec, rest: Vec) -> None:
        """Initialise a new splice form.

        Raises:
            CarrierMismatchError: The head and rest live in different carriers.
        """
        check_same_carrier(head, rest)
        self._head = head
        self._rest = rest

    @property
    def carrier(self) -> Carrier:
        """The carrier of the values."""
        return self._head.carrier

    @property
    def head(self) -> Vec:
        """The element the values approach."""
        return self._head

    @property
    def rest(self) -> Vec:
        """The element the values start from."""
        return self._rest

    @property
    def width(self) -> int:
        """The number of positions beyond which head and rest are constant."""
        dimension = self._head.carrier.dimension
        if dimension is not None:
            return dimension
        return aligned_length(self._head, self._rest)

    def value(self, k: int) -> Vec:
        """Return the family value at index k."""
        carrier = self._head.carrier
        count = carrier.dimension if carrier.dimension is not None else max(self.width, k)
        coords = [
            self._head.coordinate(i) if i < k else self._rest.coordinate(i)
            for i in range(count)
        ]
        return Vec(carrier, coords, self._rest.tail)

    def limit(self) -> Vec:
        """Return the coordinatewise limit, which is the head."""
        return self._head


type FamilyForm = SequenceForm | SpliceForm


def _sequence_form(
    carrier: Carrier,
    width: int,
    factory: Callable[[int | None], CoordinateSequence],
) -> SequenceForm:
    if carrier.dimension is not None:
        return SequenceForm(carrier, [factory(i) for i in range(carrier.dimension)], None)
    return SequenceForm(carrier, [factory(i) for i in range(width)], factory(None))


def as_sequence_form(form: FamilyForm) -> SequenceForm | None:
    """Return the form with one scalar sequence per position.

    A splice form becomes a step at each position. None means a splice whose
    head and rest tails differ, which no sequence form can express.
    """
    if isinstance(form, SequenceForm):
        return form
    head, rest = form.head, form.rest
    if head.tail != rest.tail:
        return None

    def step(position: int | None) -> CoordinateSequence:
        if position is None:
            return ConstantSequence(rest.tail)
        before = [rest.coordinate(position)] * (position + 1)
        return ExplicitSequence([*before, head.coordinate(position)])

    return _sequence_form(form.carrier, form.width, step)


class Family(ABC):
    """An ℕ-indexed family of lattice elements given by a template."""

    template = ""

    def __init__(self, carrier: Carrier, start: int = 0) -> None:
        """Initialise the shared state of a family."""
        self._carrier = carrier
        self._start = start
        self._form: FamilyForm | None = None

    @property
    def carrier(self) -> Carrier:
        """The carrier of the values."""
        return self._carrier

    @property
    def start(self) -> int:
        """The first index of the sequence; value(k) exists for every k ≥ 0."""
        return self._start

    @property
    def form(self) -> FamilyForm:
        """The exact form the template reduces to."""
        if self._form is None:
            self._form = self._build_form()
        return self._form

    @abstractmethod
    def _build_form(self) -> FamilyForm: ...

    @abstractmethod
    def _key(self) -> tuple[object, ...]: ...

    def value(self, k: int) -> Vec:
        """Return the element at index k.

        Raises:
            ValueError: k is negative.
        """
        if k < 0:
            msg = f"Index [{k}] must be non-negative."
            raise ValueError(msg)
        return self.form.value(k)

    def horizon(self) -> int:
        """Return the index beyond which every position follows its closed form."""
        form = self.form
        if isinstance(form, SpliceForm):
            return form.width
        return form.length

    def __eq__(self, other: object) -> bool:
        """Return whether the objects are the same template with equal parameters."""
        if not isinstance(other, Family):
            return NotImplemented

        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self) -> int:
        """Return the hash of the family."""
        return hash((type(self).__name__, self._key()))


class Explicit(Family):
    """Finitely many listed values, after which the last one repeats."""

    template = "explicit"

    def __init__(self, values: Sequence[Vec]) -> None:
        """Initialise a new explicit family.

        Raises:
            InvalidTemplateError: No values were given.
            CarrierMismatchError: The values live in different carriers.
        """
        if not values:
            raise InvalidTemplateError(self.template, "at least one value is needed")
        for value in values[1:]:
            check_same_carrier(values[0], value)
        super().__init__(values[0].carrier)
        self._values = tuple(values)

    @property
    def values(self) -> tuple[Vec, ...]:
        """The listed values."""
        return self._values

    def _build_form(self) -> FamilyForm:
        values = self._values
        return _sequence_form(
            self._carrier,
            aligned_length(*values),
            lambda i: ExplicitSequence([value.coordinate(i) for value in values]),
        )

    def _key(self) -> tuple[object, ...]:
        return self._values

    def __repr__(self) -> str:
        """Return a string representation of the family for developers."""
        return f"{__class__.__name__}({list(self._values)!r})"


class Splice(Family):
    """value(k) takes its first k coordinates from head and the rest from rest.

    Indexed from 1, like the sequences it generalises.
    """

    template = "splice"

    def __init__(self, head: Vec, rest: Vec) -> None:
        """Initialise a new splice family.

        Raises:
            CarrierMismatchError: The head and rest live in different carriers.
        """
        check_same_carrier(head, rest)
        super().__init__(head.carrier, start=1)
        self._head = head
        self._rest = rest

    @property
    def head(self) -> Vec:
        """The element the values approach."""
        return self._head

    @property
    def rest(self) -> Vec:
        """The element the values start from."""
        return self._rest

    def _build_form(self) -> FamilyForm:
        return SpliceForm(self._head, self._rest)

    def _key(self) -> tuple[object, ...]:
        return (self._head, self._rest)

    def __repr__(self) -> str:
        """Return a string representation of the family for developers."""
        return f"{type(self).__name__}({self._head!r}, {self._rest!r})"


class Shift(Splice):
    """The sequences whose first k terms are 0 and the others 1."""

    template = "shift"

    def __init__(self) -> None:
        """Initialise the shift family of the tail-sequence carrier."""
        super().__init__(zero(TAIL_SEQ), ones(TAIL_SEQ))

    def __repr__(self) -> str:
        """Return a string representation of the family for developers."""
        return f"{__class__.__name__}()"


class ShiftUp(Splice):
    """The sequences whose first k terms are 1 and the others 0."""

    template = "shift-up"

    def __init__(self) -> None:
        """Initialise the shift-up family of the tail-sequence carrier."""
        super().__init__(ones(TAIL_SEQ), zero(TAIL_SEQ))

    def __repr__(self) -> str:
        """Return a string representation of the family for developers."""
        return f"{__class__.__name__}()"


def splice(head: Vec, rest: Vec) -> Splice:
    """Return the splice family, as Shift or ShiftUp when it is one of them."""
    if head.carrier.is_tail_seq:
        unit, null = ones(TAIL_SEQ), zero(TAIL_SEQ)
        if head == null and rest == unit:
            return Shift()
        if head == unit and rest == null:
            return ShiftUp()
    return Splice(head, rest)


class Scale(Family):
    """The family λᵏ·v with v ≥ 0 and 0 < λ < 1."""

    template = "scale"

    def __init__(self, v: Vec, ratio: RationalLike) -> None:
        """Initialise a new scale family.

        Raises:
            InvalidTemplateError: v is not ≥ 0 or λ is outside (0, 1).
        """
        self._ratio = to_rational(ratio)
        if not 0 < self._ratio < 1:
            raise InvalidTemplateError(self.template, f"ratio {self._ratio} is not in (0, 1)")
        if not leq(zero(v.carrier), v):
            raise InvalidTemplateError(self.template, f"vector {v} is not positive")
        super().__init__(v.carrier)
        self._v = v

    @property
    def v(self) -> Vec:
        """The element being scaled down."""
        return self._v

    @property
    def ratio(self) -> Fraction:
        """The ratio λ."""
        return self._ratio

    def _build_form(self) -> FamilyForm:
        return _sequence_form(
            self._carrier,
            len(self._v.prefix),
            lambda i: GeometricSequence(self._v.coordinate(i), self._ratio),
        )

    def value(self, k: int) -> Vec:
        """Return λᵏ·v."""
        if k < 0:
            return super().value(k)
        return self._v * self._ratio**k

    def _key(self) -> tuple[object, ...]:
        return (self._v, self._ratio)

    def __repr__(self) -> str:
        """Return a string representation of the family for developers."""
        return f"{__class__.__name__}({self._v!r}, '{self._ratio}')"


class CoordDecay(Family):
    """The family with coordinates c_i + p_i/(k + 1 + q), q ≥ 0."""

    template = "coord-decay"

    def __init__(self, c: Vec, p: Vec, q: RationalLike = 0) -> None:
        """Initialise a new coordinate-decay family.

        Raises:
            InvalidTemplateError: q is negative.
            CarrierMismatchError: c and p live in different carriers.
        """
        check_same_carrier(c, p)
        self._q = to_rational(q)
        if self._q < 0:
            raise InvalidTemplateError(self.template, f"offset {self._q} is negative")
        super().__init__(c.carrier)
        self._c = c
        self._p = p

    @property
    def c(self) -> Vec:
        """The limit c."""
        return self._c

    @property
    def p(self) -> Vec:
        """The numerators p."""
        return self._p

    @property
    def q(self) -> Fraction:
        """The index offset q."""
        return self._q

    def _build_form(self) -> FamilyForm:
        return _sequence_form(
            self._carrier,
            aligned_length(self._c, self._p),
            lambda i: HarmonicSequence(
                self._c.coordinate(i),
                self._p.coordinate(i),
                self._q,
            ),
        )

    def _key(self) -> tuple[object, ...]:
        return (self._c, self._p, self._q)

    def __repr__(self) -> str:
        """Return a string representation of the family for developers."""
        return f"{__class__.__name__}({self._c!r}, {self._p!r}, '{self._q}')"


class RunningSupMeet(Family):
    """The family (base(s) ∨ ... ∨ base(k)) ∧ cap, where s is the start of the base.

    The running supremum ranges over the indices from the start of the base.
    """

    template = "running-sup-meet"

    def __init__(self, base: Family, cap: Vec) -> None:
        """Initialise a new running-sup-meet family.

        Raises:
            CarrierMismatchError: The base and cap live in different carriers.
        """
        check_same_carrier(base.value(0), cap)
        super().__init__(cap.carrier, start=base.start)
        self._base = base
        self._cap = cap

    @property
    def base(self) -> Family:
        """The family whose running supremum is taken."""
        return self._base

    @property
    def cap(self) -> Vec:
        """The element every value is cut down to."""
        return self._cap

    def _build_form(self) -> FamilyForm:
        form = self._base.form
        cap = self._cap
        start = self._start
        if isinstance(form, SpliceForm):
            # positions before the start hold the head in every value from the start on
            joined = form.head | form.rest
            count = self._carrier.dimension or max(len(joined.prefix), start)
            head = Vec(
                self._carrier,
                [
                    form.head.coordinate(i) if i < start else joined.coordinate(i)
                    for i in range(count)
                ],
                joined.tail,
            )
            return SpliceForm(head & cap, form.rest & cap)
        return _sequence_form(
            self._carrier,
            max(form.width, len(cap.prefix)),
            lambda i: clamp(
                running_max(from_index(form.sequence(i), start)),
                cap.coordinate(i),
            ),
        )

    def _key(self) -> tuple[object, ...]:
        return (self._base, self._cap)

    def __repr__(self) -> str:
        """Return a string representation of the family for developers."""
        return f"{__class__.__name__}({self._base!r}, {self._cap!r})"


class Deviation(Family):
    """The family sup_{j ≥ k} |base(j) − x|, the generic dominating family."""

    template = "deviation"

    def __init__(self, base: Family, x: Vec) -> None:
        """Initialise a new deviation family.

        Raises:
            CarrierMismatchError: The base and x live in different carriers.
        """
        check_same_carrier(base.value(0), x)
        super().__init__(x.carrier, start=base.start)
        self._base = base
        self._x = x

    @property
    def base(self) -> Family:
        """The family whose deviation is measured."""
        return self._base

    @property
    def x(self) -> Vec:
        """The element deviations are measured from."""
        return self._x

    def _build_form(self) -> FamilyForm:
        form = self._base.form
        x = self._x
        if isinstance(form, SpliceForm):
            near = absolute(form.head - x)
            return SpliceForm(near, near | absolute(form.rest - x))
        return _sequence_form(
            self._carrier,
            max(form.width, len(x.prefix)),
            lambda i: deviation(form.sequence(i), x.coordinate(i)),
        )

    def _key(self) -> tuple[object, ...]:
        return (self._base, self._x)

    def __repr__(self) -> str:
        """Return a string representation of the family for developers."""
        return f"{__class__.__name__}({self._base!r}, {self._x!r})"


class Prefixed(Family):
    """The listed values for the first indices, then the values of another family."""

    template = "prefixed"

    def __init__(self, values: Sequence[Vec], rest: Family) -> None:
        """Initialise a new prefixed family.

        Raises:
            InvalidTemplateError: The rest is not coordinatewise monotone, or
                is a splice whose head and rest tails differ.
            CarrierMismatchError: The values and the rest live in different
                carriers.
        """
        for item in values:
            check_same_carrier(item, rest.value(0))
        super().__init__(rest.carrier)
        self._values = tuple(values)
        self._rest = rest
        try:
            _ = self.form
        except ValueError as error:
            raise InvalidTemplateError(self.template, str(error).rstrip(".")) from error

    @property
    def values(self) -> tuple[Vec, ...]:
        """The listed values."""
        return self._values

    @property
    def rest(self) -> Family:
        """The family followed past the listed values."""
        return self._rest

    def _build_form(self) -> FamilyForm:
        values = self._values
        rest = as_sequence_form(self._rest.form)
        if rest is None:
            msg = f"Family [{self._rest!r}] changes its tail, so it has no coordinatewise form."
            raise ValueError(msg)
        width = max(rest.width, aligned_length(*values) if values else 0)
        return _sequence_form(
            self._carrier,
            width,
            lambda i: PrefixedSequence(
                [value.coordinate(i) for value in values],
                rest.sequence(i),
            ),
        )

    def _key(self) -> tuple[object, ...]:
        return (self._values, self._rest)

    def __repr__(self) -> str:
        """Return a string representation of the family for developers."""
        return f"{__class__.__name__}({list(self._values)!r}, {self._rest!r})"


def value(family: Family, k: int) -> Vec:
    """Return the element of the family at index k.

    Raises:
        ValueError: k is negative.
    """
    return family.value(k)
