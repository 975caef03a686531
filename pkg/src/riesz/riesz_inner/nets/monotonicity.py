"""Module for deciding monotonicity and order limits of families."""

# ruff: noqa: TID252

import itertools
from enum import IntEnum

from ..core import Json, Vec, leq
from .exceptions import NonMonotoneFamilyError
from .family import Family, SequenceForm, SpliceForm


class Direction(IntEnum):
    """Monotonicity direction of a family."""

    INCREASING = 1
    DECREASING = 2
    NEITHER = 3


_DIRECTION_NAMES = {
    Direction.INCREASING: "increasing",
    Direction.DECREASING: "decreasing",
    Direction.NEITHER: "neither",
}


def direction_name(direction: Direction) -> str:
    """Return the serialised name of the direction."""
    return _DIRECTION_NAMES[direction]


class Monotonicity:
    """Monotonicity of a family together with its evidence.

    `rise_at` is the least index k ≥ start with value(k + 1) ≰ value(k) and
    `fall_at` the least one with value(k + 1) ≱ value(k). A family with
    neither is constant and reported as decreasing.
    """

    def __init__(self, *, rule: str, rise_at: int | None, fall_at: int | None) -> None:
        """Initialise a new monotonicity verdict."""
        self._rule = rule
        self._rise_at = rise_at
        self._fall_at = fall_at

    @property
    def direction(self) -> Direction:
        """The direction of the family."""
        if self._rise_at is None:
            return Direction.DECREASING
        if self._fall_at is None:
            return Direction.INCREASING
        return Direction.NEITHER

    @property
    def constant(self) -> bool:
        """Whether the family is both increasing and decreasing."""
        return self._rise_at is None and self._fall_at is None

    @property
    def rule(self) -> str:
        """The tail rule the verdict was derived from."""
        return self._rule

    @property
    def rise_at(self) -> int | None:
        """The first index where the family fails to decrease."""
        return self._rise_at

    @property
    def fall_at(self) -> int | None:
        """The first index where the family fails to increase."""
        return self._fall_at

    def to_json(self) -> Json:
        """Return the JSON form of the verdict."""
        return {
            "direction": direction_name(self.direction),
            "rule": self._rule,
            "rise_at": self._rise_at,
            "fall_at": self._fall_at,
        }

    def __repr__(self) -> str:
        """Return a string representation of the verdict for developers."""
        return (
            f"{__class__.__name__}({self.direction.name}, rise_at={self._rise_at}, "
            f"fall_at={self._fall_at})"
        )


def _first(indices: list[int | None]) -> int | None:
    found = [index for index in indices if index is not None]
    return min(found, default=None)


def _splice_monotonicity(family: Family, form: SpliceForm) -> Monotonicity:
    # value(k + 1) and value(k) differ only at position k: head there, rest before
    start = family.start
    head, rest = form.head, form.rest
    if form.carrier.dimension is not None:
        positions = range(start, form.carrier.dimension)
    else:
        positions = range(start, max(start, form.width) + 1)
    pairs = [(i, head.coordinate(i), rest.coordinate(i)) for i in positions]
    return Monotonicity(
        rule="splice: head against rest at every position from the start",
        rise_at=next((i for i, h, r in pairs if h > r), None),
        fall_at=next((i for i, h, r in pairs if h < r), None),
    )


def _sequence_monotonicity(form: SequenceForm) -> Monotonicity:
    sequences = [form.sequence(position) for position in form.positions()]
    return Monotonicity(
        rule="coordinatewise: closed-form direction of every coordinate sequence",
        rise_at=_first([sequence.first_rise() for sequence in sequences]),
        fall_at=_first([sequence.first_fall() for sequence in sequences]),
    )


def monotonicity(family: Family) -> Monotonicity:
    """Decide whether the family is increasing, decreasing or neither from its start."""
    form = family.form
    if isinstance(form, SpliceForm):
        return _splice_monotonicity(family, form)
    return _sequence_monotonicity(form)


def scan_monotonicity(family: Family, horizon: int) -> Monotonicity:
    """Return the monotonicity seen by comparing consecutive values up to the horizon."""
    values = [family.value(k) for k in range(family.start, family.start + horizon + 1)]
    steps = list(enumerate(itertools.pairwise(values), start=family.start))
    return Monotonicity(
        rule=f"scan: consecutive values up to index {family.start + horizon}",
        rise_at=next((k for k, (a, b) in steps if not leq(b, a)), None),
        fall_at=next((k for k, (a, b) in steps if not leq(a, b)), None),
    )


def order_limit(family: Family) -> Vec:
    """Return the supremum or infimum of a monotone family.

    Raises:
        NonMonotoneFamilyError: The family is neither increasing nor decreasing.
    """
    if monotonicity(family).direction == Direction.NEITHER:
        raise NonMonotoneFamilyError(family)
    return family.form.limit()
