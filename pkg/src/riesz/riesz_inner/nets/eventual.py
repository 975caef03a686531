"""Module for deciding eventual membership of a family in a set."""

# ruff: noqa: TID252

from ..core import CarrierMismatchError, Json
from ..order_sets import SetExpr
from .family import Family, SpliceForm


class EventualVerdict:
    """Whether value(k) lies in a set for all large k.

    Either the family holds from an index on, or it fails for infinitely many
    indices, among them the witness index and every index after it.
    """

    def __init__(
        self,
        *,
        holds_from: int | None,
        witness: int | None,
        checked: tuple[int, ...],
    ) -> None:
        """Initialise a new eventual-membership verdict."""
        self._holds_from = holds_from
        self._witness = witness
        self._checked = checked

    @property
    def holds(self) -> bool:
        """Whether the family is eventually in the set."""
        return self._holds_from is not None

    @property
    def holds_from(self) -> int | None:
        """The least index from which every value lies in the set."""
        return self._holds_from

    @property
    def witness(self) -> int | None:
        """An index from which no value lies in the set."""
        return self._witness

    @property
    def checked(self) -> tuple[int, ...]:
        """The indices whose values were tested."""
        return self._checked

    def to_json(self) -> Json:
        """Return the JSON form of the verdict."""
        if self._holds_from is not None:
            return {"holds_from": self._holds_from}
        return {"fails": "infinitely-many", "witness": self._witness}

    def __repr__(self) -> str:
        """Return a string representation of the verdict for developers."""
        return (
            f"{__class__.__name__}(holds_from={self._holds_from}, "
            f"witness={self._witness})"
        )


def _breakpoints(family: Family, expression: SetExpr) -> list[int]:
    """Return indices between which membership of value(k) cannot change.

    Membership of value(k) only depends on how its coordinates compare with
    the critical values of the set, so it is constant between consecutive
    indices returned here and after the last one.
    """
    form = family.form
    start = family.start
    if isinstance(form, SpliceForm):
        # past both widths every value has the same pattern of coordinates
        last = max(form.width, expression.horizon()) + 1
        return list(range(start, max(start, last) + 1))
    points = {start}
    for position in form.positions(expression.horizon()):
        sequence = form.sequence(position)
        for bound in expression.critical_values(position):
            points.update(sequence.sign_changes(bound))
    return sorted(k for k in points if k >= start)


def eventually_in(family: Family, expression: SetExpr) -> EventualVerdict:
    """Decide whether value(k) is in the set for every sufficiently large k.

    Raises:
        CarrierMismatchError: The family and the set live in different carriers.
    """
    carrier = expression.carrier
    if carrier is not None and carrier != family.carrier:
        raise CarrierMismatchError(carrier, family.carrier)
    indices = _breakpoints(family, expression)
    inside = [expression.contains(family.value(k)) for k in indices]
    checked = tuple(indices)
    if not inside[-1]:
        return EventualVerdict(holds_from=None, witness=indices[-1], checked=checked)
    first = len(indices) - 1
    while first > 0 and inside[first - 1]:
        first -= 1
    return EventualVerdict(holds_from=indices[first], witness=None, checked=checked)
