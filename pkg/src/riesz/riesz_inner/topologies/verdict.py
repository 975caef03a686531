"""Module for closure verdicts and their replayable evidence."""

# ruff: noqa: TID252

from collections.abc import Mapping, Sequence

from ..core import Json, Vec, encode_vec
from ..nets import (
    Direction,
    Family,
    Monotonicity,
    direction_name,
    encode_family,
    eventually_in,
    monotonicity,
)
from ..order_sets import SetExpr
from ..status import Status, status_name


class ClosureWitness:
    """A family inside a set from some index on whose order limit lies outside.

    Quasi-order closure witnesses are monotone; order closure witnesses only
    need to converge, which every family does to its coordinatewise limit.
    """

    def __init__(
        self,
        family: Family,
        evidence: Monotonicity,
        limit: Vec,
        in_set_from: int,
        *,
        monotone_required: bool,
    ) -> None:
        """Initialise a new closure witness."""
        self._family = family
        self._evidence = evidence
        self._limit = limit
        self._in_set_from = in_set_from
        self._monotone_required = monotone_required

    @property
    def family(self) -> Family:
        """The witnessing family."""
        return self._family

    @property
    def direction(self) -> Direction:
        """The monotonicity direction of the family."""
        return self._evidence.direction

    @property
    def evidence(self) -> Monotonicity:
        """The monotonicity verdict of the family."""
        return self._evidence

    @property
    def limit(self) -> Vec:
        """The order limit of the family."""
        return self._limit

    @property
    def in_set_from(self) -> int:
        """The index from which every value lies in the set."""
        return self._in_set_from

    @property
    def limit_outside(self) -> bool:
        """Whether the limit lies outside the set (always for a stored witness)."""
        return True

    @property
    def monotone_required(self) -> bool:
        """Whether the witness refutes quasi-order closure, which needs monotonicity."""
        return self._monotone_required

    def replay(self, expression: SetExpr) -> bool:
        """Return whether the witness still refutes closure of the set.

        Only the stored family and limit are used: monotonicity, the limit,
        eventual membership and exclusion of the limit are re-decided.
        """
        evidence = monotonicity(self._family)
        if self._monotone_required and evidence.direction == Direction.NEITHER:
            return False
        if self._family.form.limit() != self._limit:
            return False
        verdict = eventually_in(self._family, expression)
        if verdict.holds_from is None or verdict.holds_from > self._in_set_from:
            return False
        return not expression.contains(self._limit)

    def to_json(self) -> Json:
        """Return the JSON form of the witness."""
        return {
            "family": encode_family(self._family),
            "direction": direction_name(self.direction),
            "monotonicity": self._evidence.to_json(),
            "limit": encode_vec(self._limit),
            "in_set_from": self._in_set_from,
            "limit_outside": self.limit_outside,
        }

    def __repr__(self) -> str:
        """Return a string representation of the witness for developers."""
        return (
            f"{__class__.__name__}({self._family!r}, {self.direction.name}, "
            f"{self._limit!r}, in_set_from={self._in_set_from})"
        )


class SearchReport:
    """Summary of an unsuccessful witness search."""

    def __init__(
        self,
        *,
        candidates: int,
        templates: Mapping[str, int],
        grid: Json,
        note: str | None = None,
    ) -> None:
        """Initialise a new search report."""
        self._candidates = candidates
        self._templates = dict(templates)
        self._grid = grid
        self._note = note

    @property
    def candidates(self) -> int:
        """The number of families tried."""
        return self._candidates

    @property
    def templates(self) -> dict[str, int]:
        """The number of families tried per template."""
        return dict(self._templates)

    @property
    def note(self) -> str | None:
        """Why the search was limited, if it was."""
        return self._note

    def to_json(self) -> Json:
        """Return the JSON form of the report."""
        data: dict[str, Json] = {
            "candidates": self._candidates,
            "templates": dict(sorted(self._templates.items())),
            "grid": self._grid,
        }
        if self._note is not None:
            data["note"] = self._note
        return data


class Verdict:
    """Three-valued outcome of a closure or openness check."""

    def __init__(
        self,
        status: Status,
        *,
        rule_trace: Sequence[str] = (),
        witness: ClosureWitness | None = None,
        search_report: SearchReport | None = None,
    ) -> None:
        """Initialise a new verdict."""
        self._status = status
        self._rule_trace = tuple(rule_trace)
        self._witness = witness
        self._search_report = search_report

    @classmethod
    def certified(cls, rule_trace: Sequence[str]) -> "Verdict":
        """Return a verdict certified by the structural rules in the trace."""
        return cls(Status.CERTIFIED, rule_trace=rule_trace)

    @classmethod
    def refuted(cls, witness: ClosureWitness) -> "Verdict":
        """Return a verdict refuted by the witness."""
        return cls(Status.REFUTED, witness=witness)

    @classmethod
    def unknown(cls, search_report: SearchReport) -> "Verdict":
        """Return an inconclusive verdict."""
        return cls(Status.UNKNOWN, search_report=search_report)

    @property
    def status(self) -> Status:
        """Whether the property was certified, refuted or left open."""
        return self._status

    @property
    def rule_trace(self) -> tuple[str, ...]:
        """The structural rules behind a certification, outermost first."""
        return self._rule_trace

    @property
    def witness(self) -> ClosureWitness | None:
        """The witness behind a refutation."""
        return self._witness

    @property
    def search_report(self) -> SearchReport | None:
        """The summary behind an inconclusive verdict."""
        return self._search_report

    def to_json(self) -> Json:
        """Return the JSON form of the verdict."""
        data: dict[str, Json] = {"status": status_name(self._status)}
        if self._status == Status.CERTIFIED:
            data["rule_trace"] = list(self._rule_trace)
        if self._witness is not None:
            data["witness"] = self._witness.to_json()
        if self._search_report is not None:
            data["search_report"] = self._search_report.to_json()
        return data

    def __repr__(self) -> str:
        """Return a string representation of the verdict for developers."""
        return (
            f"{__class__.__name__}({self._status.name}, "
            f"rule_trace={self._rule_trace!r}, witness={self._witness!r})"
        )
