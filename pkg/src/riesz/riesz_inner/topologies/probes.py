"""Module for probing translation and scaling invariance of order-open sets."""

# ruff: noqa: TID252

import logging
from collections.abc import Sequence
from fractions import Fraction

from ..config import DEFAULT_CONFIG, SearchConfig
from ..core import Carrier, Json, RationalLike, Vec, encode_vec, format_rational, to_rational
from ..order_sets import Dilate, SetExpr, Translate
from ..status import Status
from .closure import is_order_open
from .exceptions import PreconditionError
from .verdict import Verdict

logger = logging.getLogger(__name__)


class ProbeEntry:
    """The order-openness verdict for one translate or dilate of a set."""

    def __init__(self, operation: str, parameter: Vec | Fraction, verdict: Verdict) -> None:
        """Initialise a new probe entry.

        Args:
            operation: "translate" or "dilate".
            parameter: The shift vector or the scaling factor.
            verdict: The order-openness verdict of the image.
        """
        self._operation = operation
        self._parameter = parameter
        self._verdict = verdict

    @property
    def operation(self) -> str:
        """Whether the entry is a translate or a dilate."""
        return self._operation

    @property
    def parameter(self) -> Vec | Fraction:
        """The shift vector or the scaling factor."""
        return self._parameter

    @property
    def verdict(self) -> Verdict:
        """The order-openness verdict of the image."""
        return self._verdict

    def to_json(self) -> Json:
        """Return the JSON form of the entry."""
        if isinstance(self._parameter, Vec):
            parameter: Json = encode_vec(self._parameter)
        else:
            parameter = format_rational(self._parameter)
        return {
            "operation": self._operation,
            "parameter": parameter,
            "verdict": self._verdict.to_json(),
        }


class ProbeReport:
    """The verdict matrix of a vector-topology probe."""

    def __init__(self, entries: Sequence[ProbeEntry]) -> None:
        """Initialise a new probe report."""
        self._entries = tuple(entries)

    @property
    def entries(self) -> tuple[ProbeEntry, ...]:
        """Translates first, then dilates, in argument order."""
        return self._entries

    @property
    def contradictions(self) -> list[ProbeEntry]:
        """Entries whose image is refuted order-open."""
        return [entry for entry in self._entries if entry.verdict.status == Status.REFUTED]

    @property
    def all_certified(self) -> bool:
        """Whether every image is certified order-open."""
        return all(entry.verdict.status == Status.CERTIFIED for entry in self._entries)

    def to_json(self) -> Json:
        """Return the JSON form of the report."""
        return {
            "entries": [entry.to_json() for entry in self._entries],
            "contradictions": len(self.contradictions),
        }


def vector_topology_probe(  # noqa: PLR0913
    expression: SetExpr,
    shifts: Sequence[Vec],
    scalars: Sequence[RationalLike],
    carrier: Carrier | None = None,
    config: SearchConfig = DEFAULT_CONFIG,
) -> ProbeReport:
    """Check order openness of every translate and dilate of an order-open set.

    Raises:
        PreconditionError: The set is not certified order open.
        ValueError: A scalar is zero.
    """
    base = is_order_open(expression, carrier, config)
    if base.status != Status.CERTIFIED:
        raise PreconditionError("vector_topology_probe", "the set is not certified order open")
    entries = [
        ProbeEntry("translate", shift, is_order_open(Translate(expression, shift), carrier, config))
        for shift in shifts
    ]
    for scalar in scalars:
        factor = to_rational(scalar)
        image = is_order_open(Dilate(expression, factor), carrier, config)
        entries.append(ProbeEntry("dilate", factor, image))
    report = ProbeReport(entries)
    if report.contradictions:
        logger.warning(
            "%d translate/dilate image(s) of %r are refuted order open.",
            len(report.contradictions),
            expression,
        )
    return report
