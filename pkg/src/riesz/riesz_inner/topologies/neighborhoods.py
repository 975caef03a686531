"""Module for catalogs of open intervals around a point and τ_e convergence."""

# ruff: noqa: TID252

from collections.abc import Sequence
from fractions import Fraction

from ..core import Json, Vec, encode_vec, ones, unit_vector
from ..nets import EventualVerdict, Family, eventually_in
from ..order_sets import (
    DEFAULT_SEMANTICS,
    Interval,
    IntervalSemantics,
    IntervalSet,
    InvalidIntervalError,
)
from .exceptions import CenterMismatchError


def encode_interval(interval: Interval) -> Json:
    """Return the JSON form of an interval."""
    return {
        "lo": encode_vec(interval.lo),
        "hi": encode_vec(interval.hi),
        "kind": "open" if interval.is_open else "closed",
    }


class NeighborhoodCatalog:
    """Open intervals containing a centre.

    The first `chain_length` intervals form a chain decreasing under
    inclusion.
    """

    def __init__(
        self,
        center: Vec,
        intervals: Sequence[Interval],
        chain_length: int = 0,
    ) -> None:
        """Initialise a new neighbourhood catalog.

        Raises:
            ValueError: An interval is not open or misses the centre, or the
                chain is not decreasing.
        """
        for interval in intervals:
            if not interval.is_open or not interval.contains(center):
                msg = f"Interval [{interval}] is not an open neighbourhood of [{center}]."
                raise ValueError(msg)
        chain = intervals[:chain_length]
        for outer, inner in zip(chain, chain[1:], strict=False):
            if not (outer.lo <= inner.lo and inner.hi <= outer.hi) or outer == inner:
                msg = f"Intervals [{outer}] and [{inner}] do not form a decreasing chain."
                raise ValueError(msg)
        self._center = center
        self._intervals = tuple(intervals)
        self._chain_length = chain_length

    @property
    def center(self) -> Vec:
        """The common point of the intervals."""
        return self._center

    @property
    def intervals(self) -> tuple[Interval, ...]:
        """The intervals, chain first."""
        return self._intervals

    @property
    def chain_length(self) -> int:
        """The number of leading intervals that form a decreasing chain."""
        return self._chain_length

    @property
    def chain(self) -> tuple[Interval, ...]:
        """The chain-marked intervals."""
        return self._intervals[: self._chain_length]

    def to_json(self) -> Json:
        """Return the JSON form of the catalog."""
        return {
            "center": encode_vec(self._center),
            "intervals": [encode_interval(interval) for interval in self._intervals],
            "chain_length": self._chain_length,
        }


def neighborhood_catalog(
    x: Vec,
    depth: int,
    semantics: IntervalSemantics = DEFAULT_SEMANTICS,
) -> NeighborhoodCatalog:
    """Return the standard catalog of open intervals around x.

    The chain (x − e/m, x + e/m) for m = 1..depth comes first, followed by
    the perturbations (x − δ·e_j, x + δ·e_j) for the first `depth`
    positions j and δ in {1, 1/2} that are non-empty under the semantics.

    Raises:
        ValueError: depth is less than 1.
    """
    if depth < 1:
        msg = f"Catalog depth [{depth}] must be at least 1."
        raise ValueError(msg)
    unit = ones(x.carrier)
    chain = [
        Interval.open(x - unit / m, x + unit / m, semantics) for m in range(1, depth + 1)
    ]
    extra: list[Interval] = []
    positions = min(depth, x.carrier.dimension or depth)
    for j in range(positions):
        direction = unit_vector(x.carrier, j)
        for delta in (Fraction(1), Fraction(1, 2)):
            try:
                interval = Interval.open(x - direction * delta, x + direction * delta, semantics)
            except InvalidIntervalError:
                continue
            if interval not in chain and interval not in extra:
                extra.append(interval)
    return NeighborhoodCatalog(x, [*chain, *extra], chain_length=len(chain))


class TauEReport:
    """Eventual membership of a family in every interval of a catalog.

    One failing interval refutes τ_e convergence; passing every interval is
    only consistent with convergence over the catalog.
    """

    def __init__(self, entries: Sequence[tuple[Interval, EventualVerdict]]) -> None:
        """Initialise a new τ_e convergence report."""
        self._entries = tuple(entries)

    @property
    def entries(self) -> tuple[tuple[Interval, EventualVerdict], ...]:
        """Each interval with its eventual-membership verdict."""
        return self._entries

    @property
    def failures(self) -> list[tuple[Interval, EventualVerdict]]:
        """The intervals the family is not eventually in."""
        return [(interval, verdict) for interval, verdict in self._entries if not verdict.holds]

    @property
    def refuted_by(self) -> Interval | None:
        """The first interval refuting convergence, if any."""
        failures = self.failures
        return failures[0][0] if failures else None

    @property
    def consistent(self) -> bool:
        """Whether the family is eventually in every interval."""
        return not self.failures

    @property
    def thresholds(self) -> list[int]:
        """The entry index of each interval, for a consistent report."""
        return [
            verdict.holds_from for _, verdict in self._entries if verdict.holds_from is not None
        ]

    def to_json(self) -> Json:
        """Return the JSON form of the report."""
        if self.consistent:
            return {
                "consistent": True,
                "thresholds": [
                    {"interval": encode_interval(interval), "holds_from": verdict.holds_from}
                    for interval, verdict in self._entries
                ],
            }
        return {
            "consistent": False,
            "refuted_by": [
                {"interval": encode_interval(interval), "witness": verdict.witness}
                for interval, verdict in self.failures
            ],
        }


def tau_e_convergence_report(
    family: Family,
    x: Vec,
    catalog: NeighborhoodCatalog,
) -> TauEReport:
    """Check eventual membership of the family in every interval of the catalog.

    Raises:
        CenterMismatchError: The catalog is not centred at x.
    """
    if catalog.center != x:
        raise CenterMismatchError(catalog.center, x)
    return TauEReport(
        [
            (interval, eventually_in(family, IntervalSet(interval)))
            for interval in catalog.intervals
        ],
    )
