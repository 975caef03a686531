"""Module for deciding whether an interval lies inside a set.

Primitive sets are decided exactly from the coordinate projections of the
interval. Boolean combinations are decided exactly when their parts are;
otherwise a deterministic lattice of sample points from the interval is
tested and the answer is reported as sampled.
"""

# ruff: noqa: TID252

import itertools
import logging
from collections.abc import Iterator

from ..config import DEFAULT_CONFIG, SearchConfig
from ..core import (
    TAIL_SEQ,
    Json,
    PositionError,
    ZERO,
    Vec,
    absolute,
    aligned_length,
    encode_vec,
)
from ..order_sets import (
    Band,
    Complement,
    CoordHalfSpace,
    Dilate,
    Ideal,
    Intersection,
    Interval,
    IntervalSemantics,
    IntervalSet,
    Projection,
    Relation,
    SetExpr,
    SolidHull,
    TailZero,
    Translate,
    Union,
)

logger = logging.getLogger(__name__)

type Decision = bool | None


class Containment:
    """Outcome of an interval containment check."""

    def __init__(
        self,
        *,
        contained: bool,
        exact: bool,
        counterexample: Vec | None = None,
        samples: int = 0,
    ) -> None:
        """Initialise a new containment outcome."""
        self._contained = contained
        self._exact = exact
        self._counterexample = counterexample
        self._samples = samples

    @property
    def contained(self) -> bool:
        """Whether the interval was found inside the set."""
        return self._contained

    @property
    def exact(self) -> bool:
        """Whether the answer is proven rather than sampled."""
        return self._exact

    @property
    def counterexample(self) -> Vec | None:
        """A point of the interval outside the set, when one was found."""
        return self._counterexample

    @property
    def samples(self) -> int:
        """The number of sample points tested."""
        return self._samples

    def to_json(self) -> Json:
        """Return the JSON form of the outcome."""
        data: dict[str, Json] = {
            "contained": self._contained,
            "method": "exact" if self._exact else "sampled",
        }
        if self._counterexample is not None:
            data["counterexample"] = encode_vec(self._counterexample)
        if not self._exact:
            data["samples"] = self._samples
        return data


def _positions(interval: Interval, *vectors: Vec) -> list[int | None]:
    dimension = interval.lo.carrier.dimension
    if dimension is not None:
        return list(range(dimension))
    return [*range(aligned_length(interval.lo, interval.hi, *vectors)), None]


def _is_box(interval: Interval) -> bool:
    return not interval.is_open or interval.semantics == IntervalSemantics.STRICT_UNIFORM


def _ranges_disjoint(first: Projection, second: Projection) -> bool:
    def before(low: Projection, high: Projection) -> bool:
        if low.high < high.low:
            return True
        return low.high == high.low and not (low.high_closed and high.low_closed)

    return before(first, second) or before(second, first)


def _hull(interval: Interval) -> Interval:
    return Interval.closed(interval.lo, interval.hi)


def _solid_hull_parts(expression: SolidHull) -> Union:
    return Union(
        [
            IntervalSet(Interval.closed(-absolute(g), absolute(g)))
            for g in expression.generators
        ],
    )


def _interval_contains(interval: Interval, target: Interval) -> bool:
    positions = _positions(interval, target.lo, target.hi)
    if not target.is_open or target.semantics == IntervalSemantics.STRICT_UNIFORM:
        closed = not target.is_open
        return all(
            interval.projection(p).within(
                target.lo.coordinate(p),
                target.hi.coordinate(p),
                closed=closed,
            )
            for p in positions
        )
    in_box = _interval_contains(interval, _hull(target))
    return in_box and not interval.contains(target.lo) and not interval.contains(target.hi)


def _interval_disjoint(interval: Interval, target: Interval) -> Decision:
    positions = _positions(interval, target.lo, target.hi)
    hulls_apart = any(
        _ranges_disjoint(_hull(interval).projection(p), _hull(target).projection(p))
        for p in positions
    )
    if hulls_apart:
        return True
    if not (_is_box(interval) and _is_box(target)):
        return None
    return any(
        _ranges_disjoint(interval.projection(p), target.projection(p)) for p in positions
    )


def _vanishing_positions(interval: Interval, generators: tuple[Vec, ...]) -> list[int | None]:
    return [
        p
        for p in _positions(interval, *generators)
        if all(g.coordinate(p) == 0 for g in generators)
    ]


def contains_exact(  # noqa: C901, PLR0911, PLR0912
    interval: Interval,
    expression: SetExpr,
) -> Decision:
    """Return whether the interval lies in the set, or None when undecided."""
    try:
        if isinstance(expression, IntervalSet):
            return _interval_contains(interval, expression.interval)
        if isinstance(expression, CoordHalfSpace):
            projection = interval.projection(expression.index)
            if expression.relation == Relation.AT_MOST:
                return projection.all_at_most(expression.bound)
            return projection.all_at_least(expression.bound)
        if isinstance(expression, Ideal | Band):
            return all(
                interval.projection(p).low == 0 == interval.projection(p).high
                for p in _vanishing_positions(interval, expression.generators)
            )
        if isinstance(expression, SolidHull):
            return contains_exact(interval, _solid_hull_parts(expression))
        if isinstance(expression, TailZero):
            projection = interval.projection(None)
            return projection.low == 0 == projection.high
    except PositionError:
        return None
    if isinstance(expression, Complement):
        return disjoint_exact(interval, expression.inner)
    if isinstance(expression, Union):
        decisions = [contains_exact(interval, part) for part in expression.parts]
        if any(decision is True for decision in decisions):
            return True
        if all(disjoint_exact(interval, part) is True for part in expression.parts):
            return False
        return None
    if isinstance(expression, Intersection):
        decisions = [contains_exact(interval, part) for part in expression.parts]
        if any(decision is False for decision in decisions):
            return False
        if all(decision is True for decision in decisions):
            return True
        return None
    if isinstance(expression, Translate):
        return contains_exact(interval.translated(-expression.shift), expression.inner)
    if isinstance(expression, Dilate):
        return contains_exact(interval.scaled(1 / expression.factor), expression.inner)
    return None


def disjoint_exact(  # noqa: C901, PLR0911, PLR0912
    interval: Interval,
    expression: SetExpr,
) -> Decision:
    """Return whether the interval misses the set, or None when undecided."""
    try:
        if isinstance(expression, IntervalSet):
            return _interval_disjoint(interval, expression.interval)
        if isinstance(expression, CoordHalfSpace):
            projection = interval.projection(expression.index)
            if expression.relation == Relation.AT_MOST:
                return projection.none_at_most(expression.bound)
            return projection.none_at_least(expression.bound)
        if isinstance(expression, SolidHull):
            return disjoint_exact(interval, _solid_hull_parts(expression))
        if isinstance(expression, TailZero):
            return not interval.projection(None).contains(ZERO)
    except PositionError:
        return None
    if isinstance(expression, Complement):
        return contains_exact(interval, expression.inner)
    if isinstance(expression, Union):
        decisions = [disjoint_exact(interval, part) for part in expression.parts]
        if all(decision is True for decision in decisions):
            return True
        if any(decision is False for decision in decisions):
            return False
        return None
    if isinstance(expression, Intersection):
        if not expression.parts:
            return False
        if any(disjoint_exact(interval, part) is True for part in expression.parts):
            return True
        if contains_exact(interval, expression) is True:
            return False
        return None
    if isinstance(expression, Translate):
        return disjoint_exact(interval.translated(-expression.shift), expression.inner)
    if isinstance(expression, Dilate):
        return disjoint_exact(interval.scaled(1 / expression.factor), expression.inner)
    return None


def sample_points(interval: Interval, count: int) -> Iterator[Vec]:
    """Yield lattice points of the closed hull in a fixed order.

    At least `count` points are produced, and at most four times as many.

    Points are equally spaced per coordinate between the endpoints; TailSeq
    samples also vary one position beyond the aligned prefix and the tail.
    """
    lo, hi = interval.lo, interval.hi
    carrier = lo.carrier
    if carrier.dimension is not None:
        positions: list[int | None] = list(range(carrier.dimension))
    else:
        positions = [*range(aligned_length(lo, hi) + 1), None]
    steps = 1
    while (steps + 1) ** len(positions) < count:
        steps += 1
    axes = [
        [
            lo.coordinate(p) + (hi.coordinate(p) - lo.coordinate(p)) * i / steps
            for i in range(steps + 1)
        ]
        for p in positions
    ]
    for values in itertools.islice(itertools.product(*axes), 4 * count):
        if carrier.dimension is not None:
            yield Vec(carrier, values)
        else:
            yield Vec(TAIL_SEQ, values[:-1], values[-1])


def interval_within(
    interval: Interval,
    expression: SetExpr,
    config: SearchConfig = DEFAULT_CONFIG,
) -> Containment:
    """Decide whether the interval lies inside the set.

    Undecided cases fall back to testing at least `config.fit_samples`
    distinct points of the interval, refining the grid until enough of them
    lie inside it; a sampled point of the interval outside the set is an
    exact refutation. Fewer points are tested only when refining adds none.
    """
    decision = contains_exact(interval, expression)
    if decision is not None:
        return Containment(contained=decision, exact=True)
    tested: set[Vec] = set()
    count = config.fit_samples
    while len(tested) < config.fit_samples:
        before = len(tested)
        for point in sample_points(interval, count):
            if point in tested or not interval.contains(point):
                continue
            tested.add(point)
            if not expression.contains(point):
                return Containment(contained=False, exact=True, counterexample=point)
        if len(tested) == before:
            break
        count *= 2
    logger.debug("Sampled %d points of %s.", len(tested), interval)
    return Containment(contained=True, exact=False, samples=len(tested))
