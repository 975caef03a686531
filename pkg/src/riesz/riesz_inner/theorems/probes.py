"""Module for the probe-based verifiers over catalogs of sets.

These check consequences of the topology results on decidable instances:
order-open sets admit fitted intervals, translates and dilates of order-open
sets stay order open, and solid sets get matching closure verdicts.
"""

# ruff: noqa: TID252

import logging
import random
from collections.abc import Sequence
from fractions import Fraction

from ..config import DEFAULT_CONFIG, SearchConfig
from ..core import Carrier, Vec, encode_carrier, ones, unit_vector
from ..order_sets import (
    DEFAULT_SEMANTICS,
    Band,
    Complement,
    CoordHalfSpace,
    Ideal,
    Intersection,
    Interval,
    IntervalSemantics,
    IntervalSet,
    Relation,
    SetExpr,
    SolidHull,
    TailZero,
    Translate,
    candidate_points,
    check_solid,
    encode_set,
    full_space,
    resolve_carrier,
    semantics_name,
)
from ..status import Status, status_name
from ..topologies import (
    check_order_closed,
    check_quasi_order_closed,
    encode_fit,
    interval_fit,
    is_order_open,
    vector_topology_probe,
)
from .exceptions import NotCertifiedError
from .report import Conclusion, Step, TheoremReport, conclude

logger = logging.getLogger(__name__)

TAU_SUBSET_ID = "tau-subset"
VECTOR_TOPOLOGY_ID = "vector-topology"
SOLID_REMARK_ID = "solid-remark"

_RANDOM_RANGE = 4
_RANDOM_DENOMINATOR = 4
_ATTEMPTS_PER_SAMPLE = 50


def _random_point(rng: random.Random, carrier: Carrier, config: SearchConfig) -> Vec:
    def draw() -> Fraction:
        bound = _RANDOM_RANGE * _RANDOM_DENOMINATOR
        return Fraction(rng.randint(-bound, bound), _RANDOM_DENOMINATOR)

    if carrier.dimension is not None:
        return Vec(carrier, [draw() for _ in range(carrier.dimension)])
    length = rng.randint(0, config.tail_prefix)
    return Vec(carrier, [draw() for _ in range(length)], draw())


def interior_samples(  # noqa: PLR0913
    expression: SetExpr,
    carrier: Carrier,
    count: int,
    config: SearchConfig = DEFAULT_CONFIG,
    *,
    seed: int = 0,
) -> list[Vec]:
    """Return up to `count` distinct points of the set.

    Candidate points of the set come first; seeded random rational points
    in [−4, 4] fill the remainder.
    """
    members = candidate_points(expression, carrier, config)
    samples = [point for point in members if expression.contains(point)][:count]
    seen = set(samples)
    rng = random.Random(seed)  # noqa: S311
    for _ in range(count * _ATTEMPTS_PER_SAMPLE):
        if len(samples) >= count:
            break
        point = _random_point(rng, carrier, config)
        if point not in seen and expression.contains(point):
            seen.add(point)
            samples.append(point)
    return samples


def tau_subset_probe(  # noqa: PLR0913
    catalog: Sequence[SetExpr],
    samples_per_set: int,
    carrier: Carrier | None = None,
    config: SearchConfig = DEFAULT_CONFIG,
    semantics: IntervalSemantics = DEFAULT_SEMANTICS,
    *,
    seed: int = 0,
) -> TheoremReport:
    """Verify that every sampled point of an order-open set has a fitted interval.

    Raises:
        NotCertifiedError: A catalog entry is not certified order open.
    """
    inputs = {
        "catalog": [encode_set(expression) for expression in catalog],
        "samples_per_set": samples_per_set,
        "semantics": semantics_name(semantics),
    }
    steps = []
    for expression in catalog:
        ambient = resolve_carrier(expression, carrier)
        verdict = is_order_open(expression, ambient, config)
        if verdict.status != Status.CERTIFIED:
            raise NotCertifiedError(expression, verdict.status)
        points = interior_samples(expression, ambient, samples_per_set, config, seed=seed)
        fits = [
            (
                point,
                interval_fit(
                    point,
                    expression,
                    config,
                    semantics,
                    carrier=ambient,
                    check_open=False,
                ),
            )
            for point in points
        ]
        failures = [point for point, fit in fits if fit is None]
        exponents = [fit.exponent for _, fit in fits if fit is not None]
        summary = f"{len(points) - len(failures)}/{len(points)} point(s) fitted"
        if exponents:
            summary += f", largest t={max(exponents)}"
        steps.append(
            Step(
                "interval_fit",
                summary,
                passed=True if not failures else None,
                evidence={
                    "set": encode_set(expression),
                    "fits": [encode_fit(fit, point) for point, fit in fits],
                },
            ),
        )
        if failures:
            logger.info("%d point(s) of %r had no fit within budget.", len(failures), expression)
    notes = [] if catalog else ["empty catalog"]
    return TheoremReport(TAU_SUBSET_ID, inputs, steps, conclude(steps), notes)


def default_open_catalog(carrier: Carrier) -> list[SetExpr]:
    """Return a curated catalog of order-open sets of the carrier.

    Every carrier gets the full space, the open half-space x_0 > 0 and its
    translate by the strong unit, the open half-space x_1 < 1 (x_0 < 1 on the
    line) and the outside of the unit box. FinDim carriers also get the strictly positive cone, its
    translate by the strong unit and the outside of the unit box centred at
    e/2.
    """
    unit = ones(carrier)
    second = 0 if carrier.dimension == 1 else 1
    positive = Complement(CoordHalfSpace(0, Relation.AT_MOST, 0))
    outside = Complement(IntervalSet(Interval.closed(-unit, unit)))
    shared: list[SetExpr] = [
        full_space(),
        positive,
        Translate(positive, unit),
        Complement(CoordHalfSpace(second, Relation.AT_LEAST, 1)),
        outside,
    ]
    if carrier.dimension is None:
        return shared
    cone = Intersection(
        [
            Complement(CoordHalfSpace(index, Relation.AT_MOST, 0))
            for index in range(carrier.dimension)
        ],
    )
    return [*shared, cone, Translate(cone, unit), Translate(outside, unit / 2)]


def verify_vector_topology(
    catalog: Sequence[SetExpr] | None = None,
    carrier: Carrier | None = None,
    config: SearchConfig = DEFAULT_CONFIG,
) -> TheoremReport:
    """Verify that translates and dilates of order-open sets stay order open.

    Each set is probed with the shifts −e, e_0/2 and e and the scalars 2,
    −1 and 1/3. A refuted image contradicts the vector-topology result.

    Raises:
        NotCertifiedError: A catalog entry is not certified order open.
    """
    ambient_default = carrier or Carrier.fin_dim(2)
    sets = list(catalog) if catalog is not None else default_open_catalog(ambient_default)
    inputs = {
        "carrier": encode_carrier(ambient_default),
        "catalog": [encode_set(expression) for expression in sets],
    }
    steps = []
    for expression in sets:
        ambient = resolve_carrier(expression, ambient_default)
        verdict = is_order_open(expression, ambient, config)
        if verdict.status != Status.CERTIFIED:
            raise NotCertifiedError(expression, verdict.status)
        unit = ones(ambient)
        shifts = [-unit, unit_vector(ambient, 0) / 2, unit]
        report = vector_topology_probe(expression, shifts, [2, -1, Fraction(1, 3)], ambient, config)
        if report.contradictions:
            passed: bool | None = False
        elif report.all_certified:
            passed = True
        else:
            passed = None
        steps.append(
            Step(
                "vector_topology_probe",
                f"{len(report.entries)} image(s), {len(report.contradictions)} refuted",
                passed=passed,
                evidence={"set": encode_set(expression), **report.to_json()},
            ),
        )
    conclusion = conclude(steps)
    return TheoremReport(
        VECTOR_TOPOLOGY_ID,
        inputs,
        steps,
        conclusion,
        contradiction=conclusion == Conclusion.COUNTEREXAMPLE_FOUND,
    )


def default_solid_catalog() -> list[tuple[SetExpr, Carrier]]:
    """Return a curated catalog of sets with their carriers for the solid remark."""
    plane = Carrier.fin_dim(2)
    space = Carrier.fin_dim(3)
    tail = Carrier.tail_seq()
    plane_unit = ones(plane)
    return [
        (Band([unit_vector(tail, 0)]), tail),
        (TailZero(), tail),
        (Ideal([unit_vector(space, 0)]), space),
        (IntervalSet(Interval.closed(-plane_unit, plane_unit)), plane),
        (SolidHull([Vec(plane, [1, 2])]), plane),
        (
            IntervalSet(Interval.open(-plane_unit, plane_unit, IntervalSemantics.STRICT_UNIFORM)),
            plane,
        ),
    ]


def verify_solid_remark(
    catalog: Sequence[tuple[SetExpr, Carrier]] | None = None,
    config: SearchConfig = DEFAULT_CONFIG,
) -> TheoremReport:
    """Verify that solid sets get the same quasi-order and order closure verdict.

    A solid set certified quasi-order closed but refuted order closed
    contradicts the remark. Sets that are not certified solid are skipped.
    """
    entries = list(catalog) if catalog is not None else default_solid_catalog()
    inputs = {
        "catalog": [
            {"set": encode_set(expression), "carrier": encode_carrier(carrier)}
            for expression, carrier in entries
        ],
    }
    steps = []
    notes = []
    for expression, carrier in entries:
        solidity = check_solid(expression, carrier, config)
        if solidity.status != Status.CERTIFIED:
            notes.append(f"{expression!r} skipped: {status_name(solidity.status)} solid")
            continue
        quasi = check_quasi_order_closed(expression, carrier, config)
        order = check_order_closed(expression, carrier, config)
        if quasi.status == Status.CERTIFIED and order.status == Status.REFUTED:
            passed: bool | None = False
        elif Status.UNKNOWN in (quasi.status, order.status):
            passed = None
        else:
            passed = quasi.status == order.status
        steps.append(
            Step(
                "closure_agreement",
                f"{status_name(quasi.status)} quasi-order closed, "
                f"{status_name(order.status)} order closed",
                passed=passed,
                evidence={
                    "set": encode_set(expression),
                    "quasi_order_closed": quasi.to_json(),
                    "order_closed": order.to_json(),
                },
            ),
        )
    conclusion = conclude(steps)
    return TheoremReport(
        SOLID_REMARK_ID,
        inputs,
        steps,
        conclusion,
        notes,
        contradiction=conclusion == Conclusion.COUNTEREXAMPLE_FOUND,
    )
