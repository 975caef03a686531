"""Module for the witness search behind refuted closure verdicts.

Candidates are enumerated in a fixed canonical order and evaluated in
batches, possibly on several threads; the first witness in canonical order
wins, so the result never depends on scheduling.
"""

# ruff: noqa: TID252

import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor

from ..config import SearchConfig
from ..core import Carrier, Vec, absolute, ones, unit_vector
from ..nets import (
    CoordDecay,
    Direction,
    Family,
    Scale,
    Shift,
    ShiftUp,
    Splice,
    eventually_in,
    monotonicity,
)
from ..order_sets import SetExpr, anchor_points, candidate_points
from .verdict import ClosureWitness, SearchReport, Verdict

logger = logging.getLogger(__name__)

_BATCH_PER_WORKER = 16


def _directions(carrier: Carrier, config: SearchConfig) -> list[Vec]:
    width = carrier.dimension or config.tail_prefix + 1
    return [ones(carrier), *(unit_vector(carrier, j) for j in range(width))]


def _mixed_directions(carrier: Carrier, config: SearchConfig) -> list[Vec]:
    width = carrier.dimension or config.tail_prefix + 1
    mixed = [
        unit_vector(carrier, j) - unit_vector(carrier, j + 1) for j in range(width - 1)
    ]
    if carrier.is_tail_seq:
        mixed.append(2 * unit_vector(carrier, 0) - ones(carrier))
    return mixed


def closure_candidates(
    expression: SetExpr,
    carrier: Carrier,
    config: SearchConfig,
    *,
    monotone: bool,
) -> list[Family]:
    """Return the candidate witness families in canonical order.

    Monotone candidates come first: Shift and ShiftUp, splices and
    coordinate decays towards every candidate limit outside the set, and
    Scale families built from the elements of the expression. Without the
    monotonicity requirement, decays along mixed-sign directions and splices
    of incomparable elements follow.
    """
    points = candidate_points(expression, carrier, config)
    limits = [point for point in points if not expression.contains(point)]
    unit = ones(carrier)
    families: list[Family] = []
    if carrier.is_tail_seq:
        families.extend((Shift(), ShiftUp()))
        for limit in limits:
            families.extend((Splice(limit, limit + unit), Splice(limit, limit - unit)))
    for generator in anchor_points(expression, carrier):
        if generator.is_zero:
            continue
        for factor in config.scale_factors:
            for ratio in config.scale_lambdas:
                families.append(Scale(absolute(generator) * factor, ratio))
    directions = _directions(carrier, config)
    for limit in limits:
        for direction in directions:
            families.extend((CoordDecay(limit, direction), CoordDecay(limit, -direction)))
    if not monotone:
        for limit in limits:
            for direction in _mixed_directions(carrier, config):
                families.extend(
                    (CoordDecay(limit, direction), CoordDecay(limit, -direction)),
                )
                if carrier.is_tail_seq:
                    families.append(Splice(limit, limit + direction))
    return list(dict.fromkeys(families))


def try_witness(
    family: Family,
    expression: SetExpr,
    *,
    monotone: bool,
) -> ClosureWitness | None:
    """Return a closure witness built from the family, if it is one."""
    evidence = monotonicity(family)
    if monotone and evidence.direction == Direction.NEITHER:
        return None
    limit = family.form.limit()
    if expression.contains(limit):
        return None
    verdict = eventually_in(family, expression)
    if verdict.holds_from is None:
        return None
    return ClosureWitness(
        family,
        evidence,
        limit,
        verdict.holds_from,
        monotone_required=monotone,
    )


def search_witness(
    expression: SetExpr,
    carrier: Carrier,
    config: SearchConfig,
    *,
    monotone: bool,
) -> Verdict:
    """Search the candidate families for a closure witness.

    Returns a refuted verdict for the first witness in canonical order, or
    an inconclusive verdict summarising the search.
    """
    families = closure_candidates(expression, carrier, config, monotone=monotone)
    logger.debug("Searching %d candidate families for %r.", len(families), expression)

    def attempt(family: Family) -> ClosureWitness | None:
        return try_witness(family, expression, monotone=monotone)

    batch = config.workers * _BATCH_PER_WORKER
    if config.workers == 1:
        for family in families:
            witness = attempt(family)
            if witness is not None:
                logger.debug("Found witness %r.", witness)
                return Verdict.refuted(witness)
    else:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            for offset in range(0, len(families), batch):
                for witness in pool.map(attempt, families[offset : offset + batch]):
                    if witness is not None:
                        logger.debug("Found witness %r.", witness)
                        return Verdict.refuted(witness)
    templates = Counter(family.template for family in families)
    logger.info("No witness among %d candidates for %r.", len(families), expression)
    return Verdict.unknown(
        SearchReport(
            candidates=len(families),
            templates=templates,
            grid=config.describe(),
        ),
    )
