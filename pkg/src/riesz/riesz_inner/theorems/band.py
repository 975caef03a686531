"""Module for the verifier of quasi-order closed ideals being bands."""

# ruff: noqa: TID252

import logging
from fractions import Fraction

from ..config import DEFAULT_CONFIG, SearchConfig
from ..core import TAIL_SEQ, Carrier, Vec, absolute, encode_vec, unit_vector
from ..nets import (
    CoordDecay,
    Direction,
    Family,
    Scale,
    encode_family,
    monotonicity,
    running_sup_meet,
)
from ..order_sets import Band, Ideal, SetExpr, TailZero, encode_set
from ..status import Status, status_name
from ..topologies import check_order_closed, check_quasi_order_closed
from .exceptions import NotIdealShapedError
from .report import Conclusion, Step, TheoremReport, conclude

logger = logging.getLogger(__name__)

THEOREM_ID = "band"


def _probe_elements(expression: Ideal | Band | TailZero) -> list[Vec]:
    if isinstance(expression, TailZero):
        return [unit_vector(TAIL_SEQ, 0), unit_vector(TAIL_SEQ, 0) + unit_vector(TAIL_SEQ, 1)]
    return [g for g in expression.generators if not g.is_zero]


def _probe_families(element: Vec) -> list[Family]:
    return [CoordDecay(element, element), Scale(absolute(element), Fraction(1, 2))]


def _running_sup_meet_step(expression: Ideal | Band | TailZero) -> Step:
    probes = []
    for element in _probe_elements(expression):
        cap = absolute(element) * 2
        for family in _probe_families(element):
            built = running_sup_meet(family, cap)
            limit = built.form.limit()
            evidence = monotonicity(built)
            rising = evidence.constant or evidence.direction == Direction.INCREASING
            ok = rising and expression.contains(limit)
            probes.append(
                {
                    "family": encode_family(built),
                    "limit": encode_vec(limit),
                    "ok": ok,
                },
            )
    return Step(
        "running_sup_meet",
        f"{len(probes)} increasing envelope(s) keep their limits in the ideal",
        passed=all(probe["ok"] for probe in probes),
        evidence=probes,
    )


def verify_band_proposition(
    expression: SetExpr,
    carrier: Carrier | None = None,
    config: SearchConfig = DEFAULT_CONFIG,
) -> TheoremReport:
    """Verify that an ideal is a band when it is quasi-order closed.

    A refuted quasi-order closure makes the ideal a non-candidate and is
    reported with its witness; it does not contradict the proposition.

    Raises:
        NotIdealShapedError: The set is not an Ideal, Band or TailZero.
    """
    if not isinstance(expression, Ideal | Band | TailZero):
        raise NotIdealShapedError(expression)
    inputs = {"set": encode_set(expression)}
    closed = check_quasi_order_closed(expression, carrier, config)
    steps = [
        Step(
            "check_quasi_order_closed",
            f"{status_name(closed.status)} quasi-order closed",
            passed={Status.CERTIFIED: True, Status.REFUTED: False}.get(closed.status),
            evidence=closed.to_json(),
        ),
    ]
    if closed.status == Status.REFUTED:
        return TheoremReport(
            THEOREM_ID,
            inputs,
            steps,
            Conclusion.COUNTEREXAMPLE_FOUND,
            ["the ideal is not quasi-order closed, so it is not a band candidate"],
        )
    if closed.status == Status.UNKNOWN:
        return TheoremReport(THEOREM_ID, inputs, steps, Conclusion.INCONCLUSIVE)

    order_closed = check_order_closed(expression, carrier, config)
    steps.append(
        Step(
            "check_order_closed",
            f"{status_name(order_closed.status)} order closed",
            passed={Status.CERTIFIED: True, Status.REFUTED: False}.get(order_closed.status),
            evidence=order_closed.to_json(),
        ),
    )
    steps.append(_running_sup_meet_step(expression))
    conclusion = conclude(steps)
    if conclusion == Conclusion.COUNTEREXAMPLE_FOUND:
        logger.warning("Closed ideal %r failed a band check.", expression)
    return TheoremReport(
        THEOREM_ID,
        inputs,
        steps,
        conclusion,
        contradiction=conclusion == Conclusion.COUNTEREXAMPLE_FOUND,
    )
