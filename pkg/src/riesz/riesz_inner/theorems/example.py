"""Module for the verifier of the example separating the two topologies.

In the tail-sequence carrier the sequences x_n = (0, ..., 0, 1, 1, ...)
decrease to 0 yet never enter the open interval (−e_0, e_0). That interval
is therefore a neighbourhood of 0 for the interval topology that is not
order open.
"""

# ruff: noqa: TID252

import logging

from ..config import DEFAULT_CONFIG, SearchConfig
from ..core import TAIL_SEQ, encode_vec, unit_vector, zero
from ..nets import Direction, Shift, direction_name, eventually_in, monotonicity
from ..order_sets import (
    DEFAULT_SEMANTICS,
    Complement,
    Interval,
    IntervalSemantics,
    IntervalSet,
    InvalidIntervalError,
    semantics_name,
)
from ..status import Status, status_name
from ..topologies import is_order_open, neighborhood_catalog, tau_e_convergence_report
from .report import Conclusion, Step, TheoremReport, conclude

logger = logging.getLogger(__name__)

THEOREM_ID = "example-e1"

_EXPECT_REFUTED = {Status.REFUTED: True, Status.UNKNOWN: None, Status.CERTIFIED: False}


def verify_example_e1(
    semantics: IntervalSemantics = DEFAULT_SEMANTICS,
    config: SearchConfig = DEFAULT_CONFIG,
) -> TheoremReport:
    """Verify that the shift sequences separate order and interval convergence."""
    inputs = {"semantics": semantics_name(semantics)}
    family = Shift()
    origin = zero(TAIL_SEQ)
    e0 = unit_vector(TAIL_SEQ, 0)

    evidence = monotonicity(family)
    limit = family.form.limit()
    steps = [
        Step(
            "monotonicity",
            f"shift is {direction_name(evidence.direction)} with limit {limit}",
            passed=evidence.direction == Direction.DECREASING and limit == origin,
            evidence={"monotonicity": evidence.to_json(), "limit": encode_vec(limit)},
        ),
    ]

    try:
        interval = Interval.open(-e0, e0, semantics)
    except InvalidIntervalError:
        steps.append(
            Step("interval", f"({-e0}, {e0}) is empty", passed=None),
        )
        logger.info("Example skipped: interval empty under %s.", inputs["semantics"])
        return TheoremReport(
            THEOREM_ID,
            inputs,
            steps,
            Conclusion.INCONCLUSIVE,
            ["interval empty under this semantics"],
        )

    outside = eventually_in(family, Complement(IntervalSet(interval)))
    steps.append(
        Step(
            "eventually_in",
            f"shift stays outside {interval} from index {outside.holds_from}",
            passed=outside.holds_from == 1,
            evidence=outside.to_json(),
        ),
    )

    verdict = is_order_open(IntervalSet(interval), TAIL_SEQ, config)
    steps.append(
        Step(
            "is_order_open",
            f"{interval} is {status_name(verdict.status)} order open",
            passed=_EXPECT_REFUTED[verdict.status],
            evidence=verdict.to_json(),
        ),
    )

    catalog = neighborhood_catalog(origin, 2, semantics)
    report = tau_e_convergence_report(family, origin, catalog)
    steps.append(
        Step(
            "tau_e_convergence_report",
            f"refuted by {report.refuted_by}" if report.refuted_by else "consistent",
            passed=not report.consistent,
            evidence=report.to_json(),
        ),
    )
    conclusion = conclude(steps)
    return TheoremReport(
        THEOREM_ID,
        inputs,
        steps,
        conclusion,
        contradiction=conclusion == Conclusion.COUNTEREXAMPLE_FOUND,
    )
