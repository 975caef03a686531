"""Module for the verifier of interval convergence implying order convergence.

The net indexed by all intervals around x is replaced by a countable
chain of them. Entering the m-th interval from index k_m bounds |x_k − x|
by the width y_m = hi_m − lo_m of that interval, so the widths, laid out
between consecutive thresholds, form the dominating family of the order
convergence.
"""

# ruff: noqa: TID252

import itertools
import logging

from ..config import DEFAULT_CONFIG, SearchConfig
from ..core import Vec, aligned_length, encode_vec
from ..nets import (
    ConvergenceCertificate,
    Deviation,
    Direction,
    Family,
    InvalidTemplateError,
    Prefixed,
    encode_family,
    eventually_in,
    monotonicity,
    order_converges,
)
from ..order_sets import Interval, IntervalSet
from ..topologies import (
    CenterMismatchError,
    NeighborhoodCatalog,
    TauEReport,
    tau_e_convergence_report,
)
from .exceptions import ChainError
from .report import Conclusion, Step, TheoremReport

logger = logging.getLogger(__name__)

THEOREM_ID = "t1"


def _positions(first: Vec, last: Vec) -> list[int | None]:
    if first.carrier.dimension is not None:
        return list(range(first.carrier.dimension))
    return [*range(aligned_length(first, last)), None]


def _chain_widths(chain: NeighborhoodCatalog) -> list[Vec]:
    if chain.chain_length == 0:
        msg = "no chain-marked intervals"
        raise ChainError(msg)
    widths = [interval.hi - interval.lo for interval in chain.chain]
    first, last = widths[0], widths[-1]
    for position in _positions(first, last):
        width = first.coordinate(position)
        if width != 0 and last.coordinate(position) == width:
            where = "the tail" if position is None else f"position {position}"
            msg = f"the widths do not shrink at {where}"
            raise ChainError(msg)
    return widths


def _hypothesis_step(report: TauEReport, label: str) -> Step:
    if report.consistent:
        summary = f"eventually inside every {label} interval"
    else:
        summary = f"never settles inside {report.refuted_by}"
    return Step(
        "tau_e_convergence_report",
        summary,
        passed=report.consistent,
        evidence=report.to_json(),
    )


def _proof_bound(
    family: Family,
    x: Vec,
    widths: list[Vec],
    thresholds: list[int],
) -> Prefixed:
    """Return the dominating family built from the chain.

    From the m-th threshold up to the next one the bound is the width y_m.
    Before the first threshold it is y_1 joined with the deviations, and
    past the last one it follows the deviation sup_{j ≥ k} |x_j − x|.

    Raises:
        InvalidTemplateError: The deviations change their tail, which no
            chain of shrinking intervals allows.
    """
    deviations = Deviation(family, x)
    values: list[Vec] = []
    for k in range(thresholds[-1]):
        reached = [width for width, at in zip(widths, thresholds, strict=True) if at <= k]
        values.append(reached[-1] if reached else widths[0] | deviations.value(k))
    return Prefixed(values, deviations)


def _domination_step(
    family: Family,
    x: Vec,
    report: TauEReport,
    widths: list[Vec],
) -> Step:
    bounds = []
    for (interval, entered), width in zip(report.entries, widths, strict=True):
        band = eventually_in(family, IntervalSet(Interval.closed(x - width, x + width)))
        bounded = band.holds_from is not None and band.holds_from <= (entered.holds_from or 0)
        bounds.append(
            {
                "interval": str(interval),
                "entered_from": entered.holds_from,
                "bounded_from": band.holds_from,
                "ok": bounded,
            },
        )
    return Step(
        "domination",
        "|value(k) − x| ≤ y_m once the m-th interval is entered",
        passed=all(bound["ok"] for bound in bounds),
        evidence=bounds,
    )


def verify_theorem_t1(
    family: Family,
    x: Vec,
    chain: NeighborhoodCatalog,
    config: SearchConfig = DEFAULT_CONFIG,
) -> TheoremReport:
    """Verify that a family converging in the interval topology order converges.

    The chain-marked intervals stand in for the net of all intervals around
    x; a catalog with further intervals is checked in full as well. When the
    hypothesis holds over the catalog, the dominating family is built from
    the chain widths, its certificate is re-validated, and `order_converges`
    must agree independently.

    Raises:
        ChainError: The chain is empty or its widths stop shrinking at some
            position.
        CenterMismatchError: The catalog is not centred at x.
    """
    if chain.center != x:
        raise CenterMismatchError(chain.center, x)
    widths = _chain_widths(chain)
    inputs = {
        "family": encode_family(family),
        "x": encode_vec(x),
        "chain": chain.to_json(),
    }
    notes = ["the net over all intervals is replaced by the chain-marked intervals"]
    chain_only = NeighborhoodCatalog(x, chain.chain, chain.chain_length)
    chain_report = tau_e_convergence_report(family, x, chain_only)
    steps = [_hypothesis_step(chain_report, "chain")]
    hypothesis = chain_report.consistent
    if len(chain.intervals) > chain.chain_length:
        full_report = tau_e_convergence_report(family, x, chain)
        steps.append(_hypothesis_step(full_report, "catalog"))
        hypothesis = hypothesis and full_report.consistent
    if not hypothesis:
        notes.append("theorem hypothesis unmet: no interval convergence over the catalog")
        return TheoremReport(THEOREM_ID, inputs, steps, Conclusion.INCONCLUSIVE, notes)

    entered = [verdict.holds_from or 0 for _, verdict in chain_report.entries]
    thresholds = list(itertools.accumulate(entered, max))
    try:
        bound = _proof_bound(family, x, widths, thresholds)
    except InvalidTemplateError:
        notes.append("theorem hypothesis unmet: the tail of value(k) stays away from x")
        logger.info("Deviations of %r change their tail.", family)
        return TheoremReport(THEOREM_ID, inputs, steps, Conclusion.INCONCLUSIVE, notes)
    evidence = monotonicity(bound)
    steps.append(
        Step(
            "dominating_family",
            "y_m = hi_m − lo_m from the m-th threshold on is decreasing to 0",
            passed=evidence.direction == Direction.DECREASING and bound.form.limit().is_zero,
            evidence={
                "widths": [encode_vec(width) for width in widths],
                "thresholds": thresholds,
                "family": encode_family(bound),
                "monotonicity": evidence.to_json(),
            },
        ),
    )
    steps.append(_domination_step(family, x, chain_report, widths))

    certificate = ConvergenceCertificate(family, x, bound)
    steps.append(
        Step(
            "proof_certificate",
            "the chain-built family dominates |value(k) − x| at every index",
            passed=certificate.validate(config.horizon),
            evidence=certificate.to_json(),
        ),
    )

    outcome = order_converges(family, x)
    converged = isinstance(outcome, ConvergenceCertificate) and outcome.validate(config.horizon)
    steps.append(
        Step(
            "order_converges",
            f"order limit {outcome.limit}",
            passed=converged,
            evidence=outcome.to_json(),
        ),
    )
    if all(step.passed for step in steps):
        return TheoremReport(THEOREM_ID, inputs, steps, Conclusion.CONFIRMED, notes)
    if not converged:
        notes.append("order convergence refuted; the finite catalog does not prove the hypothesis")
        logger.info("Interval-convergence check inconclusive for %r.", family)
        return TheoremReport(THEOREM_ID, inputs, steps, Conclusion.INCONCLUSIVE, notes)
    return TheoremReport(
        THEOREM_ID,
        inputs,
        steps,
        Conclusion.COUNTEREXAMPLE_FOUND,
        notes,
        contradiction=True,
    )
