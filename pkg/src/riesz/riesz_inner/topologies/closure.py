"""Module for the quasi-order closure, order closure and order openness checks."""

# ruff: noqa: TID252

import logging

from ..config import DEFAULT_CONFIG, SearchConfig
from ..core import Carrier
from ..order_sets import Complement, SetExpr, push_complement
from .rules import closure_trace
from .search import search_witness
from .verdict import SearchReport, Verdict

logger = logging.getLogger(__name__)


def _check(
    expression: SetExpr,
    carrier: Carrier | None,
    config: SearchConfig,
    *,
    monotone: bool,
) -> Verdict:
    trace = closure_trace(push_complement(expression))
    if trace is not None:
        logger.debug("Certified %r by %d rule(s).", expression, len(trace))
        return Verdict.certified(trace)
    ambient = expression.carrier or carrier
    if ambient is None:
        return Verdict.unknown(
            SearchReport(
                candidates=0,
                templates={},
                grid=config.describe(),
                note="no carrier is fixed by the set or the caller",
            ),
        )
    return search_witness(expression, ambient, config, monotone=monotone)


def check_quasi_order_closed(
    expression: SetExpr,
    carrier: Carrier | None = None,
    config: SearchConfig = DEFAULT_CONFIG,
) -> Verdict:
    """Decide whether the set contains the limit of every monotone family in it.

    Certification comes from the structural rules; refutation from a
    monotone witness family found by search.
    """
    return _check(expression, carrier, config, monotone=True)


def check_order_closed(
    expression: SetExpr,
    carrier: Carrier | None = None,
    config: SearchConfig = DEFAULT_CONFIG,
) -> Verdict:
    """Decide whether the set contains the limit of every order-convergent family in it."""
    return _check(expression, carrier, config, monotone=False)


def is_order_open(
    expression: SetExpr,
    carrier: Carrier | None = None,
    config: SearchConfig = DEFAULT_CONFIG,
) -> Verdict:
    """Decide whether the complement of the set is quasi-order closed."""
    return check_quasi_order_closed(Complement(expression), carrier, config)
