"""Module for fitting an open interval around a point of an order-open set."""

# ruff: noqa: TID252

import logging
from fractions import Fraction

from ..config import DEFAULT_CONFIG, SearchConfig
from ..core import Carrier, Json, Vec, encode_vec, ones
from ..order_sets import DEFAULT_SEMANTICS, Interval, IntervalSemantics, SetExpr
from ..status import Status
from .closure import is_order_open
from .containment import Containment, interval_within
from .exceptions import PreconditionError
from .neighborhoods import encode_interval

logger = logging.getLogger(__name__)


class IntervalFit:
    """An open interval (c − e/2^t, c + e/2^t) found inside a set."""

    def __init__(self, interval: Interval, exponent: int, containment: Containment) -> None:
        """Initialise a new interval fit."""
        self._interval = interval
        self._exponent = exponent
        self._containment = containment

    @property
    def interval(self) -> Interval:
        """The fitted interval."""
        return self._interval

    @property
    def exponent(self) -> int:
        """The dyadic exponent t of the half-width."""
        return self._exponent

    @property
    def exact(self) -> bool:
        """Whether containment in the set is proven rather than sampled."""
        return self._containment.exact

    @property
    def containment(self) -> Containment:
        """The containment check that accepted the interval."""
        return self._containment

    def to_json(self) -> Json:
        """Return the JSON form of the fit."""
        return {
            "interval": encode_interval(self._interval),
            "t": self._exponent,
            "containment": self._containment.to_json(),
        }


def interval_fit(  # noqa: PLR0913
    c: Vec,
    expression: SetExpr,
    config: SearchConfig = DEFAULT_CONFIG,
    semantics: IntervalSemantics = DEFAULT_SEMANTICS,
    *,
    carrier: Carrier | None = None,
    check_open: bool = True,
) -> IntervalFit | None:
    """Find an open interval around c that lies inside the set.

    Tries the half-widths 1/2^t along the all-ones direction for
    t = 0..`config.fit_budget` and returns the first accepted interval, or
    None when the budget runs out. Pass `check_open=False` when the caller
    already knows the set is not refuted order-open.

    Raises:
        PreconditionError: c is outside the set, or the set is refuted
            order-open.
    """
    if not expression.contains(c):
        raise PreconditionError("interval_fit", f"point [{c}] is outside the set")
    if check_open:
        verdict = is_order_open(expression, carrier or c.carrier, config)
        if verdict.status == Status.REFUTED:
            raise PreconditionError("interval_fit", "the set is refuted order-open")
    unit = ones(c.carrier)
    for exponent in range(config.fit_budget + 1):
        radius = unit * Fraction(1, 2**exponent)
        interval = Interval.open(c - radius, c + radius, semantics)
        containment = interval_within(interval, expression, config)
        if containment.contained:
            logger.debug("Fitted %s around %s at t=%d.", interval, c, exponent)
            return IntervalFit(interval, exponent, containment)
    logger.info("No interval around %s fits within budget %d.", c, config.fit_budget)
    return None


def encode_fit(fit: IntervalFit | None, c: Vec) -> Json:
    """Return the JSON form of a fit outcome for the point c."""
    if fit is None:
        return {"point": encode_vec(c), "fitted": False}
    return {"point": encode_vec(c), "fitted": True, **fit.to_json()}
