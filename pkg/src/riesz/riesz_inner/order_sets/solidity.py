"""Module for the three-valued solidity check of set expressions."""

# ruff: noqa: TID252

import logging

from ..config import DEFAULT_CONFIG, SearchConfig
from ..core import Carrier, Json, Vec, absolute, encode_vec, leq, neg, pos
from ..status import Status, status_name
from .grid import candidate_points
from .interval import IntervalSemantics
from .set_expr import (
    Band,
    Dilate,
    Ideal,
    Intersection,
    IntervalSet,
    SetExpr,
    SolidHull,
    TailZero,
    Union,
)

logger = logging.getLogger(__name__)


class SolidityVerdict:
    """Outcome of a solidity check.

    A refutation carries x in the set and y outside it with |y| ≤ |x|.
    """

    def __init__(
        self,
        status: Status,
        *,
        rule: str | None = None,
        witness: tuple[Vec, Vec] | None = None,
    ) -> None:
        """Initialise a new solidity verdict."""
        self._status = status
        self._rule = rule
        self._witness = witness

    @property
    def status(self) -> Status:
        """Whether solidity was certified, refuted or left open."""
        return self._status

    @property
    def rule(self) -> str | None:
        """The structural rule behind a certification."""
        return self._rule

    @property
    def witness(self) -> tuple[Vec, Vec] | None:
        """The pair (x, y) behind a refutation."""
        return self._witness

    def replay(self, expression: SetExpr) -> bool:
        """Return whether the witness refutes solidity of the expression."""
        if self._witness is None:
            return False
        x, y = self._witness
        return (
            leq(absolute(y), absolute(x))
            and expression.contains(x)
            and not expression.contains(y)
        )

    def to_json(self) -> Json:
        """Return the JSON form of the verdict."""
        data: dict[str, Json] = {"status": status_name(self._status)}
        if self._rule is not None:
            data["rule"] = self._rule
        if self._witness is not None:
            data["witness"] = {
                "x": encode_vec(self._witness[0]),
                "y": encode_vec(self._witness[1]),
            }
        return data

    def __repr__(self) -> str:
        """Return a string representation of the verdict for developers."""
        return (
            f"{__class__.__name__}({self._status.name}, rule={self._rule!r}, "
            f"witness={self._witness!r})"
        )


def _solid_rule(expression: SetExpr) -> str | None:  # noqa: PLR0911
    """Return the name of a structural rule proving solidity, if one applies."""
    if isinstance(expression, Ideal | Band):
        return "ideal"
    if isinstance(expression, SolidHull):
        return "solid-hull"
    if isinstance(expression, TailZero):
        return "ideal"
    if isinstance(expression, IntervalSet):
        interval = expression.interval
        if interval.lo != -interval.hi:
            return None
        if not interval.is_open:
            return "symmetric-interval"
        if interval.semantics == IntervalSemantics.STRICT_UNIFORM:
            return "symmetric-interval"
        return None
    if isinstance(expression, Intersection | Union):
        if all(_solid_rule(part) is not None for part in expression.parts):
            return "intersection" if isinstance(expression, Intersection) else "union"
        return None
    if isinstance(expression, Dilate) and _solid_rule(expression.inner) is not None:
        return "dilation"
    return None


def _dominated_candidates(x: Vec, points: list[Vec]) -> list[Vec]:
    quick = [-x, absolute(x), -absolute(x), pos(x), -neg(x)]
    modulus = absolute(x)
    return [*quick, *(y for y in points if leq(absolute(y), modulus))]


def check_solid(
    expression: SetExpr,
    carrier: Carrier | None = None,
    config: SearchConfig = DEFAULT_CONFIG,
) -> SolidityVerdict:
    """Decide whether the set is solid, when a rule or a witness settles it.

    The search runs over the points derived from the expression first and the
    configured grid after, so the witness found is deterministic.
    """
    rule = _solid_rule(expression)
    if rule is not None:
        logger.debug("Solidity of %r certified by rule %s.", expression, rule)
        return SolidityVerdict(Status.CERTIFIED, rule=rule)
    ambient = expression.carrier or carrier
    if ambient is None:
        return SolidityVerdict(Status.UNKNOWN)
    points = candidate_points(expression, ambient, config)
    members = [x for x in points if expression.contains(x)]
    logger.debug("Solidity search over %d members of %d points.", len(members), len(points))
    for x in members:
        for y in _dominated_candidates(x, points):
            if not expression.contains(y):
                return SolidityVerdict(Status.REFUTED, witness=(x, y))
    return SolidityVerdict(Status.UNKNOWN)
