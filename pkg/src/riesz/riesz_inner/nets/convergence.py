"""Module for order-convergence certificates and dominating families.

A sequence x_k order converges to x exactly when some y_k ↓ 0 dominates
|x_k − x| termwise. The dominating families built here do so from the first
index on.
"""

# ruff: noqa: TID252

from ..core import (
    Json,
    Vec,
    absolute,
    aligned_length,
    check_same_carrier,
    encode_vec,
    format_rational,
    leq,
    zero,
)
from .codec import encode_family
from .exceptions import NotConvergentError
from .family import (
    CoordDecay,
    Deviation,
    Explicit,
    Family,
    RunningSupMeet,
    Scale,
    SpliceForm,
    as_sequence_form,
    splice,
)
from .monotonicity import Direction, monotonicity
from .sequences import dominated_from


class ConvergenceCertificate:
    """Proof that a family order converges: |value(k) − limit| ≤ dominating(k)."""

    def __init__(self, family: Family, limit: Vec, dominating: Family) -> None:
        """Initialise a new convergence certificate."""
        self._family = family
        self._limit = limit
        self._dominating = dominating

    @property
    def family(self) -> Family:
        """The converging family."""
        return self._family

    @property
    def limit(self) -> Vec:
        """The order limit."""
        return self._limit

    @property
    def dominating(self) -> Family:
        """The decreasing family with limit 0 that dominates the deviations."""
        return self._dominating

    @property
    def threshold(self) -> int:
        """The index from which domination holds; it holds from the first index."""
        return 0

    def validate(self, horizon: int) -> bool:
        """Re-check the certificate.

        The dominating family must decrease to 0 by its closed form. The
        domination inequality is evaluated for the first `horizon` indices
        and decided past them by comparing how each coordinate of the
        family and of the dominating family reaches its limit.
        """
        dominating = self._dominating
        if monotonicity(dominating).direction != Direction.DECREASING:
            return False
        if not dominating.form.limit().is_zero:
            return False
        start = self._family.start
        end = start + horizon
        last = self._decided_from(end + 1)
        if last is None:
            return False
        return all(self._dominated_at(k) for k in range(start, max(end, last) + 1))

    def _dominated_at(self, k: int) -> bool:
        deviation = absolute(self._family.value(k) - self._limit)
        return leq(deviation, self._dominating.value(k))

    def _decided_from(self, start: int) -> int | None:
        """Return an index such that domination there and before implies it everywhere.

        None means domination fails for infinitely many indices, or cannot be
        decided for a splice that changes its tail against a sequence form.
        """
        family_form, bound_form = self._family.form, self._dominating.form
        if isinstance(family_form, SpliceForm) and isinstance(bound_form, SpliceForm):
            # past every width the pattern of coordinates repeats at each index
            width = max(family_form.width, bound_form.width, len(self._limit.prefix))
            return max(start, width + 1)
        family_sequences = as_sequence_form(family_form)
        bound_sequences = as_sequence_form(bound_form)
        if family_sequences is None or bound_sequences is None:
            return None
        width = max(family_sequences.width, bound_sequences.width, len(self._limit.prefix))
        last = start
        for position in family_sequences.positions(width):
            sequence = family_sequences.sequence(position)
            if sequence.limit != self._limit.coordinate(position):
                return None
            index = dominated_from(
                sequence.approach(),
                bound_sequences.sequence(position).approach(),
                start,
            )
            if index is None:
                return None
            last = max(last, index)
        return last

    def to_json(self) -> Json:
        """Return the JSON form of the certificate."""
        return {
            "converges": True,
            "limit": encode_vec(self._limit),
            "dominating": encode_family(self._dominating),
            "threshold": self.threshold,
        }

    def __repr__(self) -> str:
        """Return a string representation of the certificate for developers."""
        return (
            f"{__class__.__name__}({self._family!r}, {self._limit!r}, "
            f"{self._dominating!r})"
        )


class ConvergenceRefutation:
    """Proof that a family does not order converge to a target element."""

    def __init__(
        self,
        family: Family,
        target: Vec,
        position: int | None,
        limit: Vec,
    ) -> None:
        """Initialise a new convergence refutation."""
        self._family = family
        self._target = target
        self._position = position
        self._limit = limit

    @property
    def family(self) -> Family:
        """The family."""
        return self._family

    @property
    def target(self) -> Vec:
        """The element the family does not converge to."""
        return self._target

    @property
    def position(self) -> int | None:
        """The first position whose values do not approach the target (None is the tail)."""
        return self._position

    @property
    def limit(self) -> Vec:
        """The coordinatewise limit of the family."""
        return self._limit

    def to_json(self) -> Json:
        """Return the JSON form of the refutation."""
        position = self._position
        return {
            "converges": False,
            "position": "tail" if position is None else position,
            "limit_value": format_rational(self._limit.coordinate(position)),
            "target_value": format_rational(self._target.coordinate(position)),
        }

    def __repr__(self) -> str:
        """Return a string representation of the refutation for developers."""
        return (
            f"{__class__.__name__}({self._family!r}, {self._target!r}, "
            f"position={self._position!r})"
        )


def _first_difference(x: Vec, y: Vec) -> int | None:
    length = x.carrier.dimension or aligned_length(x, y)
    for position in range(length):
        if x.coordinate(position) != y.coordinate(position):
            return position
    return None


def order_converges(
    family: Family,
    x: Vec,
) -> ConvergenceCertificate | ConvergenceRefutation:
    """Decide whether the family order converges to x.

    Raises:
        CarrierMismatchError: x lives in a different carrier.
    """
    check_same_carrier(family.value(0), x)
    limit = family.form.limit()
    if limit != x:
        return ConvergenceRefutation(family, x, _first_difference(limit, x), limit)
    return ConvergenceCertificate(family, limit, dominating_family(family, x))


def dominating_family(family: Family, x: Vec) -> Family:
    """Return a family decreasing to 0 that dominates |value(k) − x| termwise.

    Raises:
        NotConvergentError: The family does not order converge to x.
    """
    check_same_carrier(family.value(0), x)
    form = family.form
    if form.limit() != x:
        raise NotConvergentError(family, x)
    if isinstance(form, SpliceForm):
        return splice(zero(x.carrier), absolute(form.rest - form.head))
    if isinstance(family, Scale):
        return family
    if isinstance(family, CoordDecay):
        return CoordDecay(zero(x.carrier), absolute(family.p), family.q)
    deviations = Deviation(family, x)
    if isinstance(family, Explicit):
        return Explicit([deviations.value(k) for k in range(len(family.values))])
    if isinstance(family, Deviation) and x.is_zero:
        return family
    return deviations


def running_sup_meet(family: Family, cap: Vec) -> Family:
    """Return the increasing family (family(s) ∨ ... ∨ family(k)) ∧ cap from the start s.

    Raises:
        CarrierMismatchError: The cap lives in a different carrier.
    """
    return RunningSupMeet(family, cap)
