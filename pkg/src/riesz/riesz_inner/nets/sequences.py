"""Module for the scalar sequences that drive coordinatewise families.

A coordinatewise family is described, position by position, by one of these
sequences. Each kind knows its limit and its monotonicity exactly and can
list the indices at which its comparison with a given rational may change.
Those finite index sets are the tail rules that make eventual membership
decidable.
"""

# ruff: noqa: TID252

import itertools
from abc import ABC, abstractmethod
from collections.abc import Callable, Sequence
from enum import IntEnum
from fractions import Fraction

from ..core import ZERO, ceil_rational, sign


def first_index(predicate: Callable[[int], bool], start: int = 0) -> int:
    """Return the least k ≥ start with predicate(k).

    The predicate must be false up to some index and true from it on.
    """
    if predicate(start):
        return start
    low, step = start, 1
    while not predicate(low + step):
        low += step
        step *= 2
    high = low + step
    while high - low > 1:
        middle = (low + high) // 2
        if predicate(middle):
            high = middle
        else:
            low = middle
    return high


class ApproachKind(IntEnum):
    """Shape of |v(k) − limit| from some index on."""

    EXACT = 1
    HARMONIC = 2
    GEOMETRIC = 3


class Approach:
    """The exact distance |v(k) − limit| from an index on.

    EXACT means the distance is 0, HARMONIC that it is scale/(k + rate) and
    GEOMETRIC that it is scale·rateᵏ, for every k ≥ start.
    """

    def __init__(
        self,
        kind: ApproachKind,
        start: int,
        scale: Fraction = ZERO,
        rate: Fraction = ZERO,
    ) -> None:
        """Initialise a new approach description."""
        self._kind = kind
        self._start = start
        self._scale = scale
        self._rate = rate

    @classmethod
    def exact(cls, start: int) -> "Approach":
        """Return the approach of a sequence equal to its limit from `start` on."""
        return cls(ApproachKind.EXACT, start)

    @property
    def kind(self) -> ApproachKind:
        """The shape of the distance."""
        return self._kind

    @property
    def start(self) -> int:
        """The index from which the shape holds."""
        return self._start

    @property
    def scale(self) -> Fraction:
        """The numerator or the initial factor."""
        return self._scale

    @property
    def rate(self) -> Fraction:
        """The index offset or the ratio."""
        return self._rate

    def later(self, start: int) -> "Approach":
        """Return the same shape, claimed only from max(start, self.start) on."""
        return Approach(self._kind, max(start, self._start), self._scale, self._rate)

    def distance(self, k: int) -> Fraction:
        """Return |v(k) − limit| for k ≥ start."""
        if self._kind == ApproachKind.HARMONIC:
            return self._scale / (k + self._rate)
        if self._kind == ApproachKind.GEOMETRIC:
            return self._scale * self._rate**k
        return ZERO

    def __repr__(self) -> str:
        """Return a string representation of the approach for developers."""
        return (
            f"{__class__.__name__}({self._kind.name}, start={self._start}, "
            f"scale='{self._scale}', rate='{self._rate}')"
        )


def dominated_from(error: Approach, bound: Approach, start: int = 0) -> int | None:
    """Return an index from which error.distance(k) ≤ bound.distance(k) for every k.

    None means the inequality fails for infinitely many k.
    """
    begin = max(start, error.start, bound.start)
    if error.kind == ApproachKind.EXACT:
        return begin
    if bound.kind == ApproachKind.EXACT:
        return None

    def holds(k: int) -> bool:
        return error.distance(k) <= bound.distance(k)

    if error.kind == ApproachKind.HARMONIC:
        if bound.kind != ApproachKind.HARMONIC or error.scale > bound.scale:
            return None
        if error.scale == bound.scale:
            return begin if bound.rate <= error.rate else None
        crossing = (error.scale * bound.rate - bound.scale * error.rate) / (
            bound.scale - error.scale
        )
        return max(begin, ceil_rational(crossing))
    if bound.kind == ApproachKind.GEOMETRIC:
        if error.rate > bound.rate:
            return None
        if error.rate == bound.rate:
            return begin if error.scale <= bound.scale else None
        return first_index(holds, begin)
    # the ratio of a geometric error to a harmonic bound decreases from here on
    turn = ceil_rational(error.rate / (1 - error.rate) - bound.rate)
    return first_index(holds, max(begin, turn))


class CoordinateSequence(ABC):
    """A rational sequence v(0), v(1), ... with an exact limit."""

    @abstractmethod
    def value(self, k: int) -> Fraction:
        """Return the term at index k ≥ 0."""

    @property
    @abstractmethod
    def limit(self) -> Fraction:
        """The limit of the sequence."""

    @abstractmethod
    def sign_changes(self, r: Fraction) -> frozenset[int]:
        """Return the indices where the sign of v(k) − r may change.

        Every k ≥ 1 with sign(v(k) − r) ≠ sign(v(k − 1) − r) is included;
        other indices may be included too.
        """

    @abstractmethod
    def approach(self) -> Approach:
        """Return how the sequence reaches its limit."""

    @abstractmethod
    def first_rise(self) -> int | None:
        """Return the least k with v(k + 1) > v(k), None when non-increasing."""

    @abstractmethod
    def first_fall(self) -> int | None:
        """Return the least k with v(k + 1) < v(k), None when non-decreasing."""

    @property
    def non_increasing(self) -> bool:
        """Whether v(k + 1) ≤ v(k) for every k."""
        return self.first_rise() is None

    @property
    def non_decreasing(self) -> bool:
        """Whether v(k + 1) ≥ v(k) for every k."""
        return self.first_fall() is None

    @property
    def length(self) -> int:
        """The number of explicitly listed terms (0 for closed-form sequences)."""
        return 0


class _MonotoneSequence(CoordinateSequence):
    @property
    @abstractmethod
    def _decreasing(self) -> bool: ...

    def _departure(self) -> int | None:
        """Return the last index before the first term that differs from v(0)."""
        first = self.value(0)
        if self.limit == first:
            return None
        high = 1
        while self.value(high) == first:
            high *= 2
        low = 0
        while high - low > 1:
            middle = (low + high) // 2
            if self.value(middle) == first:
                low = middle
            else:
                high = middle
        return low

    def first_rise(self) -> int | None:
        """Return the least k with v(k + 1) > v(k), None when non-increasing."""
        return None if self._decreasing else self._departure()

    def first_fall(self) -> int | None:
        """Return the least k with v(k + 1) < v(k), None when non-decreasing."""
        return self._departure() if self._decreasing else None


class ConstantSequence(CoordinateSequence):
    """The constant sequence c, c, c, ..."""

    def __init__(self, c: Fraction) -> None:
        """Initialise a new constant sequence."""
        self._c = c

    def value(self, k: int) -> Fraction:
        """Return c."""
        del k
        return self._c

    @property
    def limit(self) -> Fraction:
        """The constant."""
        return self._c

    def sign_changes(self, r: Fraction) -> frozenset[int]:
        """Return the empty set."""
        del r
        return frozenset()

    def approach(self) -> Approach:
        """Return the exact approach from 0."""
        return Approach.exact(0)

    def first_rise(self) -> int | None:
        """Return None."""
        return None

    def first_fall(self) -> int | None:
        """Return None."""
        return None

    def __repr__(self) -> str:
        """Return a string representation of the sequence for developers."""
        return f"{__class__.__name__}('{self._c}')"


class ExplicitSequence(CoordinateSequence):
    """Finitely many listed terms, after which the last one repeats."""

    def __init__(self, values: Sequence[Fraction]) -> None:
        """Initialise a new explicit sequence.

        Raises:
            ValueError: No terms were given.
        """
        if not values:
            msg = "An explicit sequence needs at least one term."
            raise ValueError(msg)
        terms = list(values)
        while len(terms) > 1 and terms[-1] == terms[-2]:
            terms.pop()
        self._values = tuple(terms)

    @property
    def values(self) -> tuple[Fraction, ...]:
        """The listed terms, without repeats of the last one."""
        return self._values

    @property
    def length(self) -> int:
        """The number of listed terms."""
        return len(self._values)

    def value(self, k: int) -> Fraction:
        """Return the listed term, or the last one beyond the list."""
        return self._values[min(k, len(self._values) - 1)]

    @property
    def limit(self) -> Fraction:
        """The last listed term."""
        return self._values[-1]

    def sign_changes(self, r: Fraction) -> frozenset[int]:
        """Return every listed index after the first."""
        del r
        return frozenset(range(1, len(self._values)))

    def approach(self) -> Approach:
        """Return the exact approach from the last listed index."""
        return Approach.exact(len(self._values) - 1)

    def first_rise(self) -> int | None:
        """Return the least k with v(k + 1) > v(k), None when non-increasing."""
        pairs = itertools.pairwise(self._values)
        return next((k for k, (a, b) in enumerate(pairs) if b > a), None)

    def first_fall(self) -> int | None:
        """Return the least k with v(k + 1) < v(k), None when non-decreasing."""
        pairs = itertools.pairwise(self._values)
        return next((k for k, (a, b) in enumerate(pairs) if b < a), None)

    def __repr__(self) -> str:
        """Return a string representation of the sequence for developers."""
        terms = ", ".join(f"'{value}'" for value in self._values)
        return f"{__class__.__name__}([{terms}])"


class GeometricSequence(_MonotoneSequence):
    """The sequence v·λᵏ with v ≥ 0 and 0 < λ < 1."""

    def __init__(self, v: Fraction, ratio: Fraction) -> None:
        """Initialise a new geometric sequence."""
        self._v = v
        self._ratio = ratio

    @property
    def _decreasing(self) -> bool:
        return True

    def value(self, k: int) -> Fraction:
        """Return v·λᵏ."""
        return self._v * self._ratio**k

    @property
    def limit(self) -> Fraction:
        """Zero."""
        return Fraction(0)

    def sign_changes(self, r: Fraction) -> frozenset[int]:
        """Return the index where v·λᵏ first drops to r or below."""
        if self._v == 0 or r <= 0:
            return frozenset()
        k, current = 0, self._v
        while current > r:
            current *= self._ratio
            k += 1
        return frozenset({k, k + 1}) if current == r else frozenset({k})

    def approach(self) -> Approach:
        """Return |v|·λᵏ."""
        if self._v == 0:
            return Approach.exact(0)
        return Approach(ApproachKind.GEOMETRIC, 0, abs(self._v), self._ratio)

    def __repr__(self) -> str:
        """Return a string representation of the sequence for developers."""
        return f"{__class__.__name__}('{self._v}', '{self._ratio}')"


class HarmonicSequence(_MonotoneSequence):
    """The sequence c + p/(k + 1 + q) with q ≥ 0."""

    def __init__(self, c: Fraction, p: Fraction, q: Fraction) -> None:
        """Initialise a new harmonic sequence."""
        self._c = c
        self._p = p
        self._q = q

    @property
    def _decreasing(self) -> bool:
        return self._p > 0

    def value(self, k: int) -> Fraction:
        """Return c + p/(k + 1 + q)."""
        return self._c + self._p / (k + 1 + self._q)

    @property
    def limit(self) -> Fraction:
        """The offset c."""
        return self._c

    def sign_changes(self, r: Fraction) -> frozenset[int]:
        """Return the indices around the solution of p/(k + 1 + q) = r − c."""
        gap = r - self._c
        if self._p == 0 or gap == 0 or self._p / gap <= 0:
            return frozenset()
        crossing = self._p / gap - 1 - self._q
        first = max(ceil_rational(crossing), 0)
        return frozenset({first, first + 1})

    def approach(self) -> Approach:
        """Return |p|/(k + 1 + q)."""
        if self._p == 0:
            return Approach.exact(0)
        return Approach(ApproachKind.HARMONIC, 0, abs(self._p), 1 + self._q)

    def __repr__(self) -> str:
        """Return a string representation of the sequence for developers."""
        return f"{__class__.__name__}('{self._c}', '{self._p}', '{self._q}')"


class ClampSequence(_MonotoneSequence):
    """The sequence min(cap, f(k)) for a non-decreasing sequence f."""

    def __init__(self, inner: CoordinateSequence, cap: Fraction) -> None:
        """Initialise a new clamped sequence.

        Raises:
            ValueError: The inner sequence is not non-decreasing.
        """
        if not inner.non_decreasing:
            msg = f"Sequence [{inner!r}] must be non-decreasing to be clamped."
            raise ValueError(msg)
        self._inner = inner
        self._cap = cap

    @property
    def _decreasing(self) -> bool:
        return False

    def value(self, k: int) -> Fraction:
        """Return min(cap, f(k))."""
        return min(self._cap, self._inner.value(k))

    @property
    def limit(self) -> Fraction:
        """min(cap, lim f)."""
        return min(self._cap, self._inner.limit)

    def sign_changes(self, r: Fraction) -> frozenset[int]:
        """Return where f crosses r or the cap."""
        return self._inner.sign_changes(r) | self._inner.sign_changes(self._cap)

    def approach(self) -> Approach:
        """Return the approach of f, or the exact one once f reaches the cap."""
        inner, cap = self._inner, self._cap
        if inner.limit <= cap:
            return inner.approach()
        return Approach.exact(first_index(lambda k: inner.value(k) >= cap))

    def __repr__(self) -> str:
        """Return a string representation of the sequence for developers."""
        return f"{__class__.__name__}({self._inner!r}, '{self._cap}')"


class DeviationSequence(_MonotoneSequence):
    """The sequence sup_{j ≥ k} |f(j) − center| for a monotone sequence f.

    For monotone f with limit L this is max(|f(k) − center|, |L − center|).
    """

    def __init__(self, inner: CoordinateSequence, center: Fraction) -> None:
        """Initialise a new deviation sequence.

        Raises:
            ValueError: The inner sequence is not monotone.
        """
        if not (inner.non_increasing or inner.non_decreasing):
            msg = f"Sequence [{inner!r}] must be monotone."
            raise ValueError(msg)
        self._inner = inner
        self._center = center
        self._spread = abs(inner.limit - center)

    @property
    def _decreasing(self) -> bool:
        return True

    def value(self, k: int) -> Fraction:
        """Return max(|f(k) − center|, |L − center|)."""
        return max(abs(self._inner.value(k) - self._center), self._spread)

    @property
    def limit(self) -> Fraction:
        """|L − center|."""
        return self._spread

    def sign_changes(self, r: Fraction) -> frozenset[int]:
        """Return where f crosses center − r or center + r."""
        below = self._inner.sign_changes(self._center - r)
        return below | self._inner.sign_changes(self._center + r)

    def approach(self) -> Approach:
        """Return the approach of f, or the exact one once f is within the spread."""
        inner, center, spread = self._inner, self._center, self._spread
        side = sign(inner.value(0) - inner.limit)
        if side == 0:
            return Approach.exact(0)
        if spread == 0 or side == sign(inner.limit - center):
            return inner.approach()
        return Approach.exact(first_index(lambda k: abs(inner.value(k) - center) <= spread))

    def __repr__(self) -> str:
        """Return a string representation of the sequence for developers."""
        return f"{__class__.__name__}({self._inner!r}, '{self._center}')"


class PrefixedSequence(CoordinateSequence):
    """Listed terms for the first indices, then a monotone sequence."""

    def __init__(self, head: Sequence[Fraction], rest: CoordinateSequence) -> None:
        """Initialise a new prefixed sequence.

        Raises:
            ValueError: The rest is not monotone.
        """
        if not (rest.non_increasing or rest.non_decreasing):
            msg = f"Sequence [{rest!r}] must be monotone."
            raise ValueError(msg)
        self._head = tuple(head)
        self._rest = rest

    @property
    def length(self) -> int:
        """The number of listed terms, or the length of the rest if longer."""
        return max(len(self._head), self._rest.length)

    def value(self, k: int) -> Fraction:
        """Return the listed term, or rest(k) beyond the list."""
        if k < len(self._head):
            return self._head[k]
        return self._rest.value(k)

    @property
    def limit(self) -> Fraction:
        """The limit of the rest."""
        return self._rest.limit

    def sign_changes(self, r: Fraction) -> frozenset[int]:
        """Return every index up to the end of the list, then those of the rest."""
        count = len(self._head)
        later = {k for k in self._rest.sign_changes(r) if k > count}
        return frozenset(range(1, count + 1)) | later

    def approach(self) -> Approach:
        """Return the approach of the rest past the list."""
        return self._rest.approach().later(len(self._head))

    def _step_in_rest(self, *, rising: bool) -> int | None:
        rest, count = self._rest, len(self._head)
        moving = rest.non_decreasing if rising else rest.non_increasing
        start = rest.value(count)
        if not moving or start == rest.limit:
            return None
        return first_index(lambda k: rest.value(k + 1) != start, count)

    def first_rise(self) -> int | None:
        """Return the least k with v(k + 1) > v(k), None when non-increasing."""
        steps = range(len(self._head))
        rise = next((k for k in steps if self.value(k + 1) > self.value(k)), None)
        return rise if rise is not None else self._step_in_rest(rising=True)

    def first_fall(self) -> int | None:
        """Return the least k with v(k + 1) < v(k), None when non-decreasing."""
        steps = range(len(self._head))
        fall = next((k for k in steps if self.value(k + 1) < self.value(k)), None)
        return fall if fall is not None else self._step_in_rest(rising=False)

    def __repr__(self) -> str:
        """Return a string representation of the sequence for developers."""
        terms = ", ".join(f"'{value}'" for value in self._head)
        return f"{__class__.__name__}([{terms}], {self._rest!r})"


def running_max(sequence: CoordinateSequence) -> CoordinateSequence:
    """Return the sequence max_{j ≤ k} v(j).

    Raises:
        ValueError: The sequence is neither listed nor monotone.
    """
    if isinstance(sequence, ExplicitSequence):
        return ExplicitSequence(list(itertools.accumulate(sequence.values, max)))
    if sequence.non_decreasing:
        return sequence
    if sequence.non_increasing:
        return ConstantSequence(sequence.value(0))
    msg = f"Sequence [{sequence!r}] has no closed-form running maximum."
    raise ValueError(msg)


def clamp(sequence: CoordinateSequence, cap: Fraction) -> CoordinateSequence:
    """Return the sequence min(cap, v(k)) for a listed or non-decreasing sequence."""
    if isinstance(sequence, ConstantSequence):
        return ConstantSequence(min(cap, sequence.limit))
    if isinstance(sequence, ExplicitSequence):
        return ExplicitSequence([min(cap, value) for value in sequence.values])
    return ClampSequence(sequence, cap)


def deviation(sequence: CoordinateSequence, center: Fraction) -> CoordinateSequence:
    """Return the sequence sup_{j ≥ k} |v(j) − center|."""
    if isinstance(sequence, ConstantSequence):
        return ConstantSequence(abs(sequence.limit - center))
    if isinstance(sequence, ExplicitSequence):
        suprema: list[Fraction] = []
        running = abs(sequence.limit - center)
        for value in reversed(sequence.values):
            running = max(running, abs(value - center))
            suprema.append(running)
        return ExplicitSequence(suprema[::-1])
    return DeviationSequence(sequence, center)


def from_index(sequence: CoordinateSequence, start: int) -> CoordinateSequence:
    """Return the sequence v(max(k, start)), which ignores the terms before start."""
    if start == 0 or isinstance(sequence, ConstantSequence):
        return sequence
    if isinstance(sequence, ExplicitSequence):
        count = max(sequence.length, start + 1)
        return ExplicitSequence([sequence.value(max(k, start)) for k in range(count)])
    return PrefixedSequence([sequence.value(start)] * start, sequence)
