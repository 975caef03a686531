"""Module for the search configuration shared by every verdict procedure."""

from collections.abc import Iterable
from fractions import Fraction
from typing import Any, Final

from .core import RationalLike, format_rational, to_rational

_DEFAULT_GRID: Final = (
    Fraction(-2),
    Fraction(-1),
    Fraction(-1, 2),
    Fraction(0),
    Fraction(1, 2),
    Fraction(1),
    Fraction(2),
)


def _rationals(values: Iterable[RationalLike]) -> tuple[Fraction, ...]:
    return tuple(to_rational(value) for value in values)


class SearchConfig:
    """Tunable parameters of witness searches, scans and interval fitting.

    Instances are immutable; use :py:meth:`replace` to derive a variant.
    """

    def __init__(  # noqa: PLR0913
        self,
        *,
        grid: Iterable[RationalLike] = _DEFAULT_GRID,
        grid_scale: int = 1,
        scale_lambdas: Iterable[RationalLike] = (Fraction(1, 2), Fraction(1, 3)),
        scale_factors: Iterable[RationalLike] = (Fraction(1, 2), 1, 2),
        horizon: int = 1000,
        fit_budget: int = 16,
        fit_samples: int = 1000,
        max_points: int = 4096,
        tail_prefix: int = 2,
        workers: int = 1,
    ) -> None:
        """Initialise a new search configuration.

        Raises:
            ValueError: A count is out of range, or a Scale parameter is not in
                the open interval (0, 1).
        """
        self._grid = _rationals(grid)
        self._grid_scale = grid_scale
        self._scale_lambdas = _rationals(scale_lambdas)
        self._scale_factors = _rationals(scale_factors)
        self._horizon = horizon
        self._fit_budget = fit_budget
        self._fit_samples = fit_samples
        self._max_points = max_points
        self._tail_prefix = tail_prefix
        self._workers = workers
        for name, value in [
            ("grid_scale", grid_scale),
            ("horizon", horizon),
            ("fit_samples", fit_samples),
            ("max_points", max_points),
            ("workers", workers),
        ]:
            if value < 1:
                msg = f"Search parameter [{name}={value}] must be at least 1."
                raise ValueError(msg)
        if fit_budget < 0 or tail_prefix < 0:
            msg = "Search parameters [fit_budget, tail_prefix] must be non-negative."
            raise ValueError(msg)
        if not all(0 < value < 1 for value in self._scale_lambdas):
            msg = "Scale ratios must lie strictly between 0 and 1."
            raise ValueError(msg)

    @property
    def grid(self) -> tuple[Fraction, ...]:
        """The sorted coordinate values, extended by the grid scale."""
        values = set(self._grid)
        values.update(value / self._grid_scale for value in self._grid)
        return tuple(sorted(values))

    @property
    def grid_scale(self) -> int:
        """The refinement factor applied to the base grid."""
        return self._grid_scale

    @property
    def scale_lambdas(self) -> tuple[Fraction, ...]:
        """Ratios tried for Scale witness families."""
        return self._scale_lambdas

    @property
    def scale_factors(self) -> tuple[Fraction, ...]:
        """Multipliers applied to generator vectors for Scale witnesses."""
        return self._scale_factors

    @property
    def horizon(self) -> int:
        """Number of indices scanned by brute-force evidence checks."""
        return self._horizon

    @property
    def fit_budget(self) -> int:
        """Largest dyadic exponent tried by interval fitting."""
        return self._fit_budget

    @property
    def fit_samples(self) -> int:
        """Minimum number of samples for sampled containment checks."""
        return self._fit_samples

    @property
    def max_points(self) -> int:
        """Cap on the number of enumerated grid points."""
        return self._max_points

    @property
    def tail_prefix(self) -> int:
        """Longest prefix of enumerated TailSeq grid points."""
        return self._tail_prefix

    @property
    def workers(self) -> int:
        """Number of threads used by witness searches."""
        return self._workers

    def replace(self, **overrides: Any) -> "SearchConfig":  # noqa: ANN401
        """Return a copy with some parameters replaced."""
        values: dict[str, Any] = {
            "grid": self._grid,
            "grid_scale": self._grid_scale,
            "scale_lambdas": self._scale_lambdas,
            "scale_factors": self._scale_factors,
            "horizon": self._horizon,
            "fit_budget": self._fit_budget,
            "fit_samples": self._fit_samples,
            "max_points": self._max_points,
            "tail_prefix": self._tail_prefix,
            "workers": self._workers,
        }
        unknown = set(overrides) - set(values)
        if unknown:
            msg = f"Unknown search parameters {sorted(unknown)}."
            raise ValueError(msg)
        values.update(overrides)
        return SearchConfig(**values)

    def describe(self) -> dict[str, Any]:
        """Return the JSON form of the grid-related parameters.

        The worker count is left out so reports do not depend on parallelism.
        """
        return {
            "grid": [format_rational(value) for value in self.grid],
            "scale_lambdas": [format_rational(value) for value in self._scale_lambdas],
            "scale_factors": [format_rational(value) for value in self._scale_factors],
            "horizon": self._horizon,
            "fit_budget": self._fit_budget,
            "fit_samples": self._fit_samples,
            "max_points": self._max_points,
            "tail_prefix": self._tail_prefix,
        }

    def __repr__(self) -> str:
        """Return a string representation of the configuration for developers."""
        return f"{__class__.__name__}({self.describe()!r})"


DEFAULT_CONFIG: Final = SearchConfig()
