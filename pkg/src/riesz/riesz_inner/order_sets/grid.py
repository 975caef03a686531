"""Module for the deterministic candidate points used by witness searches."""

# ruff: noqa: TID252

import itertools
from collections.abc import Iterable

from ..config import SearchConfig
from ..core import Carrier, Vec, absolute, ones, unit_vector, zero
from .set_expr import SetExpr


def _unique(vectors: Iterable[Vec]) -> list[Vec]:
    return list(dict.fromkeys(vectors))


def anchor_points(expression: SetExpr, carrier: Carrier) -> list[Vec]:
    """Return points derived from the expression, in a canonical order.

    These are the embedded elements, their negatives and moduli, then 0 and
    ±1 (the strong unit).
    """
    embedded = [vector for vector in expression.vectors() if vector.carrier == carrier]
    derived: list[Vec] = []
    for vector in embedded:
        derived.extend((vector, -vector, absolute(vector), -absolute(vector)))
    unit = ones(carrier)
    derived.extend((zero(carrier), unit, -unit))
    return _unique(derived)


def grid_points(carrier: Carrier, config: SearchConfig) -> list[Vec]:
    """Return the grid points of the carrier, at most `config.max_points`.

    FinDim carriers enumerate every coordinate tuple over the grid when that
    fits the cap, and otherwise the grid multiples of the unit vectors and of
    the strong unit. TailSeq enumerates prefixes up to `config.tail_prefix`
    entries together with a tail.
    """
    grid = config.grid
    points: list[Vec] = []
    if carrier.dimension is not None:
        dimension = carrier.dimension
        if len(grid) ** dimension <= config.max_points:
            points = [
                Vec(carrier, values)
                for values in itertools.product(grid, repeat=dimension)
            ]
        else:
            unit = ones(carrier)
            points = [value * unit for value in grid]
            for index in range(dimension):
                direction = unit_vector(carrier, index)
                points.extend(value * direction for value in grid)
        return _unique(points)[: config.max_points]
    for length in range(config.tail_prefix + 1):
        for values in itertools.product(grid, repeat=length + 1):
            points.append(Vec(carrier, values[:-1], values[-1]))
            if len(points) >= config.max_points:
                return _unique(points)
    return _unique(points)


def candidate_points(
    expression: SetExpr,
    carrier: Carrier,
    config: SearchConfig,
) -> list[Vec]:
    """Return the anchor points followed by the grid points, without repeats."""
    return _unique([*anchor_points(expression, carrier), *grid_points(carrier, config)])
