import unittest
from fractions import Fraction

from src.riesz.lattice import DEFAULT_CONFIG, TAIL_SEQ, Vec, unit_vector
from src.riesz.sets import (
    Complement,
    CoordHalfSpace,
    Intersection,
    Interval,
    IntervalSemantics,
    IntervalSet,
    Relation,
)
from src.riesz.topologies import PreconditionError, encode_fit, interval_fit


class FittingTest(unittest.TestCase):
    """Unit tests for interval fitting."""

    def setUp(self) -> None:
        self.quadrant = Intersection(
            [
                Complement(CoordHalfSpace(0, Relation.AT_MOST, 0)),
                Complement(CoordHalfSpace(1, Relation.AT_MOST, 0)),
            ],
        )
        self.c = Vec.fin_dim([1, 1])

    def test_fit_in_open_quadrant(self) -> None:
        fit = interval_fit(self.c, self.quadrant)
        assert fit is not None
        self.assertEqual(1, fit.exponent)
        half = Fraction(1, 2)
        self.assertEqual(
            Interval.open(Vec.fin_dim([half, half]), Vec.fin_dim([3 * half, 3 * half])),
            fit.interval,
        )
        self.assertTrue(fit.exact)
        self.assertEqual(1, fit.to_json()["t"])

    def test_uniform_semantics_fits_the_widest_interval(self) -> None:
        fit = interval_fit(
            self.c,
            self.quadrant,
            semantics=IntervalSemantics.STRICT_UNIFORM,
        )
        assert fit is not None
        self.assertEqual(0, fit.exponent)

    def test_budget_exhausted(self) -> None:
        fit = interval_fit(self.c, self.quadrant, DEFAULT_CONFIG.replace(fit_budget=0))
        self.assertIsNone(fit)
        self.assertEqual({"point": ["1", "1"], "fitted": False}, encode_fit(fit, self.c))

    def test_exception_raised_when_point_is_outside(self) -> None:
        with self.assertRaises(PreconditionError) as cm:
            _ = interval_fit(Vec.fin_dim([-1, 1]), self.quadrant)
        self.assertEqual("interval_fit", cm.exception.operation)

    def test_exception_raised_when_set_is_not_order_open(self) -> None:
        e0 = unit_vector(TAIL_SEQ, 0)
        interval = IntervalSet(Interval.open(-e0, e0))
        with self.assertRaises(PreconditionError):
            _ = interval_fit(Vec.tail_seq([], 0), interval)
