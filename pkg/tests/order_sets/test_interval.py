import unittest
from fractions import Fraction

from src.riesz.lattice import Vec
from src.riesz.sets import Interval, IntervalSemantics, InvalidIntervalError

PARTIAL = IntervalSemantics.STRICT_PARTIAL
UNIFORM = IntervalSemantics.STRICT_UNIFORM


class IntervalTest(unittest.TestCase):
    """Unit tests for order intervals."""

    def setUp(self) -> None:
        self.origin = Vec.fin_dim([0, 0])
        self.corner = Vec.fin_dim([1, 1])

    def test_exception_raised_when_endpoints_are_not_ordered(self) -> None:
        with self.assertRaises(InvalidIntervalError) as cm:
            _ = Interval.closed(Vec.fin_dim([1, 0]), Vec.fin_dim([0, 1]))
        self.assertEqual(Vec.fin_dim([1, 0]), cm.exception.lo)

    def test_degenerate_open_interval_depends_on_semantics(self) -> None:
        axis = Vec.fin_dim([1, 0])
        # Test passes if it simply doesn't throw an exception
        _ = Interval.open(self.origin, axis, PARTIAL)
        with self.assertRaises(InvalidIntervalError):
            _ = Interval.open(self.origin, axis, UNIFORM)
        with self.assertRaises(InvalidIntervalError):
            _ = Interval.open(self.origin, self.origin, PARTIAL)

    def test_open_interval_membership(self) -> None:
        partial = Interval.open(self.origin, self.corner, PARTIAL)
        uniform = Interval.open(self.origin, self.corner, UNIFORM)
        for point, in_partial, in_uniform in [
            (Vec.fin_dim([Fraction(1, 2), Fraction(1, 2)]), True, True),
            (Vec.fin_dim([Fraction(1, 2), 1]), True, False),
            (Vec.fin_dim([0, 1]), True, False),
            (self.corner, False, False),
            (self.origin, False, False),
            (Vec.fin_dim([2, Fraction(1, 2)]), False, False),
        ]:
            with self.subTest(point=point):
                self.assertEqual(in_partial, partial.contains(point))
                self.assertEqual(in_uniform, uniform.contains(point))

    def test_closed_interval_membership(self) -> None:
        interval = Interval.closed(self.origin, self.corner)
        self.assertTrue(interval.contains(self.corner))
        self.assertTrue(interval.contains(self.origin))
        self.assertFalse(interval.contains(Vec.fin_dim([-1, 0])))

    def test_tail_seq_membership_checks_the_tail(self) -> None:
        interval = Interval.open(Vec.tail_seq([], -1), Vec.tail_seq([], 1), UNIFORM)
        self.assertTrue(interval.contains(Vec.tail_seq([0, Fraction(1, 2)], 0)))
        self.assertFalse(interval.contains(Vec.tail_seq([0], 1)))

    def test_projection(self) -> None:
        partial = Interval.open(self.origin, self.corner, PARTIAL)
        uniform = Interval.open(self.origin, self.corner, UNIFORM)
        axis = Interval.open(self.origin, Vec.fin_dim([1, 0]), PARTIAL)
        for interval, position, low_closed, high_closed in [
            (partial, 0, True, True),
            (uniform, 0, False, False),
            (axis, 0, False, False),
            (axis, 1, True, True),
        ]:
            with self.subTest(interval=interval, position=position):
                projection = interval.projection(position)
                self.assertEqual(low_closed, projection.low_closed)
                self.assertEqual(high_closed, projection.high_closed)
        self.assertTrue(partial.projection(0).contains(Fraction(1)))
        self.assertFalse(uniform.projection(0).contains(Fraction(1)))

    def test_translated_and_scaled(self) -> None:
        interval = Interval.closed(self.origin, self.corner)
        self.assertEqual(
            Interval.closed(self.corner, Vec.fin_dim([2, 2])),
            interval.translated(self.corner),
        )
        self.assertEqual(
            Interval.closed(Vec.fin_dim([-2, -2]), self.origin),
            interval.scaled(Fraction(-2)),
        )

    def test_width(self) -> None:
        interval = Interval.open(Vec.fin_dim([-1, 0]), Vec.fin_dim([1, 3]))
        self.assertEqual(Vec.fin_dim([2, 3]), interval.width)
