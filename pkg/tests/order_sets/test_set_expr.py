import unittest
from fractions import Fraction

from src.riesz.lattice import TAIL_SEQ, Carrier, CarrierMismatchError, Vec
from src.riesz.sets import (
    Band,
    Complement,
    CoordHalfSpace,
    Dilate,
    Ideal,
    Intersection,
    Interval,
    IntervalSet,
    Relation,
    SolidHull,
    TailZero,
    Translate,
    Union,
    empty_set,
    full_space,
    member,
    push_complement,
)


class SetExprTest(unittest.TestCase):
    """Unit tests for set expressions."""

    def setUp(self) -> None:
        self.box = IntervalSet(Interval.closed(Vec.fin_dim([0, 0]), Vec.fin_dim([1, 1])))

    def test_membership(self) -> None:
        quadrant = Intersection(
            [
                CoordHalfSpace(0, Relation.AT_LEAST, 0),
                CoordHalfSpace(1, Relation.AT_LEAST, 0),
            ],
        )
        for expression, point, expected in [
            (self.box, Vec.fin_dim([1, 0]), True),
            (Complement(self.box), Vec.fin_dim([1, 0]), False),
            (
                Union([self.box, Translate(self.box, Vec.fin_dim([2, 0]))]),
                Vec.fin_dim([3, 1]),
                True,
            ),
            (Dilate(self.box, 2), Vec.fin_dim([2, 2]), True),
            (Dilate(self.box, -1), Vec.fin_dim([1, 1]), False),
            (quadrant, Vec.fin_dim([0, 5]), True),
            (quadrant, Vec.fin_dim([-1, 5]), False),
            (Ideal([Vec.fin_dim([1, 0])]), Vec.fin_dim([-9, 0]), True),
            (SolidHull([Vec.fin_dim([1, 2])]), Vec.fin_dim([1, -2]), True),
            (TailZero(), Vec.tail_seq([1, 2], 0), True),
            (TailZero(), Vec.tail_seq([], 1), False),
            (Band([Vec.tail_seq([1], 0)]), Vec.tail_seq([Fraction(1, 3)], 0), True),
            (CoordHalfSpace(None, Relation.AT_MOST, 0), Vec.tail_seq([5], -1), True),
        ]:
            with self.subTest(expression=expression, point=point):
                self.assertEqual(expected, member(expression, point))

    def test_full_and_empty(self) -> None:
        point = Vec.fin_dim([3, -3])
        self.assertTrue(member(full_space(), point))
        self.assertFalse(member(empty_set(), point))

    def test_exception_raised_when_point_is_in_another_carrier(self) -> None:
        with self.assertRaises(CarrierMismatchError):
            _ = member(self.box, Vec.fin_dim([1, 1, 1]))

    def test_exception_raised_when_dilation_factor_is_zero(self) -> None:
        with self.assertRaises(ValueError):
            _ = Dilate(self.box, 0)

    def test_carrier(self) -> None:
        self.assertEqual(Carrier.fin_dim(2), self.box.carrier)
        self.assertEqual(TAIL_SEQ, TailZero().carrier)
        self.assertIsNone(CoordHalfSpace(0, Relation.AT_MOST, 1).carrier)
        self.assertEqual(
            Carrier.fin_dim(2),
            Intersection([CoordHalfSpace(0, Relation.AT_MOST, 1), self.box]).carrier,
        )

    def test_push_complement(self) -> None:
        half = CoordHalfSpace(0, Relation.AT_MOST, 0)
        expression = Complement(Union([half, Complement(self.box)]))
        pushed = push_complement(expression)
        self.assertEqual(Intersection([Complement(half), self.box]), pushed)
        for point in [Vec.fin_dim([1, 1]), Vec.fin_dim([0, 1]), Vec.fin_dim([2, 2])]:
            with self.subTest(point=point):
                self.assertEqual(member(expression, point), member(pushed, point))

    def test_structural_equality(self) -> None:
        self.assertEqual(
            Ideal([Vec.fin_dim([1, 0])]),
            Ideal([Vec.fin_dim([1, 0])]),
        )
        self.assertNotEqual(Ideal([Vec.fin_dim([1, 0])]), Band([Vec.fin_dim([1, 0])]))
        self.assertEqual(hash(TailZero()), hash(TailZero()))
