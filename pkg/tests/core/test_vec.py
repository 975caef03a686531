import unittest
from fractions import Fraction

from src.riesz.lattice import (
    TAIL_SEQ,
    Carrier,
    CarrierMismatchError,
    DimensionError,
    InvalidCarrierError,
    PositionError,
    Vec,
    absolute,
    leq,
    neg,
    ones,
    pos,
    shift_vector,
    unit_vector,
    zero,
)


class VecTest(unittest.TestCase):
    """Unit tests for lattice elements."""

    def test_create_vec(self) -> None:
        # Test passes if it simply doesn't throw an exception
        _ = Vec.fin_dim([1, Fraction(1, 2)])
        _ = Vec.tail_seq([], 0)

    def test_exception_raised_when_dimension_is_not_positive(self) -> None:
        with self.assertRaises(InvalidCarrierError) as cm:
            _ = Carrier.fin_dim(0)
        self.assertEqual(0, cm.exception.dimension)

    def test_exception_raised_when_coordinate_count_is_wrong(self) -> None:
        with self.assertRaises(DimensionError) as cm:
            _ = Vec(Carrier.fin_dim(3), [1, 2])
        self.assertEqual(3, cm.exception.dimension)
        self.assertEqual(2, cm.exception.length)

    def test_tail_seq_storage_is_canonical(self) -> None:
        for prefix, tail, expected_prefix in [
            ([1, 0, 0], 0, (Fraction(1),)),
            ([2, 2], 2, ()),
            ([0, 1], 0, (Fraction(0), Fraction(1))),
        ]:
            with self.subTest(prefix=prefix, tail=tail):
                self.assertEqual(expected_prefix, Vec.tail_seq(prefix, tail).prefix)
        self.assertEqual(Vec.tail_seq([1, 1, 1], 1), Vec.tail_seq([], 1))

    def test_coordinate(self) -> None:
        sequence = Vec.tail_seq([3, 4], 5)
        for position, expected in [(0, 3), (1, 4), (2, 5), (100, 5), (None, 5)]:
            with self.subTest(position=position):
                self.assertEqual(expected, sequence.coordinate(position))

    def test_exception_raised_when_position_is_outside_fin_dim(self) -> None:
        vector = Vec.fin_dim([1, 2])
        for position in [2, -1, None]:
            with self.subTest(position=position), self.assertRaises(PositionError):
                _ = vector.coordinate(position)

    def test_lattice_operations(self) -> None:
        x = Vec.fin_dim([1, -2])
        y = Vec.fin_dim([-1, 3])
        self.assertEqual(Vec.fin_dim([1, 3]), x | y)
        self.assertEqual(Vec.fin_dim([-1, -2]), x & y)
        self.assertEqual(Vec.fin_dim([0, 1]), x + y)
        self.assertEqual(Vec.fin_dim([2, -5]), x - y)
        self.assertEqual(Vec.fin_dim([1, 2]), absolute(x))
        self.assertEqual(Vec.fin_dim([1, 0]), pos(x))
        self.assertEqual(Vec.fin_dim([0, 2]), neg(x))
        self.assertEqual(Vec.fin_dim([Fraction(1, 2), -1]), x / 2)

    def test_tail_seq_operations_align_prefixes(self) -> None:
        x = Vec.tail_seq([1], 0)
        y = Vec.tail_seq([0, 0, 2], 1)
        self.assertEqual(Vec.tail_seq([1, 0, 2], 1), x | y)
        self.assertEqual(Vec.tail_seq([1, 0, 2], 1), x + y)
        self.assertFalse(leq(x, y))
        self.assertTrue(leq(Vec.tail_seq([0], -1), y))

    def test_order_is_partial(self) -> None:
        x = Vec.fin_dim([1, 0])
        y = Vec.fin_dim([0, 1])
        self.assertFalse(x <= y)
        self.assertFalse(y <= x)
        self.assertTrue(x & y <= x <= x | y)

    def test_exception_raised_when_carriers_differ(self) -> None:
        with self.assertRaises(CarrierMismatchError) as cm:
            _ = Vec.fin_dim([1, 2]) + Vec.fin_dim([1, 2, 3])
        self.assertEqual(Carrier.fin_dim(2), cm.exception.expected)
        self.assertEqual(Carrier.fin_dim(3), cm.exception.actual)

    def test_builders(self) -> None:
        plane = Carrier.fin_dim(2)
        self.assertTrue(zero(plane).is_zero)
        self.assertEqual(Vec.fin_dim([1, 1]), ones(plane))
        self.assertEqual(Vec.tail_seq([], 1), ones(TAIL_SEQ))
        self.assertEqual(Vec.fin_dim([0, 1]), unit_vector(plane, 1))
        self.assertEqual(Vec.tail_seq([0, 0, 1], 0), unit_vector(TAIL_SEQ, 2))
        self.assertEqual(Vec.tail_seq([0, 0], 1), shift_vector(2))
        with self.assertRaises(PositionError):
            _ = unit_vector(plane, 2)

    def test_string_forms(self) -> None:
        self.assertEqual("(1, 1/2)", str(Vec.fin_dim([1, Fraction(1, 2)])))
        self.assertEqual("[1]/0", str(Vec.tail_seq([1], 0)))
        self.assertEqual("FinDim(2)", str(Carrier.fin_dim(2)))
        self.assertEqual("TailSeq", str(TAIL_SEQ))
