import unittest
from fractions import Fraction

from src.riesz.lattice import TAIL_SEQ, CarrierMismatchError, Vec, ones, shift_vector, zero
from src.riesz.nets import (
    CoordDecay,
    Explicit,
    InvalidTemplateError,
    Prefixed,
    Scale,
    Shift,
    ShiftUp,
    Splice,
    running_sup_meet,
    value,
)


class FamilyTest(unittest.TestCase):
    """Unit tests for family templates."""

    def test_shift_values(self) -> None:
        family = Shift()
        self.assertEqual(1, family.start)
        self.assertEqual(ones(TAIL_SEQ), value(family, 0))
        for k in [1, 2, 5]:
            with self.subTest(k=k):
                self.assertEqual(shift_vector(k), value(family, k))

    def test_shift_up_values(self) -> None:
        family = ShiftUp()
        self.assertEqual(zero(TAIL_SEQ), value(family, 0))
        self.assertEqual(Vec.tail_seq([1, 1, 1], 0), value(family, 3))

    def test_splice_in_fin_dim(self) -> None:
        family = Splice(Vec.fin_dim([1, 1, 1]), Vec.fin_dim([5, 6, 7]))
        self.assertEqual(Vec.fin_dim([1, 6, 7]), value(family, 1))
        self.assertEqual(Vec.fin_dim([1, 1, 1]), value(family, 3))
        self.assertEqual(Vec.fin_dim([1, 1, 1]), value(family, 10))

    def test_scale_values(self) -> None:
        family = Scale(Vec.fin_dim([1, 2]), Fraction(1, 2))
        self.assertEqual(Vec.fin_dim([1, 2]), value(family, 0))
        self.assertEqual(Vec.fin_dim([Fraction(1, 8), Fraction(1, 4)]), value(family, 3))

    def test_coord_decay_values(self) -> None:
        family = CoordDecay(Vec.fin_dim([1, 0]), Vec.fin_dim([1, -2]), 1)
        self.assertEqual(Vec.fin_dim([Fraction(3, 2), -1]), value(family, 0))
        self.assertEqual(Vec.fin_dim([Fraction(5, 4), Fraction(-1, 2)]), value(family, 2))

    def test_explicit_values_repeat_the_last(self) -> None:
        family = Explicit([Vec.fin_dim([3]), Vec.fin_dim([1])])
        self.assertEqual(Vec.fin_dim([3]), value(family, 0))
        self.assertEqual(Vec.fin_dim([1]), value(family, 1))
        self.assertEqual(Vec.fin_dim([1]), value(family, 7))

    def test_running_sup_meet_values(self) -> None:
        base = Explicit([Vec.fin_dim([1]), Vec.fin_dim([3]), Vec.fin_dim([0])])
        family = running_sup_meet(base, Vec.fin_dim([2]))
        for k, expected in [(0, 1), (1, 2), (2, 2), (9, 2)]:
            with self.subTest(k=k):
                self.assertEqual(Vec.fin_dim([expected]), value(family, k))

    def test_running_sup_meet_starts_with_its_base(self) -> None:
        family = running_sup_meet(Shift(), ones(TAIL_SEQ))
        self.assertEqual(1, family.start)
        for k in [1, 2, 5]:
            with self.subTest(k=k):
                self.assertEqual(Vec.tail_seq([0], 1), value(family, k))
        rising = running_sup_meet(ShiftUp(), ones(TAIL_SEQ))
        self.assertEqual(Vec.tail_seq([1, 1, 1], 0), value(rising, 3))

    def test_prefixed_values(self) -> None:
        rest = CoordDecay(Vec.fin_dim([0]), Vec.fin_dim([1]))
        family = Prefixed([Vec.fin_dim([5]), Vec.fin_dim([-2])], rest)
        self.assertEqual(Vec.fin_dim([5]), value(family, 0))
        self.assertEqual(Vec.fin_dim([-2]), value(family, 1))
        self.assertEqual(Vec.fin_dim([Fraction(1, 4)]), value(family, 3))
        self.assertEqual(Vec.fin_dim([0]), family.form.limit())

    def test_exception_raised_when_template_is_invalid(self) -> None:
        for construct, template in [
            (lambda: Scale(Vec.fin_dim([1]), 1), "scale"),
            (lambda: Scale(Vec.fin_dim([1]), 0), "scale"),
            (lambda: Scale(Vec.fin_dim([-1]), Fraction(1, 2)), "scale"),
            (lambda: CoordDecay(Vec.fin_dim([0]), Vec.fin_dim([1]), -1), "coord-decay"),
            (lambda: Explicit([]), "explicit"),
            (
                lambda: Prefixed([], Splice(zero(TAIL_SEQ), Vec.tail_seq([], Fraction(1, 20)))),
                "prefixed",
            ),
        ]:
            with self.subTest(template=template), self.assertRaises(InvalidTemplateError) as cm:
                _ = construct()
            self.assertEqual(template, cm.exception.template)

    def test_exception_raised_when_carriers_differ(self) -> None:
        with self.assertRaises(CarrierMismatchError):
            _ = Explicit([Vec.fin_dim([1]), Vec.fin_dim([1, 2])])

    def test_exception_raised_when_index_is_negative(self) -> None:
        with self.assertRaises(ValueError):
            _ = value(Shift(), -1)
