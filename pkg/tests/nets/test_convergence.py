import unittest
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from src.riesz.lattice import TAIL_SEQ, Vec, ones, zero
from src.riesz.nets import (
    ConvergenceCertificate,
    ConvergenceRefutation,
    CoordDecay,
    Explicit,
    NotConvergentError,
    Scale,
    Shift,
    ShiftUp,
    dominating_family,
    order_converges,
)
from src.riesz.riesz_inner.nets import Approach, ApproachKind, PrefixedSequence, dominated_from
from src.riesz.riesz_inner.nets.sequences import HarmonicSequence

from ..strategies import fin_dim_vectors


class ConvergenceTest(unittest.TestCase):
    """Unit tests for order-convergence certificates and refutations."""

    def test_certificates_validate(self) -> None:
        for family, limit in [
            (Shift(), zero(TAIL_SEQ)),
            (ShiftUp(), ones(TAIL_SEQ)),
            (Scale(Vec.fin_dim([1, 1]), Fraction(1, 2)), Vec.fin_dim([0, 0])),
            (CoordDecay(Vec.fin_dim([0, 0]), Vec.fin_dim([1, -1])), Vec.fin_dim([0, 0])),
            (
                Explicit([Vec.fin_dim([3]), Vec.fin_dim([-1]), Vec.fin_dim([2])]),
                Vec.fin_dim([2]),
            ),
        ]:
            with self.subTest(family=family):
                outcome = order_converges(family, limit)
                self.assertIsInstance(outcome, ConvergenceCertificate)
                assert isinstance(outcome, ConvergenceCertificate)
                self.assertTrue(outcome.validate(40))
                self.assertEqual(0, outcome.threshold)
                self.assertTrue(outcome.to_json()["converges"])

    def test_shift_is_dominated_by_itself(self) -> None:
        self.assertEqual(Shift(), dominating_family(Shift(), zero(TAIL_SEQ)))

    def test_refutation(self) -> None:
        family = Scale(Vec.fin_dim([1, 1]), Fraction(1, 2))
        outcome = order_converges(family, Vec.fin_dim([1, 0]))
        self.assertIsInstance(outcome, ConvergenceRefutation)
        self.assertEqual(
            {"converges": False, "position": 0, "limit_value": "0", "target_value": "1"},
            outcome.to_json(),
        )

    def test_refutation_at_the_tail(self) -> None:
        outcome = order_converges(Shift(), ones(TAIL_SEQ))
        self.assertIsInstance(outcome, ConvergenceRefutation)
        self.assertEqual("tail", outcome.to_json()["position"])

    def test_exception_raised_when_dominating_a_divergent_target(self) -> None:
        with self.assertRaises(NotConvergentError) as cm:
            _ = dominating_family(Shift(), ones(TAIL_SEQ))
        self.assertEqual(ones(TAIL_SEQ), cm.exception.target)

    @given(
        fin_dim_vectors(2),
        fin_dim_vectors(2),
        st.fractions(min_value=0, max_value=4, max_denominator=3),
    )
    def test_coord_decay_always_certified(self, c: Vec, p: Vec, q: Fraction) -> None:
        outcome = order_converges(CoordDecay(c, p, q), c)
        self.assertIsInstance(outcome, ConvergenceCertificate)
        assert isinstance(outcome, ConvergenceCertificate)
        self.assertTrue(outcome.validate(20))

    def test_domination_failing_past_the_horizon_is_rejected(self) -> None:
        line = Vec.fin_dim([0])
        one, two, big = Vec.fin_dim([1]), Vec.fin_dim([2]), Vec.fin_dim([64])
        for name, family, dominating in [
            # 2/(k + 20) exceeds 1/(k + 1) from k = 19 on
            ("harmonic", CoordDecay(line, two, 19), CoordDecay(line, one)),
            # 1/(k + 1) exceeds 64·2⁻ᵏ from k = 11 on
            ("geometric", CoordDecay(line, one), Scale(big, Fraction(1, 2))),
        ]:
            with self.subTest(name=name):
                self.assertTrue(all(family.value(k) <= dominating.value(k) for k in range(6)))
                certificate = ConvergenceCertificate(family, line, dominating)
                self.assertFalse(certificate.validate(5))

    def test_domination_decided_past_the_horizon_is_accepted(self) -> None:
        line = Vec.fin_dim([0])
        certificate = ConvergenceCertificate(
            Scale(Vec.fin_dim([1]), Fraction(1, 2)),
            line,
            CoordDecay(line, Vec.fin_dim([1])),
        )
        self.assertTrue(certificate.validate(5))

    def test_dominated_from(self) -> None:
        def harmonic(scale: Fraction, rate: Fraction) -> Approach:
            return Approach(ApproachKind.HARMONIC, 0, scale, rate)

        def geometric(scale: Fraction, rate: Fraction) -> Approach:
            return Approach(ApproachKind.GEOMETRIC, 0, scale, rate)

        half = Fraction(1, 2)
        reciprocal = harmonic(Fraction(1), Fraction(1))
        for name, error, bound, expected in [
            ("exact error", Approach.exact(3), reciprocal, 3),
            ("exact bound", reciprocal, Approach.exact(0), None),
            ("smaller numerator", harmonic(half, Fraction(1, 4)), reciprocal, 1),
            ("larger numerator", harmonic(Fraction(2), Fraction(20)), reciprocal, None),
            ("same numerator", harmonic(Fraction(1), Fraction(2)), reciprocal, 0),
            ("geometric error", geometric(Fraction(8), half), reciprocal, 6),
            ("geometric bound", reciprocal, geometric(Fraction(64), half), None),
        ]:
            with self.subTest(name=name):
                self.assertEqual(expected, dominated_from(error, bound))

    def test_prefixed_sequence_reaches_the_limit_of_its_rest(self) -> None:
        rest = HarmonicSequence(Fraction(0), Fraction(1), Fraction(0))
        sequence = PrefixedSequence([Fraction(5), Fraction(3)], rest)
        self.assertEqual(
            [5, 3, Fraction(1, 3), Fraction(1, 4)],
            [sequence.value(k) for k in range(4)],
        )
        self.assertEqual(0, sequence.limit)
        self.assertEqual(2, sequence.approach().start)
        self.assertEqual(ApproachKind.HARMONIC, sequence.approach().kind)
        self.assertIsNone(sequence.first_rise())
        self.assertEqual(0, sequence.first_fall())

    def test_exception_raised_when_prefixed_rest_is_not_monotone(self) -> None:
        harmonic = HarmonicSequence(Fraction(0), Fraction(1), Fraction(0))
        with self.assertRaises(ValueError):
            _ = PrefixedSequence([Fraction(1)], PrefixedSequence([Fraction(0)], harmonic))
