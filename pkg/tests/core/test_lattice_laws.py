import unittest
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from src.riesz.lattice import TAIL_SEQ, Vec, absolute, neg, normalize, pos, scale

from ..strategies import (
    MAX_PREFIX,
    acceptance,
    non_negative_rationals,
    rationals,
    vector_triples,
    vectors,
)


class LatticeLawsTest(unittest.TestCase):
    """Property tests for the vector-lattice laws."""

    @acceptance
    @given(vector_triples())
    def test_sup_and_inf_are_bounds(self, triple: tuple[Vec, Vec, Vec]) -> None:
        x, y, _ = triple
        self.assertTrue(x <= x | y)
        self.assertTrue(y <= x | y)
        self.assertTrue(x & y <= x)
        self.assertTrue(x & y <= y)

    @acceptance
    @given(vector_triples())
    def test_sup_is_least_upper_bound(self, triple: tuple[Vec, Vec, Vec]) -> None:
        x, y, z = triple
        self.assertEqual((x <= z and y <= z), x | y <= z)
        self.assertEqual((z <= x and z <= y), z <= x & y)

    @acceptance
    @given(vector_triples())
    def test_commutativity(self, triple: tuple[Vec, Vec, Vec]) -> None:
        x, y, _ = triple
        self.assertEqual(x | y, y | x)
        self.assertEqual(x & y, y & x)

    @acceptance
    @given(vector_triples())
    def test_associativity(self, triple: tuple[Vec, Vec, Vec]) -> None:
        x, y, z = triple
        self.assertEqual((x | y) | z, x | (y | z))
        self.assertEqual((x & y) & z, x & (y & z))

    @acceptance
    @given(vectors())
    def test_idempotence(self, x: Vec) -> None:
        self.assertEqual(x, x | x)
        self.assertEqual(x, x & x)

    @acceptance
    @given(vector_triples())
    def test_absorption(self, triple: tuple[Vec, Vec, Vec]) -> None:
        x, y, _ = triple
        self.assertEqual(x, x | (x & y))
        self.assertEqual(x, x & (x | y))

    @acceptance
    @given(vector_triples())
    def test_distributivity(self, triple: tuple[Vec, Vec, Vec]) -> None:
        x, y, z = triple
        self.assertEqual(x & (y | z), (x & y) | (x & z))
        self.assertEqual(x | (y & z), (x | y) & (x | z))

    @acceptance
    @given(vector_triples())
    def test_translation_invariance(self, triple: tuple[Vec, Vec, Vec]) -> None:
        x, y, z = triple
        self.assertEqual((x | y) + z, (x + z) | (y + z))
        self.assertEqual(x <= y, x + z <= y + z)

    @acceptance
    @given(vector_triples(), non_negative_rationals())
    def test_scale_covariance(self, triple: tuple[Vec, Vec, Vec], t: Fraction) -> None:
        x, y, _ = triple
        self.assertEqual(scale(t, x | y), scale(t, x) | scale(t, y))
        self.assertEqual(scale(t, x & y), scale(t, x) & scale(t, y))
        if x <= y:
            self.assertTrue(scale(t, x) <= scale(t, y))

    @acceptance
    @given(vector_triples())
    def test_riesz_identity(self, triple: tuple[Vec, Vec, Vec]) -> None:
        x, y, _ = triple
        self.assertEqual(x + y, (x | y) + (x & y))

    @acceptance
    @given(vectors())
    def test_positive_and_negative_parts(self, x: Vec) -> None:
        self.assertEqual(x, pos(x) - neg(x))
        self.assertEqual(absolute(x), pos(x) + neg(x))
        self.assertTrue((pos(x) & neg(x)).is_zero)

    @acceptance
    @given(vectors())
    def test_normalize_is_idempotent(self, x: Vec) -> None:
        once = normalize(x)
        self.assertEqual(x, once)
        self.assertEqual(once, normalize(once))
        self.assertEqual(once.prefix, normalize(once).prefix)
        self.assertEqual(once.tail, normalize(once).tail)

    @acceptance
    @given(
        st.lists(rationals(), max_size=MAX_PREFIX),
        rationals(),
        st.integers(min_value=0, max_value=MAX_PREFIX),
    )
    def test_equality_ignores_tail_padding(
        self,
        prefix: list[Fraction],
        tail: Fraction,
        padding: int,
    ) -> None:
        short = Vec(TAIL_SEQ, prefix, tail)
        padded = Vec(TAIL_SEQ, [*prefix, *([tail] * padding)], tail)
        self.assertEqual(short, padded)
        self.assertEqual(hash(short), hash(padded))
        self.assertEqual(short.prefix, padded.prefix)
