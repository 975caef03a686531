import itertools
import random
import unittest
from fractions import Fraction

from src.riesz.lattice import TAIL_SEQ, Carrier, Vec, absolute, scale, unit_vector
from src.riesz.sets import (
    EmptyGeneratorsError,
    NotPositiveError,
    band_member,
    carrier_atoms,
    disjoint,
    ideal_member,
    is_atom,
    principal_ideal_dimension,
    solid_hull_member,
)


def random_coordinate(rng: random.Random) -> Fraction:
    """A small rational, zero half of the time."""
    if rng.random() < 0.5:
        return Fraction(0)
    return Fraction(rng.randint(-4, 4), rng.choice([1, 2, 3, 4]))


def random_fin_dim(rng: random.Random, dimension: int) -> Vec:
    return Vec.fin_dim([random_coordinate(rng) for _ in range(dimension)])


def random_vec(rng: random.Random, carrier: Carrier) -> Vec:
    if carrier.is_tail_seq:
        prefix = [random_coordinate(rng) for _ in range(rng.randint(0, 5))]
        return Vec(carrier, prefix, random_coordinate(rng))
    return random_fin_dim(rng, carrier.dimension or 1)


def double_disjoint_complement_member(generators: list[Vec], y: Vec) -> bool:
    """Membership in {G}^dd, with {G}^d spanned by the unit vectors disjoint from G."""
    dimension = y.carrier.dimension or 0
    complement = [
        unit_vector(y.carrier, index)
        for index in range(dimension)
        if all(disjoint(unit_vector(y.carrier, index), g) for g in generators)
    ]
    return all(disjoint(y, e) for e in complement)


def atom_by_disjoint_pairs(x: Vec) -> bool:
    """Whether no two non-zero disjoint u, v with 0 ≤ u, v ≤ x exist on a grid below x."""
    grid = [
        Vec.fin_dim(coords)
        for coords in itertools.product(*[(0, value / 2, value) for value in x.coords])
    ]
    return not any(
        not u.is_zero and not v.is_zero and disjoint(u, v)
        for u, v in itertools.product(grid, repeat=2)
    )


def least_factor_by_bisection(generators: list[Vec], y: Vec) -> Fraction | None:
    """The least λ with |y| ≤ λ·Σ|g|, recovered from a bisection on λ."""
    total = absolute(generators[0])
    for generator in generators[1:]:
        total = total + absolute(generator)
    modulus = absolute(y)
    low, high = Fraction(0), Fraction(2**10)
    if not modulus <= scale(high, total):
        return None
    if modulus <= scale(low, total):
        return low
    for _ in range(64):
        middle = (low + high) / 2
        if modulus <= scale(middle, total):
            high = middle
        else:
            low = middle
    return high.limit_denominator(1000)


class StructureTest(unittest.TestCase):
    """Unit tests for ideals, bands, solid hulls and atoms."""

    def test_ideal_member(self) -> None:
        generators = [Vec.fin_dim([1, 0, 2])]
        membership = ideal_member(generators, Vec.fin_dim([-3, 0, 1]))
        self.assertTrue(membership)
        self.assertEqual(Fraction(3), membership.factor)
        self.assertFalse(ideal_member(generators, Vec.fin_dim([0, 1, 0])))
        self.assertIsNone(ideal_member(generators, Vec.fin_dim([0, 1, 0])).factor)

    def test_ideal_member_in_tail_seq(self) -> None:
        generators = [Vec.tail_seq([1], 0)]
        self.assertTrue(ideal_member(generators, Vec.tail_seq([5], 0)))
        self.assertFalse(ideal_member(generators, Vec.tail_seq([0], 1)))
        self.assertTrue(ideal_member([Vec.tail_seq([], 1)], Vec.tail_seq([7, -2], 3)))

    def test_band_member(self) -> None:
        generators = [Vec.tail_seq([1], 0), Vec.tail_seq([0, 0, 1], 0)]
        self.assertTrue(band_member(generators, Vec.tail_seq([4, 0, -1], 0)))
        self.assertFalse(band_member(generators, Vec.tail_seq([4, 1], 0)))

    def test_solid_hull_member(self) -> None:
        generators = [Vec.fin_dim([1, 2])]
        self.assertTrue(solid_hull_member(generators, Vec.fin_dim([-1, 1])))
        self.assertFalse(solid_hull_member(generators, Vec.fin_dim([2, 0])))

    def test_exception_raised_when_generators_are_empty(self) -> None:
        for check in [ideal_member, band_member, solid_hull_member]:
            with self.subTest(check=check), self.assertRaises(EmptyGeneratorsError):
                _ = check([], Vec.fin_dim([1]))

    def test_disjoint(self) -> None:
        self.assertTrue(disjoint(Vec.fin_dim([1, 0]), Vec.fin_dim([0, -2])))
        self.assertFalse(disjoint(Vec.fin_dim([1, 1]), Vec.fin_dim([0, -2])))
        self.assertTrue(disjoint(Vec.tail_seq([1], 0), Vec.tail_seq([0], 1)))

    def test_is_atom(self) -> None:
        for x, expected in [
            (Vec.fin_dim([0, 2]), True),
            (Vec.fin_dim([1, 1]), False),
            (Vec.tail_seq([0, 0, 3], 0), True),
            (Vec.tail_seq([], 1), False),
        ]:
            with self.subTest(x=x):
                self.assertEqual(expected, is_atom(x))

    def test_exception_raised_when_atom_candidate_is_not_positive(self) -> None:
        for x in [Vec.fin_dim([-1, 0]), Vec.fin_dim([0, 0])]:
            with self.subTest(x=x), self.assertRaises(NotPositiveError) as cm:
                _ = is_atom(x)
            self.assertEqual(x, cm.exception.value)

    def test_principal_ideal_dimension(self) -> None:
        self.assertEqual(2, principal_ideal_dimension(Vec.tail_seq([1, 0, 2], 0)))
        self.assertIsNone(principal_ideal_dimension(Vec.tail_seq([], 1)))
        self.assertEqual(3, principal_ideal_dimension(Vec.fin_dim([1, -1, 2])))

    def test_carrier_atoms(self) -> None:
        plane = carrier_atoms(Carrier.fin_dim(3))
        self.assertTrue(plane.atomic)
        self.assertEqual(3, plane.count)
        self.assertEqual([Vec.fin_dim([1, 0, 0]), Vec.fin_dim([0, 1, 0])], plane.directions(2))
        sequences = carrier_atoms(TAIL_SEQ)
        self.assertIsNone(sequences.count)
        self.assertEqual(4, len(sequences.directions(4)))

    def test_band_member_matches_double_disjoint_complement(self) -> None:
        rng = random.Random(11)
        for _ in range(1000):
            generators = [random_fin_dim(rng, 4) for _ in range(rng.randint(1, 3))]
            y = random_fin_dim(rng, 4)
            with self.subTest(generators=generators, y=y):
                self.assertEqual(
                    double_disjoint_complement_member(generators, y),
                    band_member(generators, y),
                )

    def test_is_atom_matches_disjoint_pair_search(self) -> None:
        values = [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2)]
        for dimension in range(1, 4):
            for coords in itertools.product(values, repeat=dimension):
                x = Vec.fin_dim(coords)
                if x.is_zero:
                    continue
                with self.subTest(x=x):
                    self.assertEqual(atom_by_disjoint_pairs(x), is_atom(x))

    def test_ideal_factor_matches_bisection(self) -> None:
        rng = random.Random(13)
        carriers = [Carrier.fin_dim(n) for n in range(1, 5)] + [TAIL_SEQ]
        for _ in range(500):
            carrier = rng.choice(carriers)
            generators = [random_vec(rng, carrier) for _ in range(rng.randint(1, 3))]
            y = random_vec(rng, carrier)
            with self.subTest(generators=generators, y=y):
                membership = ideal_member(generators, y)
                expected = least_factor_by_bisection(generators, y)
                self.assertEqual(expected is not None, membership.is_member)
                self.assertEqual(expected, membership.factor)
