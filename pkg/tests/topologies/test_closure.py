import unittest
from unittest import mock

from src.riesz.lattice import TAIL_SEQ, Carrier, SearchConfig, Status, Vec, unit_vector
from src.riesz.nets import Shift, ShiftUp
from src.riesz.sets import (
    Complement,
    CoordHalfSpace,
    Interval,
    IntervalSemantics,
    IntervalSet,
    Relation,
    TailZero,
)
from src.riesz.riesz_inner.topologies import closure_candidates, search_witness, try_witness
from src.riesz.topologies import check_order_closed, check_quasi_order_closed, is_order_open


class ClosureTest(unittest.TestCase):
    """Unit tests for closure and openness verdicts."""

    def test_closed_box_is_certified(self) -> None:
        box = IntervalSet(Interval.closed(Vec.fin_dim([0, 0]), Vec.fin_dim([1, 1])))
        for check in [check_quasi_order_closed, check_order_closed]:
            with self.subTest(check=check):
                verdict = check(box)
                self.assertEqual(Status.CERTIFIED, verdict.status)
                self.assertTrue(verdict.rule_trace[0].startswith("closed interval"))
                self.assertIn("rule_trace", verdict.to_json())

    def test_finitely_supported_sequences_are_not_closed(self) -> None:
        verdict = check_quasi_order_closed(TailZero())
        self.assertEqual(Status.REFUTED, verdict.status)
        witness = verdict.witness
        assert witness is not None
        self.assertEqual(ShiftUp(), witness.family)
        self.assertEqual(Vec.tail_seq([], 1), witness.limit)
        self.assertEqual(1, witness.in_set_from)
        self.assertTrue(witness.replay(TailZero()))
        self.assertEqual("refuted", verdict.to_json()["status"])

    def test_axis_interval_is_not_order_open(self) -> None:
        e0 = unit_vector(TAIL_SEQ, 0)
        interval = IntervalSet(Interval.open(-e0, e0))
        verdict = is_order_open(interval)
        self.assertEqual(Status.REFUTED, verdict.status)
        witness = verdict.witness
        assert witness is not None
        self.assertEqual(Shift(), witness.family)
        self.assertTrue(witness.replay(Complement(interval)))

    def test_uniform_open_box_is_order_open(self) -> None:
        unit = Vec.fin_dim([1, 1])
        box = IntervalSet(Interval.open(-unit, unit, IntervalSemantics.STRICT_UNIFORM))
        self.assertEqual(Status.CERTIFIED, is_order_open(box).status)

    def test_strict_partial_open_box_is_not_order_open(self) -> None:
        unit = Vec.fin_dim([1, 1])
        box = IntervalSet(Interval.open(-unit, unit, IntervalSemantics.STRICT_PARTIAL))
        verdict = is_order_open(box)
        self.assertEqual(Status.REFUTED, verdict.status)
        assert verdict.witness is not None
        self.assertTrue(verdict.witness.replay(Complement(box)))

    def test_open_half_space_is_order_open(self) -> None:
        expression = Complement(CoordHalfSpace(0, Relation.AT_MOST, 0))
        verdict = is_order_open(expression, Carrier.fin_dim(2))
        self.assertEqual(Status.CERTIFIED, verdict.status)

    def test_unknown_without_a_carrier(self) -> None:
        verdict = check_quasi_order_closed(CoordHalfSpace(None, Relation.AT_LEAST, 0))
        self.assertEqual(Status.UNKNOWN, verdict.status)
        assert verdict.search_report is not None
        self.assertIsNotNone(verdict.search_report.note)

    def test_witness_search_does_not_depend_on_workers(self) -> None:
        serial = check_quasi_order_closed(TailZero(), config=SearchConfig(workers=1))
        parallel = check_quasi_order_closed(TailZero(), config=SearchConfig(workers=4))
        self.assertEqual(serial.to_json(), parallel.to_json())

    def test_parallel_search_returns_the_first_witness_in_canonical_order(self) -> None:
        plane = Carrier.fin_dim(2)
        point = Vec.fin_dim([1, 1])
        punctured = Complement(IntervalSet(Interval.closed(point, point)))
        config = SearchConfig(workers=4)
        candidates = closure_candidates(punctured, plane, config, monotone=True)
        first = next(
            index
            for index, family in enumerate(candidates)
            if try_witness(family, punctured, monotone=True) is not None
        )
        self.assertGreaterEqual(first, 12)
        with mock.patch("src.riesz.riesz_inner.topologies.search._BATCH_PER_WORKER", 1):
            verdict = search_witness(punctured, plane, config, monotone=True)
        assert verdict.witness is not None
        self.assertEqual(candidates[first], verdict.witness.family)
