import contextlib
import io
import json
import tempfile
import unittest
from pathlib import Path
from typing import Any
from unittest import mock

from src.riesz.cli import build_parser, main
from src.riesz.riesz_inner.cli import COMMANDS
from src.riesz.theorems import Conclusion, TheoremReport

PLANE = {"kind": "fin-dim", "dimension": 2}
QUADRANT = {
    "intersection": [
        {"complement": {"half-space": {"index": 0, "relation": "<=", "bound": "0"}}},
        {"complement": {"half-space": {"index": 1, "relation": "<=", "bound": "0"}}},
    ],
}


class MainTest(unittest.TestCase):
    """Unit tests for the command-line entry point."""

    def setUp(self) -> None:
        directory = tempfile.TemporaryDirectory()
        self.addCleanup(directory.cleanup)
        self.directory = Path(directory.name)

    def write(self, document: Any, name: str = "problem.json") -> str:  # noqa: ANN401
        path = self.directory / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return str(path)

    def run_main(self, *argv: str) -> tuple[int, str]:
        stdout = io.StringIO()
        with contextlib.redirect_stdout(stdout):
            code = main(list(argv))
        return code, stdout.getvalue()

    def run_report(self, command: str, document: Any) -> tuple[int, Any]:  # noqa: ANN401
        output = self.directory / "report.json"
        code, _ = self.run_main(command, self.write(document), "--output", str(output))
        return code, json.loads(output.read_text(encoding="utf-8"))

    def test_parser_has_one_command_per_task(self) -> None:
        arguments = build_parser().parse_args(["fit", "problem.json", "--horizon", "20"])
        self.assertEqual("fit", arguments.command)
        self.assertEqual(20, arguments.horizon)
        self.assertEqual({"check-set", "convergence", "fit", "theorems"}, set(COMMANDS))

    def test_check_set(self) -> None:
        box = {"interval": {"lo": ["-1", "-1"], "hi": ["1", "1"], "kind": "closed"}}
        code, report = self.run_report(
            "check-set",
            {
                "carrier": PLANE,
                "check-set": {"set": box, "checks": ["quasi-order-closed", "order-closed"]},
            },
        )
        self.assertEqual(0, code)
        self.assertEqual(box, report["set"])
        self.assertEqual("strict-partial", report["semantics"])
        self.assertEqual(PLANE, report["carrier"])
        self.assertEqual(
            {"order-closed", "quasi-order-closed"},
            set(report["verdicts"]),
        )
        for verdict in report["verdicts"].values():
            self.assertEqual("certified", verdict["status"])

    def test_check_set_output_is_byte_identical_across_runs_and_workers(self) -> None:
        point = {"lo": ["1", "1"], "hi": ["1", "1"], "kind": "closed"}
        punctured = {"complement": {"interval": point}}
        problem = self.write(
            {
                "carrier": PLANE,
                "check-set": {"set": punctured, "checks": ["quasi-order-closed", "order-closed"]},
            },
        )
        output = self.directory / "report.json"
        runs = []
        for workers in ["1", "1", "4", "4"]:
            code, text = self.run_main(
                "check-set",
                problem,
                "--workers",
                workers,
                "--output",
                str(output),
            )
            self.assertEqual(0, code)
            runs.append((text, output.read_bytes()))
        self.assertEqual([runs[0]] * 4, runs)
        report = json.loads(runs[0][1])
        self.assertEqual("refuted", report["verdicts"]["quasi-order-closed"]["status"])

    def test_convergence(self) -> None:
        family = {"template": "coord-decay", "c": ["0", "0"], "p": ["1", "1"], "q": "0"}
        code, report = self.run_report(
            "convergence",
            {
                "carrier": PLANE,
                "convergence": {
                    "family": family,
                    "limit": ["0", "0"],
                    "depth": 3,
                    "catalog": "chain",
                },
            },
        )
        self.assertEqual(0, code)
        self.assertEqual("certified", report["order"]["status"])
        self.assertTrue(report["tau_e"]["consistent"])
        self.assertEqual(3, len(report["tau_e"]["thresholds"]))

    def test_tail_seq_interval_complement_is_not_closed(self) -> None:
        e0 = {"prefix": ["1"], "tail": "0"}
        minus_e0 = {"prefix": ["-1"], "tail": "0"}
        interval = {"interval": {"lo": minus_e0, "hi": e0, "kind": "open"}}
        code, report = self.run_report(
            "check-set",
            {
                "carrier": {"kind": "tail-seq"},
                "check-set": {"set": {"complement": interval}, "checks": ["quasi-order-closed"]},
            },
        )
        self.assertEqual(0, code)
        self.assertEqual("refuted", report["verdicts"]["quasi-order-closed"]["status"])

    def test_shift_converges_in_order_only(self) -> None:
        code, report = self.run_report(
            "convergence",
            {
                "carrier": {"kind": "tail-seq"},
                "convergence": {
                    "family": {"template": "shift"},
                    "limit": {"prefix": [], "tail": "0"},
                },
            },
        )
        self.assertEqual(0, code)
        self.assertEqual("certified", report["order"]["status"])
        self.assertFalse(report["tau_e"]["consistent"])

    def test_fit(self) -> None:
        code, report = self.run_report(
            "fit",
            {"carrier": PLANE, "fit": {"set": QUADRANT, "point": ["1", "1"]}},
        )
        self.assertEqual(0, code)
        self.assertTrue(report["fit"]["fitted"])
        self.assertEqual(1, report["fit"]["t"])
        self.assertEqual(["1/2", "1/2"], report["fit"]["interval"]["lo"])

    def test_theorems(self) -> None:
        code, text = self.run_main("theorems", self.write({"theorem": {"id": "t1"}}))
        self.assertEqual(0, code)
        self.assertTrue(text.startswith("t1: confirmed"))

    def test_exit_code_for_input_errors(self) -> None:
        missing = str(self.directory / "missing.json")
        broken = self.directory / "broken.json"
        broken.write_text("{", encoding="utf-8")
        for argv in [
            ("fit", missing),
            ("fit", str(broken)),
            ("fit", self.write({"carrier": PLANE, "fit": {"set": QUADRANT}})),
            ("theorems", self.write({"theorem": {"id": "t9"}})),
            ("fit", self.write({"carrier": PLANE, "fit": {"set": QUADRANT, "point": [0.5, 1]}})),
        ]:
            with self.subTest(argv=argv), self.assertLogs(level="ERROR"):
                code, text = self.run_main(*argv)
                self.assertEqual(1, code)
                self.assertEqual("", text)

    def test_exit_code_for_contradictions(self) -> None:
        contradicted = TheoremReport(
            "t1",
            {},
            [],
            Conclusion.COUNTEREXAMPLE_FOUND,
            contradiction=True,
        )
        with mock.patch(
            "src.riesz.riesz_inner.cli.commands.run_theorem",
            return_value=contradicted,
        ):
            code, text = self.run_main("theorems", self.write({"theorem": {"id": "t1"}}))
        self.assertEqual(3, code)
        self.assertIn("CONTRADICTION", text)

    def test_exit_code_for_internal_errors(self) -> None:
        def broken(_: object) -> None:
            """Fail unexpectedly."""
            msg = "boom"
            raise RuntimeError(msg)

        with (
            mock.patch.dict(COMMANDS, {"fit": ("fit", broken)}),
            self.assertLogs(level="ERROR"),
        ):
            code, _ = self.run_main("fit", self.write({"fit": {}}))
        self.assertEqual(2, code)
