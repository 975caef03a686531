"""Module for theorem reports and their steps."""

# ruff: noqa: TID252

from collections.abc import Sequence
from enum import IntEnum

from ..core import Json


class Conclusion(IntEnum):
    """The outcome of a theorem verifier."""

    CONFIRMED = 1
    COUNTEREXAMPLE_FOUND = 2
    INCONCLUSIVE = 3


_CONCLUSION_NAMES = {
    Conclusion.CONFIRMED: "confirmed",
    Conclusion.COUNTEREXAMPLE_FOUND: "counterexample-found",
    Conclusion.INCONCLUSIVE: "inconclusive",
}


def conclusion_name(conclusion: Conclusion) -> str:
    """Return the serialised name of the conclusion."""
    return _CONCLUSION_NAMES[conclusion]


class Step:
    """One operation run by a verifier with its outcome and evidence.

    `passed` is True when the outcome is the expected one, False when it
    contradicts the expectation and None when the operation was
    inconclusive.
    """

    def __init__(
        self,
        operation: str,
        summary: str,
        *,
        passed: bool | None,
        evidence: Json = None,
    ) -> None:
        """Initialise a new report step."""
        self._operation = operation
        self._summary = summary
        self._passed = passed
        self._evidence = evidence

    @property
    def operation(self) -> str:
        """The operation invoked."""
        return self._operation

    @property
    def summary(self) -> str:
        """A one-line description of the outcome."""
        return self._summary

    @property
    def passed(self) -> bool | None:
        """Whether the outcome matched the expectation."""
        return self._passed

    @property
    def evidence(self) -> Json:
        """The serialised verdict, certificate or witness."""
        return self._evidence

    def to_json(self) -> Json:
        """Return the JSON form of the step."""
        return {
            "operation": self._operation,
            "summary": self._summary,
            "passed": self._passed,
            "evidence": self._evidence,
        }


class TheoremReport:
    """The structured outcome of one theorem verifier."""

    def __init__(  # noqa: PLR0913
        self,
        theorem_id: str,
        inputs: Json,
        steps: Sequence[Step],
        conclusion: Conclusion,
        notes: Sequence[str] = (),
        *,
        contradiction: bool = False,
    ) -> None:
        """Initialise a new theorem report.

        Args:
            theorem_id: The registry id of the verifier.
            inputs: The serialised verifier arguments.
            steps: The operations run, in order.
            conclusion: The overall outcome.
            notes: Diagnostics and stated substitutions.
            contradiction: Whether an outcome contradicts the verified result
                itself rather than an instance of it.
        """
        self._theorem_id = theorem_id
        self._inputs = inputs
        self._steps = tuple(steps)
        self._conclusion = conclusion
        self._notes = tuple(notes)
        self._contradiction = contradiction

    @property
    def theorem_id(self) -> str:
        """The registry id of the verifier."""
        return self._theorem_id

    @property
    def inputs(self) -> Json:
        """The serialised verifier arguments."""
        return self._inputs

    @property
    def steps(self) -> tuple[Step, ...]:
        """The operations run, in order."""
        return self._steps

    @property
    def conclusion(self) -> Conclusion:
        """The overall outcome."""
        return self._conclusion

    @property
    def notes(self) -> tuple[str, ...]:
        """Diagnostics and stated substitutions."""
        return self._notes

    @property
    def contradiction(self) -> bool:
        """Whether an outcome contradicts the verified result."""
        return self._contradiction

    def to_json(self) -> Json:
        """Return the JSON form of the report."""
        return {
            "theorem": self._theorem_id,
            "inputs": self._inputs,
            "steps": [step.to_json() for step in self._steps],
            "conclusion": conclusion_name(self._conclusion),
            "notes": list(self._notes),
            "contradiction": self._contradiction,
        }

    def render_text(self) -> str:
        """Return a plain-text rendering, one line per step."""
        marks = {True: "ok", False: "FAIL", None: "??"}
        lines = [f"{self._theorem_id}: {conclusion_name(self._conclusion)}"]
        for index, step in enumerate(self._steps, start=1):
            lines.append(f"  {index}. [{marks[step.passed]}] {step.operation}: {step.summary}")
        lines.extend(f"  note: {note}" for note in self._notes)
        if self._contradiction:
            lines.append("  CONTRADICTION: an outcome contradicts the verified result")
        return "\n".join(lines)

    def __repr__(self) -> str:
        """Return a string representation of the report for developers."""
        return (
            f"{__class__.__name__}({self._theorem_id!r}, "
            f"{conclusion_name(self._conclusion)}, {len(self._steps)} step(s))"
        )


def conclude(steps: Sequence[Step]) -> Conclusion:
    """Return CONFIRMED when every step passed, else the weakest outcome.

    A failed step gives COUNTEREXAMPLE_FOUND; otherwise an inconclusive step
    gives INCONCLUSIVE.
    """
    if any(step.passed is False for step in steps):
        return Conclusion.COUNTEREXAMPLE_FOUND
    if any(step.passed is None for step in steps):
        return Conclusion.INCONCLUSIVE
    return Conclusion.CONFIRMED
