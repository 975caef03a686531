"""Module for theorem verifier exceptions."""

# ruff: noqa: TID252

from typing import Any

from ..order_sets import SetExpr
from ..status import Status, status_name


class ChainError(ValueError):
    """Raised when a neighbourhood chain cannot stand in for a shrinking net.

    The chain-marked intervals must have widths that decrease to zero.
    """

    def __init__(
        self,
        reason: str,
        *args: tuple[Any, ...],
        **kwargs: dict[str, Any],
    ) -> None:
        """Initialise a new chain exception."""
        self._reason = reason
        super().__init__(f"Neighbourhood chain is unusable: {reason}.", *args, **kwargs)

    @property
    def reason(self) -> str:
        """Why the chain was rejected."""
        return self._reason


class NotIdealShapedError(ValueError):
    """Raised when the band proposition is given a set that is not an ideal."""

    def __init__(
        self,
        expression: SetExpr,
        *args: tuple[Any, ...],
        **kwargs: dict[str, Any],
    ) -> None:
        """Initialise a new not-ideal-shaped exception."""
        self._expression = expression
        super().__init__(
            f"Set [{expression!r}] is not an Ideal, Band or TailZero expression.",
            *args,
            **kwargs,
        )

    @property
    def expression(self) -> SetExpr:
        """The rejected set."""
        return self._expression


class NotCertifiedError(ValueError):
    """Raised when a probe catalog holds a set not certified order open."""

    def __init__(
        self,
        expression: SetExpr,
        status: Status,
        *args: tuple[Any, ...],
        **kwargs: dict[str, Any],
    ) -> None:
        """Initialise a new not-certified exception."""
        self._expression = expression
        self._status = status
        super().__init__(
            f"Set [{expression!r}] is {status_name(status)} order open, not certified.",
            *args,
            **kwargs,
        )

    @property
    def expression(self) -> SetExpr:
        """The set that failed certification."""
        return self._expression

    @property
    def status(self) -> Status:
        """The order-openness status the set received."""
        return self._status


class UnknownTheoremError(LookupError):
    """Raised when a theorem id is not registered."""

    def __init__(
        self,
        theorem_id: str,
        *args: tuple[Any, ...],
        **kwargs: dict[str, Any],
    ) -> None:
        """Initialise a new unknown-theorem exception."""
        self._theorem_id = theorem_id
        super().__init__(f"Theorem [{theorem_id}] is not registered.", *args, **kwargs)

    @property
    def theorem_id(self) -> str:
        """The unrecognised id."""
        return self._theorem_id
