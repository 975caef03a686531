"""Module for topology exceptions."""

# ruff: noqa: TID252

from typing import Any

from ..core import Vec


class PreconditionError(ValueError):
    """Raised when an operation is applied outside its hypotheses.

    Interval fitting needs a point inside a set that is not refuted to be
    order open; vector-topology probes need a set certified order open.
    """

    def __init__(
        self,
        operation: str,
        reason: str,
        *args: tuple[Any, ...],
        **kwargs: dict[str, Any],
    ) -> None:
        """Initialise a new precondition exception."""
        self._operation = operation
        self._reason = reason
        super().__init__(
            f"Operation [{operation}] cannot run: {reason}.",
            *args,
            **kwargs,
        )

    @property
    def operation(self) -> str:
        """The operation whose precondition failed."""
        return self._operation

    @property
    def reason(self) -> str:
        """The failed precondition."""
        return self._reason


class CenterMismatchError(ValueError):
    """Raised when a neighbourhood catalog is centred elsewhere than the target."""

    def __init__(
        self,
        center: Vec,
        target: Vec,
        *args: tuple[Any, ...],
        **kwargs: dict[str, Any],
    ) -> None:
        """Initialise a new center-mismatch exception."""
        self._center = center
        self._target = target
        super().__init__(
            f"Catalog centre [{center}] differs from the target [{target}].",
            *args,
            **kwargs,
        )

    @property
    def center(self) -> Vec:
        """The centre of the catalog."""
        return self._center

    @property
    def target(self) -> Vec:
        """The element the catalog was used for."""
        return self._target
