"""Module for order-set exceptions."""

# ruff: noqa: TID252

from typing import Any

from ..core import Vec


class InvalidIntervalError(ValueError):
    """Raised when interval endpoints do not describe a non-empty interval.

    A closed interval needs lo ≤ hi. An open interval additionally needs lo
    strictly below hi under the chosen strictness semantics, otherwise it
    would be empty.
    """

    def __init__(
        self,
        lo: Vec,
        hi: Vec,
        reason: str,
        *args: tuple[Any, ...],
        **kwargs: dict[str, Any],
    ) -> None:
        """Initialise a new invalid-interval exception."""
        self._lo = lo
        self._hi = hi
        self._reason = reason
        super().__init__(
            f"Interval [{lo}, {hi}] is invalid: {reason}.",
            *args,
            **kwargs,
        )

    @property
    def lo(self) -> Vec:
        """The lower endpoint that caused the error."""
        return self._lo

    @property
    def hi(self) -> Vec:
        """The upper endpoint that caused the error."""
        return self._hi

    @property
    def reason(self) -> str:
        """Why the endpoints were rejected."""
        return self._reason


class EmptyGeneratorsError(ValueError):
    """Raised when an ideal, band or solid hull is given no generators."""

    def __init__(
        self,
        construction: str,
        *args: tuple[Any, ...],
        **kwargs: dict[str, Any],
    ) -> None:
        """Initialise a new empty-generators exception."""
        self._construction = construction
        super().__init__(
            f"Construction [{construction}] needs at least one generator.",
            *args,
            **kwargs,
        )

    @property
    def construction(self) -> str:
        """The construction that was given no generators."""
        return self._construction


class NotPositiveError(ValueError):
    """Raised when an atom test is applied to an element that is not > 0."""

    def __init__(
        self,
        value: Vec,
        *args: tuple[Any, ...],
        **kwargs: dict[str, Any],
    ) -> None:
        """Initialise a new not-positive exception."""
        self._value = value
        super().__init__(
            f"Element [{value}] is not strictly positive (x ≥ 0 and x ≠ 0).",
            *args,
            **kwargs,
        )

    @property
    def value(self) -> Vec:
        """The element that caused the error."""
        return self._value


class SetExprFormatError(ValueError):
    """Raised when a JSON set expression cannot be decoded."""

    def __init__(
        self,
        pointer: str,
        message: str,
        *args: tuple[Any, ...],
        **kwargs: dict[str, Any],
    ) -> None:
        """Initialise a new set-expression format exception."""
        self._pointer = pointer
        self._message = message
        super().__init__(
            f"Set expression at [{pointer or '/'}]: {message}",
            *args,
            **kwargs,
        )

    @property
    def pointer(self) -> str:
        """JSON pointer to the offending node."""
        return self._pointer

    @property
    def message(self) -> str:
        """Description of the problem."""
        return self._message
