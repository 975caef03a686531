"""Module for sequence-family exceptions."""

# ruff: noqa: TID252

from typing import TYPE_CHECKING, Any

from ..core import Vec

if TYPE_CHECKING:
    from .family import Family


class InvalidTemplateError(ValueError):
    """Raised when template parameters lie outside the template's domain.

    Examples are a Scale ratio outside (0, 1), a Scale vector that is not
    positive, a negative CoordDecay offset or a Shift outside TailSeq.
    """

    def __init__(
        self,
        template: str,
        reason: str,
        *args: tuple[Any, ...],
        **kwargs: dict[str, Any],
    ) -> None:
        """Initialise a new invalid-template exception."""
        self._template = template
        self._reason = reason
        super().__init__(
            f"Template [{template}] has invalid parameters: {reason}.",
            *args,
            **kwargs,
        )

    @property
    def template(self) -> str:
        """The name of the template."""
        return self._template

    @property
    def reason(self) -> str:
        """Why the parameters were rejected."""
        return self._reason


class NonMonotoneFamilyError(ValueError):
    """Raised when an order limit is requested for a non-monotone family."""

    def __init__(
        self,
        family: "Family",
        *args: tuple[Any, ...],
        **kwargs: dict[str, Any],
    ) -> None:
        """Initialise a new non-monotone-family exception."""
        self._family = family
        super().__init__(
            f"Family [{family!r}] is neither increasing nor decreasing.",
            *args,
            **kwargs,
        )

    @property
    def family(self) -> "Family":
        """The family that caused the error."""
        return self._family


class NotConvergentError(ValueError):
    """Raised when a dominating family is requested for a pair that does not converge."""

    def __init__(
        self,
        family: "Family",
        target: Vec,
        *args: tuple[Any, ...],
        **kwargs: dict[str, Any],
    ) -> None:
        """Initialise a new not-convergent exception."""
        self._family = family
        self._target = target
        super().__init__(
            f"Family [{family!r}] does not order converge to [{target}].",
            *args,
            **kwargs,
        )

    @property
    def family(self) -> "Family":
        """The family that caused the error."""
        return self._family

    @property
    def target(self) -> Vec:
        """The element the family does not converge to."""
        return self._target


class FamilyFormatError(ValueError):
    """Raised when a JSON family description cannot be decoded."""

    def __init__(
        self,
        pointer: str,
        message: str,
        *args: tuple[Any, ...],
        **kwargs: dict[str, Any],
    ) -> None:
        """Initialise a new family-format exception."""
        self._pointer = pointer
        self._message = message
        super().__init__(
            f"Family at [{pointer or '/'}]: {message}",
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
