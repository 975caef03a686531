"""Module for command-line exceptions."""

from typing import Any


class DocumentError(ValueError):
    """Raised when a problem document is malformed.

    The pointer is a JSON pointer to the offending field, "" for the whole
    document.
    """

    def __init__(
        self,
        pointer: str,
        message: str,
        *args: tuple[Any, ...],
        **kwargs: dict[str, Any],
    ) -> None:
        """Initialise a new document exception."""
        self._pointer = pointer
        self._message = message
        super().__init__(f"Document field [{pointer or '/'}]: {message}.", *args, **kwargs)

    @property
    def pointer(self) -> str:
        """The JSON pointer to the offending field."""
        return self._pointer

    @property
    def message(self) -> str:
        """What is wrong with the field."""
        return self._message
