"""Module for exact-scalar and carrier exceptions."""

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from .carrier import Carrier


class NotRationalError(TypeError):
    """Raised when a scalar is not an exact rational.

    Floats, booleans and complex numbers are refused outright, as silently
    converting them would make verdicts depend on rounding.
    """

    def __init__(
        self,
        value: object,
        *args: tuple[Any, ...],
        **kwargs: dict[str, Any],
    ) -> None:
        """Initialise a new not-rational exception."""
        self._value = value
        super().__init__(
            f"Value [{value!r}] is not an exact rational.",
            *args,
            **kwargs,
        )

    @property
    def value(self) -> object:
        """The value that caused the error."""
        return self._value


class RationalFormatError(ValueError):
    """Raised when text cannot be parsed as "p" or "p/q"."""

    def __init__(
        self,
        text: str,
        *args: tuple[Any, ...],
        **kwargs: dict[str, Any],
    ) -> None:
        """Initialise a new rational-format exception."""
        self._text = text
        super().__init__(
            f'Text [{text!r}] is not a rational of the form "p" or "p/q".',
            *args,
            **kwargs,
        )

    @property
    def text(self) -> str:
        """The text that caused the error."""
        return self._text


class InvalidCarrierError(ValueError):
    """Raised when a finite-dimensional carrier has a non-positive dimension."""

    def __init__(
        self,
        dimension: int,
        *args: tuple[Any, ...],
        **kwargs: dict[str, Any],
    ) -> None:
        """Initialise a new invalid-carrier exception."""
        self._dimension = dimension
        super().__init__(
            f"Dimension [{dimension}] must be a positive integer.",
            *args,
            **kwargs,
        )

    @property
    def dimension(self) -> int:
        """The dimension that caused the error."""
        return self._dimension


class CarrierMismatchError(ValueError):
    """Raised when two lattice elements live in different carriers."""

    def __init__(
        self,
        expected: "Carrier",
        actual: "Carrier",
        *args: tuple[Any, ...],
        **kwargs: dict[str, Any],
    ) -> None:
        """Initialise a new carrier-mismatch exception."""
        self._expected = expected
        self._actual = actual
        super().__init__(
            f"Carrier [{actual}] does not match carrier [{expected}].",
            *args,
            **kwargs,
        )

    @property
    def expected(self) -> "Carrier":
        """The carrier that was required."""
        return self._expected

    @property
    def actual(self) -> "Carrier":
        """The carrier that was supplied."""
        return self._actual


class DimensionError(ValueError):
    """Raised when a coordinate list does not match the carrier dimension."""

    def __init__(
        self,
        dimension: int,
        length: int,
        *args: tuple[Any, ...],
        **kwargs: dict[str, Any],
    ) -> None:
        """Initialise a new dimension exception."""
        self._dimension = dimension
        self._length = length
        super().__init__(
            f"Coordinate count [{length}] does not match dimension [{dimension}].",
            *args,
            **kwargs,
        )

    @property
    def dimension(self) -> int:
        """The dimension of the carrier."""
        return self._dimension

    @property
    def length(self) -> int:
        """The number of coordinates supplied."""
        return self._length


class PositionError(IndexError):
    """Raised when a coordinate position does not exist in the carrier."""

    def __init__(
        self,
        position: int | None,
        carrier: "Carrier",
        *args: tuple[Any, ...],
        **kwargs: dict[str, Any],
    ) -> None:
        """Initialise a new position exception."""
        self._position = position
        self._carrier = carrier
        name = "tail" if position is None else str(position)
        super().__init__(
            f"Position [{name}] does not exist in carrier [{carrier}].",
            *args,
            **kwargs,
        )

    @property
    def position(self) -> int | None:
        """The position that caused the error (None is the tail)."""
        return self._position

    @property
    def carrier(self) -> "Carrier":
        """The carrier that was addressed."""
        return self._carrier
