"""Module for problem documents: one JSON task with its carrier and settings.

A document looks like::

    {
        "carrier": {"kind": "fin-dim", "dimension": 2},
        "semantics": "strict-partial",
        "search": {"horizon": 200},
        "check-set": {"set": {...}}
    }

with exactly one task block among "check-set", "convergence", "fit" and
"theorem".
"""

# ruff: noqa: TID252

from collections.abc import Callable, Collection, Iterator
from contextlib import contextmanager
from typing import Any, TypeVar, cast

from ..config import DEFAULT_CONFIG, SearchConfig
from ..core import Carrier, Json, Vec, decode_carrier, decode_vec, parse_rational
from ..nets import Family, FamilyFormatError, decode_family
from ..order_sets import (
    DEFAULT_SEMANTICS,
    IntervalSemantics,
    SetExpr,
    SetExprFormatError,
    decode_set,
    parse_semantics,
)
from .exceptions import DocumentError

T = TypeVar("T")

TASKS = ("check-set", "convergence", "fit", "theorem")

_INTEGER_SETTINGS = (
    "grid_scale",
    "horizon",
    "fit_budget",
    "fit_samples",
    "max_points",
    "tail_prefix",
    "workers",
)
_RATIONAL_SETTINGS = ("grid", "scale_lambdas", "scale_factors")


@contextmanager
def decoding(pointer: str) -> Iterator[None]:
    """Turn library decoding errors into document errors at the pointer."""
    try:
        yield
    except DocumentError:
        raise
    except (SetExprFormatError, FamilyFormatError) as error:
        raise DocumentError(f"{pointer}{error.pointer}", error.message) from error
    except (TypeError, ValueError) as error:
        raise DocumentError(pointer, str(error)) from error


def expect_object(data: Json, pointer: str) -> dict[str, Json]:
    """Return the data as an object.

    Raises:
        DocumentError: The data is not a JSON object.
    """
    if not isinstance(data, dict):
        raise DocumentError(pointer, "expected an object")
    return cast("dict[str, Json]", data)


def check_fields(
    fields: dict[str, Json],
    pointer: str,
    *,
    required: set[str],
    optional: Collection[str] = (),
) -> None:
    """Check an object has the required fields and nothing unknown.

    Raises:
        DocumentError: A field is missing or unknown.
    """
    missing = sorted(required - set(fields))
    if missing:
        raise DocumentError(f"{pointer}/{missing[0]}", "missing field")
    unknown = sorted(set(fields) - required - set(optional))
    if unknown:
        raise DocumentError(f"{pointer}/{unknown[0]}", "unknown field")


def _integer(value: Json, pointer: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise DocumentError(pointer, "expected an integer")
    return value


def _search_config(data: Json, pointer: str) -> SearchConfig:
    fields = expect_object(data, pointer)
    check_fields(
        fields,
        pointer,
        required=set(),
        optional={*_INTEGER_SETTINGS, *_RATIONAL_SETTINGS},
    )
    overrides: dict[str, Any] = {}
    for name, value in fields.items():
        at = f"{pointer}/{name}"
        if name in _INTEGER_SETTINGS:
            overrides[name] = _integer(value, at)
            continue
        if not isinstance(value, list):
            raise DocumentError(at, "expected an array of rationals")
        with decoding(at):
            overrides[name] = [parse_rational(entry) for entry in cast("list[Json]", value)]
    with decoding(pointer):
        return DEFAULT_CONFIG.replace(**overrides)


class ProblemDocument:
    """A validated problem document."""

    def __init__(  # noqa: PLR0913
        self,
        task: str,
        payload: dict[str, Json],
        carrier: Carrier | None,
        semantics: IntervalSemantics,
        config: SearchConfig,
    ) -> None:
        """Initialise a new problem document."""
        self._task = task
        self._payload = payload
        self._carrier = carrier
        self._semantics = semantics
        self._config = config

    @property
    def task(self) -> str:
        """The task block name."""
        return self._task

    @property
    def payload(self) -> dict[str, Json]:
        """The task block."""
        return self._payload

    @property
    def semantics(self) -> IntervalSemantics:
        """The strictness semantics of open intervals."""
        return self._semantics

    @property
    def config(self) -> SearchConfig:
        """The search configuration with every override applied."""
        return self._config

    @property
    def pointer(self) -> str:
        """The JSON pointer to the task block."""
        return f"/{self._task}"

    def has_carrier(self) -> bool:
        """Whether the document names a carrier."""
        return self._carrier is not None

    @property
    def carrier(self) -> Carrier:
        """The carrier of the document.

        Raises:
            DocumentError: The document names no carrier.
        """
        if self._carrier is None:
            raise DocumentError("/carrier", "missing field")
        return self._carrier

    def field(self, name: str, decode: Callable[[Json, str], T]) -> T:
        """Decode a required field of the task block.

        Raises:
            DocumentError: The field is missing or malformed.
        """
        pointer = f"{self.pointer}/{name}"
        if name not in self._payload:
            raise DocumentError(pointer, "missing field")
        with decoding(pointer):
            return decode(self._payload[name], pointer)

    def optional(self, name: str, decode: Callable[[Json, str], T]) -> T | None:
        """Decode an optional field of the task block, or return None."""
        if name not in self._payload:
            return None
        return self.field(name, decode)

    def vec(self, data: Json, pointer: str) -> Vec:
        """Decode an element of the document carrier."""
        with decoding(pointer):
            return decode_vec(data, self.carrier)

    def set_expr(self, data: Json, pointer: str) -> SetExpr:
        """Decode a set expression over the document carrier."""
        with decoding(pointer):
            return decode_set(data, self.carrier, self._semantics)

    def family(self, data: Json, pointer: str) -> Family:
        """Decode a family over the document carrier."""
        with decoding(pointer):
            return decode_family(data, self.carrier)

    def integer(self, data: Json, pointer: str) -> int:
        """Decode an integer."""
        return _integer(data, pointer)

    def string(self, data: Json, pointer: str) -> str:
        """Decode a string."""
        if not isinstance(data, str):
            raise DocumentError(pointer, "expected a string")
        return data


def load_document(  # noqa: PLR0913
    data: Json,
    task: str,
    *,
    semantics: str | None = None,
    horizon: int | None = None,
    grid_scale: int | None = None,
    workers: int | None = None,
) -> ProblemDocument:
    """Validate a parsed document for the task, applying command-line overrides.

    Raises:
        DocumentError: The document is malformed, lacks the task block or
            holds unknown fields.
    """
    fields = expect_object(data, "")
    check_fields(fields, "", required={task}, optional={"carrier", "semantics", "search"})
    carrier = None
    if "carrier" in fields:
        with decoding("/carrier"):
            carrier = decode_carrier(fields["carrier"])
    chosen = DEFAULT_SEMANTICS
    name = semantics if semantics is not None else fields.get("semantics")
    if name is not None:
        if not isinstance(name, str):
            raise DocumentError("/semantics", "expected a string")
        with decoding("/semantics"):
            chosen = parse_semantics(name)
    config = _search_config(fields.get("search", {}), "/search")
    overrides = {
        key: value
        for key, value in (("horizon", horizon), ("grid_scale", grid_scale), ("workers", workers))
        if value is not None
    }
    with decoding("/search"):
        config = config.replace(**overrides)
    payload = expect_object(fields[task], f"/{task}")
    return ProblemDocument(task, payload, carrier, chosen, config)
