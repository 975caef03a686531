"""Module for the JSON form of set expressions.

Every node is an object with a single key naming its constructor:

    {"interval": {"lo": ..., "hi": ..., "kind": "open" | "closed"}}
    {"ideal": [...]}, {"band": [...]}, {"solid-hull": [...]}
    {"half-space": {"index": 0 | "tail", "relation": "<=" | ">=", "bound": "1/2"}}
    {"tail-zero": {}}
    {"complement": <set>}
    {"union": [<set>, ...]}, {"intersection": [<set>, ...]}
    {"translate": {"set": <set>, "by": <element>}}
    {"dilate": {"set": <set>, "factor": "2"}}

The strictness semantics of open intervals is not part of the tree; the
document that holds the tree fixes it once.
"""

# ruff: noqa: TID252

from collections.abc import Callable
from typing import cast

from ..core import (
    Carrier,
    Json,
    Vec,
    decode_vec,
    encode_vec,
    format_rational,
    parse_rational,
)
from .exceptions import SetExprFormatError
from .interval import DEFAULT_SEMANTICS, Interval, IntervalKind, IntervalSemantics
from .set_expr import (
    Band,
    Complement,
    CoordHalfSpace,
    Dilate,
    Ideal,
    Intersection,
    IntervalSet,
    Relation,
    SetExpr,
    SolidHull,
    TailZero,
    Translate,
    Union,
)

_RELATIONS = {Relation.AT_MOST: "<=", Relation.AT_LEAST: ">="}
_KINDS = {IntervalKind.OPEN: "open", IntervalKind.CLOSED: "closed"}


def encode_set(expression: SetExpr) -> Json:  # noqa: PLR0911
    """Return the JSON form of the set expression."""
    if isinstance(expression, IntervalSet):
        interval = expression.interval
        return {
            "interval": {
                "lo": encode_vec(interval.lo),
                "hi": encode_vec(interval.hi),
                "kind": _KINDS[interval.kind],
            },
        }
    if isinstance(expression, Ideal):
        return {"ideal": [encode_vec(g) for g in expression.generators]}
    if isinstance(expression, Band):
        return {"band": [encode_vec(g) for g in expression.generators]}
    if isinstance(expression, SolidHull):
        return {"solid-hull": [encode_vec(g) for g in expression.generators]}
    if isinstance(expression, CoordHalfSpace):
        return {
            "half-space": {
                "index": "tail" if expression.index is None else expression.index,
                "relation": _RELATIONS[expression.relation],
                "bound": format_rational(expression.bound),
            },
        }
    if isinstance(expression, TailZero):
        return {"tail-zero": {}}
    if isinstance(expression, Complement):
        return {"complement": encode_set(expression.inner)}
    if isinstance(expression, Union):
        return {"union": [encode_set(part) for part in expression.parts]}
    if isinstance(expression, Intersection):
        return {"intersection": [encode_set(part) for part in expression.parts]}
    if isinstance(expression, Translate):
        return {
            "translate": {
                "set": encode_set(expression.inner),
                "by": encode_vec(expression.shift),
            },
        }
    if isinstance(expression, Dilate):
        return {
            "dilate": {
                "set": encode_set(expression.inner),
                "factor": format_rational(expression.factor),
            },
        }
    msg = f"Set expression [{expression!r}] has no JSON form."
    raise TypeError(msg)


class _Decoder:
    def __init__(self, carrier: Carrier, semantics: IntervalSemantics) -> None:
        self._carrier = carrier
        self._semantics = semantics
        self._handlers: dict[str, Callable[[Json, str], SetExpr]] = {
            "interval": self._interval,
            "ideal": self._generated(Ideal),
            "band": self._generated(Band),
            "solid-hull": self._generated(SolidHull),
            "half-space": self._half_space,
            "tail-zero": self._tail_zero,
            "complement": lambda body, at: Complement(self.decode(body, at)),
            "union": self._combination(Union),
            "intersection": self._combination(Intersection),
            "translate": self._translate,
            "dilate": self._dilate,
        }

    def decode(self, data: Json, pointer: str) -> SetExpr:
        if not isinstance(data, dict) or len(cast("dict[str, Json]", data)) != 1:
            raise SetExprFormatError(pointer, "expected an object with one key")
        ((name, body),) = cast("dict[str, Json]", data).items()
        handler = self._handlers.get(name)
        if handler is None:
            raise SetExprFormatError(pointer, f"unknown constructor {name!r}")
        try:
            return handler(body, f"{pointer}/{name}")
        except SetExprFormatError:
            raise
        except (TypeError, ValueError) as error:
            raise SetExprFormatError(f"{pointer}/{name}", str(error)) from error

    def _vec(self, data: Json, pointer: str) -> Vec:
        try:
            return decode_vec(data, self._carrier)
        except (TypeError, ValueError) as error:
            raise SetExprFormatError(pointer, str(error)) from error

    def _fields(self, body: Json, pointer: str, names: set[str]) -> dict[str, Json]:
        if not isinstance(body, dict):
            raise SetExprFormatError(pointer, "expected an object")
        fields = cast("dict[str, Json]", body)
        if set(fields) != names:
            raise SetExprFormatError(
                pointer,
                f"expected fields {sorted(names)}, got {sorted(fields)}",
            )
        return fields

    def _list(self, body: Json, pointer: str) -> list[Json]:
        if not isinstance(body, list):
            raise SetExprFormatError(pointer, "expected an array")
        return cast("list[Json]", body)

    def _interval(self, body: Json, pointer: str) -> SetExpr:
        fields = self._fields(body, pointer, {"lo", "hi", "kind"})
        kinds = {name: kind for kind, name in _KINDS.items()}
        kind = kinds.get(fields["kind"])
        if kind is None:
            raise SetExprFormatError(f"{pointer}/kind", "expected 'open' or 'closed'")
        lo = self._vec(fields["lo"], f"{pointer}/lo")
        hi = self._vec(fields["hi"], f"{pointer}/hi")
        return IntervalSet(Interval(lo, hi, kind, self._semantics))

    def _generated(
        self,
        construction: Callable[[list[Vec]], SetExpr],
    ) -> Callable[[Json, str], SetExpr]:
        def handler(body: Json, pointer: str) -> SetExpr:
            items = self._list(body, pointer)
            return construction(
                [self._vec(item, f"{pointer}/{i}") for i, item in enumerate(items)],
            )

        return handler

    def _combination(
        self,
        construction: Callable[[list[SetExpr]], SetExpr],
    ) -> Callable[[Json, str], SetExpr]:
        def handler(body: Json, pointer: str) -> SetExpr:
            items = self._list(body, pointer)
            return construction(
                [self.decode(item, f"{pointer}/{i}") for i, item in enumerate(items)],
            )

        return handler

    def _half_space(self, body: Json, pointer: str) -> SetExpr:
        fields = self._fields(body, pointer, {"index", "relation", "bound"})
        index = fields["index"]
        if index == "tail":
            position = None
        elif isinstance(index, int) and not isinstance(index, bool) and index >= 0:
            position = index
        else:
            raise SetExprFormatError(
                f"{pointer}/index",
                "expected a non-negative integer or 'tail'",
            )
        dimension = self._carrier.dimension
        if dimension is not None and (position is None or position >= dimension):
            raise SetExprFormatError(
                f"{pointer}/index",
                f"expected an integer below the dimension {dimension}",
            )
        relations = {name: relation for relation, name in _RELATIONS.items()}
        relation = relations.get(fields["relation"])
        if relation is None:
            raise SetExprFormatError(f"{pointer}/relation", "expected '<=' or '>='")
        return CoordHalfSpace(position, relation, parse_rational(fields["bound"]))

    def _tail_zero(self, body: Json, pointer: str) -> SetExpr:
        self._fields(body, pointer, set())
        return TailZero()

    def _translate(self, body: Json, pointer: str) -> SetExpr:
        fields = self._fields(body, pointer, {"set", "by"})
        inner = self.decode(fields["set"], f"{pointer}/set")
        return Translate(inner, self._vec(fields["by"], f"{pointer}/by"))

    def _dilate(self, body: Json, pointer: str) -> SetExpr:
        fields = self._fields(body, pointer, {"set", "factor"})
        inner = self.decode(fields["set"], f"{pointer}/set")
        return Dilate(inner, parse_rational(fields["factor"]))


def decode_set(
    data: Json,
    carrier: Carrier,
    semantics: IntervalSemantics = DEFAULT_SEMANTICS,
    pointer: str = "",
) -> SetExpr:
    """Return the set expression described by the JSON form.

    Raises:
        SetExprFormatError: The data is malformed or violates a constructor
            precondition; the pointer locates the offending node.
    """
    return _Decoder(carrier, semantics).decode(data, pointer)
