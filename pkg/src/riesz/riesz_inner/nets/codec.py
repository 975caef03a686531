"""Module for the JSON form of families.

    {"template": "explicit", "values": [<element>, ...]}
    {"template": "shift"}, {"template": "shift-up"}
    {"template": "splice", "head": <element>, "rest": <element>}
    {"template": "scale", "v": <element>, "lambda": "1/2"}
    {"template": "coord-decay", "c": <element>, "p": <element>, "q": "0"}
    {"template": "running-sup-meet", "base": <family>, "cap": <element>}
    {"template": "deviation", "base": <family>, "x": <element>}
    {"template": "prefixed", "values": [<element>, ...], "rest": <family>}
"""

# ruff: noqa: TID252

from collections.abc import Callable
from typing import cast

from ..core import Carrier, Json, Vec, decode_vec, encode_vec, format_rational, parse_rational
from .exceptions import FamilyFormatError
from .family import (
    CoordDecay,
    Deviation,
    Explicit,
    Family,
    Prefixed,
    RunningSupMeet,
    Scale,
    Shift,
    ShiftUp,
    Splice,
)


def encode_family(family: Family) -> Json:  # noqa: C901, PLR0911
    """Return the JSON form of the family."""
    if isinstance(family, Shift | ShiftUp):
        return {"template": family.template}
    if isinstance(family, Splice):
        return {
            "template": family.template,
            "head": encode_vec(family.head),
            "rest": encode_vec(family.rest),
        }
    if isinstance(family, Explicit):
        return {
            "template": family.template,
            "values": [encode_vec(value) for value in family.values],
        }
    if isinstance(family, Scale):
        return {
            "template": family.template,
            "v": encode_vec(family.v),
            "lambda": format_rational(family.ratio),
        }
    if isinstance(family, CoordDecay):
        return {
            "template": family.template,
            "c": encode_vec(family.c),
            "p": encode_vec(family.p),
            "q": format_rational(family.q),
        }
    if isinstance(family, RunningSupMeet):
        return {
            "template": family.template,
            "base": encode_family(family.base),
            "cap": encode_vec(family.cap),
        }
    if isinstance(family, Deviation):
        return {
            "template": family.template,
            "base": encode_family(family.base),
            "x": encode_vec(family.x),
        }
    if isinstance(family, Prefixed):
        return {
            "template": family.template,
            "values": [encode_vec(value) for value in family.values],
            "rest": encode_family(family.rest),
        }
    msg = f"Family [{family!r}] has no JSON form."
    raise TypeError(msg)


class _Decoder:
    def __init__(self, carrier: Carrier) -> None:
        self._carrier = carrier
        self._handlers: dict[str, tuple[set[str], Callable[[dict[str, Json], str], Family]]] = {
            "explicit": ({"values"}, self._explicit),
            "shift": (set(), self._shift(Shift)),
            "shift-up": (set(), self._shift(ShiftUp)),
            "splice": (
                {"head", "rest"},
                lambda f, at: Splice(self._vec(f, "head", at), self._vec(f, "rest", at)),
            ),
            "scale": (
                {"v", "lambda"},
                lambda f, at: Scale(self._vec(f, "v", at), parse_rational(f["lambda"])),
            ),
            "coord-decay": (
                {"c", "p", "q"},
                lambda f, at: CoordDecay(
                    self._vec(f, "c", at),
                    self._vec(f, "p", at),
                    parse_rational(f["q"]),
                ),
            ),
            "running-sup-meet": (
                {"base", "cap"},
                lambda f, at: RunningSupMeet(
                    self.decode(f["base"], f"{at}/base"),
                    self._vec(f, "cap", at),
                ),
            ),
            "deviation": (
                {"base", "x"},
                lambda f, at: Deviation(
                    self.decode(f["base"], f"{at}/base"),
                    self._vec(f, "x", at),
                ),
            ),
            "prefixed": (
                {"values", "rest"},
                lambda f, at: Prefixed(
                    self._values(f, at),
                    self.decode(f["rest"], f"{at}/rest"),
                ),
            ),
        }

    def decode(self, data: Json, pointer: str) -> Family:
        if not isinstance(data, dict):
            raise FamilyFormatError(pointer, "expected an object")
        fields = cast("dict[str, Json]", data)
        name = fields.get("template")
        if not isinstance(name, str) or name not in self._handlers:
            raise FamilyFormatError(f"{pointer}/template", f"unknown template {name!r}")
        names, handler = self._handlers[name]
        if set(fields) != names | {"template"}:
            raise FamilyFormatError(
                pointer,
                f"template {name!r} expects fields {sorted(names)}, got "
                f"{sorted(set(fields) - {'template'})}",
            )
        try:
            return handler(fields, pointer)
        except FamilyFormatError:
            raise
        except (TypeError, ValueError) as error:
            raise FamilyFormatError(pointer, str(error)) from error

    def _vec(self, fields: dict[str, Json], name: str, pointer: str) -> Vec:
        try:
            return decode_vec(fields[name], self._carrier)
        except (TypeError, ValueError) as error:
            raise FamilyFormatError(f"{pointer}/{name}", str(error)) from error

    def _explicit(self, fields: dict[str, Json], pointer: str) -> Family:
        return Explicit(self._values(fields, pointer))

    def _values(self, fields: dict[str, Json], pointer: str) -> list[Vec]:
        values = fields["values"]
        if not isinstance(values, list):
            raise FamilyFormatError(f"{pointer}/values", "expected an array")
        items = cast("list[Json]", values)
        decoded: list[Vec] = []
        for index, item in enumerate(items):
            try:
                decoded.append(decode_vec(item, self._carrier))
            except (TypeError, ValueError) as error:
                raise FamilyFormatError(f"{pointer}/values/{index}", str(error)) from error
        return decoded

    def _shift(self, template: Callable[[], Family]) -> Callable[[dict[str, Json], str], Family]:
        def handler(fields: dict[str, Json], pointer: str) -> Family:
            del fields
            if not self._carrier.is_tail_seq:
                raise FamilyFormatError(pointer, "shift templates need the tail-seq carrier")
            return template()

        return handler


def decode_family(data: Json, carrier: Carrier, pointer: str = "") -> Family:
    """Return the family described by the JSON form.

    Raises:
        FamilyFormatError: The data is malformed or violates a template
            precondition; the pointer locates the offending node.
    """
    return _Decoder(carrier).decode(data, pointer)
