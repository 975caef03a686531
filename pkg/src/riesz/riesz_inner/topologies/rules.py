"""Module for the structural rules that certify closure under order limits.

Every rule is sound for both quasi-order closure (monotone limits) and order
closure (limits of order-convergent sequences): in both carriers such limits
are coordinatewise limits, and each certified shape is cut out by
non-strict coordinate inequalities.
"""

# ruff: noqa: TID252

from ..order_sets import (
    Band,
    Complement,
    CoordHalfSpace,
    Dilate,
    Ideal,
    Intersection,
    IntervalSemantics,
    IntervalSet,
    SetExpr,
    SolidHull,
    Translate,
    Union,
)


def _complement_rule(inner: SetExpr) -> str | None:
    if not isinstance(inner, IntervalSet) or not inner.interval.is_open:
        return None
    carrier = inner.carrier
    if carrier is None or carrier.dimension is None:
        return None
    uniform = inner.interval.semantics == IntervalSemantics.STRICT_UNIFORM
    if uniform or carrier.dimension == 1:
        return f"complement of open box {inner.interval}: finite union of half-spaces"
    return None


def _leaf_rule(expression: SetExpr) -> str | None:  # noqa: PLR0911
    if isinstance(expression, IntervalSet):
        if expression.interval.is_open:
            return None
        return f"closed interval {expression.interval}"
    if isinstance(expression, CoordHalfSpace):
        if expression.index is None:
            return None
        return f"half-space at position {expression.index}"
    if isinstance(expression, Ideal | Band):
        # finitely generated ideals are given by the support rule, so they are bands
        return f"band generated by {len(expression.generators)} element(s)"
    if isinstance(expression, SolidHull):
        return "solid hull: finite union of closed intervals"
    if isinstance(expression, Complement):
        return _complement_rule(expression.inner)
    return None


def closure_trace(expression: SetExpr, depth: int = 0) -> list[str] | None:
    """Return the rule derivation showing the set is closed, or None.

    The expression should have its complements pushed to the leaves.
    """
    pad = "  " * depth
    if isinstance(expression, Union | Intersection):
        parts = expression.parts
        if not parts:
            empty = "empty set" if isinstance(expression, Union) else "full space"
            return [f"{pad}{empty}"]
        traces = [closure_trace(part, depth + 1) for part in parts]
        if any(trace is None for trace in traces):
            return None
        name = "union" if isinstance(expression, Union) else "intersection"
        lines = [f"{pad}{name} of {len(parts)} closed set(s)"]
        for trace in traces:
            lines.extend(trace or [])
        return lines
    if isinstance(expression, Translate | Dilate):
        inner = closure_trace(expression.inner, depth + 1)
        if inner is None:
            return None
        if isinstance(expression, Translate):
            head = f"{pad}translate by {expression.shift}"
        else:
            head = f"{pad}dilate by {expression.factor}"
        return [head, *inner]
    rule = _leaf_rule(expression)
    return None if rule is None else [f"{pad}{rule}"]
