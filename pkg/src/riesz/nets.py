"""Module for grouping sequence families, monotonicity and order convergence."""

from .riesz_inner.nets import (
    ConvergenceCertificate,
    ConvergenceRefutation,
    CoordDecay,
    Deviation,
    Direction,
    EventualVerdict,
    Explicit,
    Family,
    FamilyFormatError,
    InvalidTemplateError,
    Monotonicity,
    NonMonotoneFamilyError,
    NotConvergentError,
    Prefixed,
    RunningSupMeet,
    Scale,
    Shift,
    ShiftUp,
    Splice,
    decode_family,
    dominating_family,
    encode_family,
    eventually_in,
    monotonicity,
    order_converges,
    order_limit,
    running_sup_meet,
    value,
)

__all__ = [
    "ConvergenceCertificate",
    "ConvergenceRefutation",
    "CoordDecay",
    "Deviation",
    "Direction",
    "EventualVerdict",
    "Explicit",
    "Family",
    "FamilyFormatError",
    "InvalidTemplateError",
    "Monotonicity",
    "NonMonotoneFamilyError",
    "NotConvergentError",
    "Prefixed",
    "RunningSupMeet",
    "Scale",
    "Shift",
    "ShiftUp",
    "Splice",
    "decode_family",
    "dominating_family",
    "encode_family",
    "eventually_in",
    "monotonicity",
    "order_converges",
    "order_limit",
    "running_sup_meet",
    "value",
]
