"""Package for symbolic sequence families, their limits and convergence."""

from .codec import decode_family, encode_family
from .convergence import (
    ConvergenceCertificate,
    ConvergenceRefutation,
    dominating_family,
    order_converges,
    running_sup_meet,
)
from .eventual import EventualVerdict, eventually_in
from .exceptions import (
    FamilyFormatError,
    InvalidTemplateError,
    NonMonotoneFamilyError,
    NotConvergentError,
)
from .family import (
    CoordDecay,
    Deviation,
    Explicit,
    Family,
    FamilyForm,
    Prefixed,
    RunningSupMeet,
    Scale,
    SequenceForm,
    Shift,
    ShiftUp,
    Splice,
    SpliceForm,
    as_sequence_form,
    splice,
    value,
)
from .monotonicity import (
    Direction,
    Monotonicity,
    direction_name,
    monotonicity,
    order_limit,
    scan_monotonicity,
)
from .sequences import (
    Approach,
    ApproachKind,
    ClampSequence,
    ConstantSequence,
    CoordinateSequence,
    DeviationSequence,
    ExplicitSequence,
    GeometricSequence,
    HarmonicSequence,
    PrefixedSequence,
    clamp,
    deviation,
    dominated_from,
    first_index,
    from_index,
    running_max,
)

__all__ = [
    "Approach",
    "ApproachKind",
    "ClampSequence",
    "ConstantSequence",
    "ConvergenceCertificate",
    "ConvergenceRefutation",
    "CoordDecay",
    "CoordinateSequence",
    "Deviation",
    "DeviationSequence",
    "Direction",
    "EventualVerdict",
    "Explicit",
    "ExplicitSequence",
    "Family",
    "FamilyForm",
    "FamilyFormatError",
    "GeometricSequence",
    "HarmonicSequence",
    "InvalidTemplateError",
    "Monotonicity",
    "NonMonotoneFamilyError",
    "NotConvergentError",
    "Prefixed",
    "PrefixedSequence",
    "RunningSupMeet",
    "Scale",
    "SequenceForm",
    "Shift",
    "ShiftUp",
    "Splice",
    "SpliceForm",
    "as_sequence_form",
    "clamp",
    "decode_family",
    "deviation",
    "direction_name",
    "dominated_from",
    "dominating_family",
    "encode_family",
    "eventually_in",
    "first_index",
    "from_index",
    "monotonicity",
    "order_converges",
    "order_limit",
    "running_max",
    "running_sup_meet",
    "scan_monotonicity",
    "splice",
    "value",
]
