"""Package for the verifiers of the order topology results."""

from .band import verify_band_proposition
from .convergence import verify_theorem_t1
from .example import verify_example_e1
from .exceptions import (
    ChainError,
    NotCertifiedError,
    NotIdealShapedError,
    UnknownTheoremError,
)
from .probes import (
    default_open_catalog,
    default_solid_catalog,
    interior_samples,
    tau_subset_probe,
    verify_solid_remark,
    verify_vector_topology,
)
from .registry import THEOREMS, run_theorem, theorem_ids
from .report import Conclusion, Step, TheoremReport, conclude, conclusion_name

__all__ = [
    "THEOREMS",
    "ChainError",
    "Conclusion",
    "NotCertifiedError",
    "NotIdealShapedError",
    "Step",
    "TheoremReport",
    "UnknownTheoremError",
    "conclude",
    "conclusion_name",
    "default_open_catalog",
    "default_solid_catalog",
    "interior_samples",
    "run_theorem",
    "tau_subset_probe",
    "theorem_ids",
    "verify_band_proposition",
    "verify_example_e1",
    "verify_solid_remark",
    "verify_theorem_t1",
    "verify_vector_topology",
]
