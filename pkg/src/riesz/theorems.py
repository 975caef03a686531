"""Module for grouping the theorem verifiers and their reports."""

from .riesz_inner.theorems import (
    ChainError,
    Conclusion,
    NotCertifiedError,
    NotIdealShapedError,
    Step,
    TheoremReport,
    UnknownTheoremError,
    conclude,
    default_open_catalog,
    run_theorem,
    tau_subset_probe,
    theorem_ids,
    verify_band_proposition,
    verify_example_e1,
    verify_solid_remark,
    verify_theorem_t1,
    verify_vector_topology,
)

__all__ = [
    "ChainError",
    "Conclusion",
    "NotCertifiedError",
    "NotIdealShapedError",
    "Step",
    "TheoremReport",
    "UnknownTheoremError",
    "conclude",
    "default_open_catalog",
    "run_theorem",
    "tau_subset_probe",
    "theorem_ids",
    "verify_band_proposition",
    "verify_example_e1",
    "verify_solid_remark",
    "verify_theorem_t1",
    "verify_vector_topology",
]
