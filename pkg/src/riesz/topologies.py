"""Module for grouping order-topology verdicts, neighbourhoods and fitting."""

from .riesz_inner.topologies import (
    CenterMismatchError,
    ClosureWitness,
    Containment,
    IntervalFit,
    NeighborhoodCatalog,
    PreconditionError,
    ProbeReport,
    SearchReport,
    TauEReport,
    Verdict,
    check_order_closed,
    check_quasi_order_closed,
    contains_exact,
    disjoint_exact,
    encode_fit,
    interval_fit,
    interval_within,
    is_order_open,
    neighborhood_catalog,
    sample_points,
    tau_e_convergence_report,
    vector_topology_probe,
)

__all__ = [
    "CenterMismatchError",
    "ClosureWitness",
    "Containment",
    "IntervalFit",
    "NeighborhoodCatalog",
    "PreconditionError",
    "ProbeReport",
    "SearchReport",
    "TauEReport",
    "Verdict",
    "check_order_closed",
    "check_quasi_order_closed",
    "contains_exact",
    "disjoint_exact",
    "encode_fit",
    "interval_fit",
    "interval_within",
    "is_order_open",
    "neighborhood_catalog",
    "sample_points",
    "tau_e_convergence_report",
    "vector_topology_probe",
]
