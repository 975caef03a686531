"""Package for the order topology verdicts, neighbourhoods and interval fitting."""

from .closure import check_order_closed, check_quasi_order_closed, is_order_open
from .containment import (
    Containment,
    contains_exact,
    disjoint_exact,
    interval_within,
    sample_points,
)
from .exceptions import CenterMismatchError, PreconditionError
from .fitting import IntervalFit, encode_fit, interval_fit
from .neighborhoods import (
    NeighborhoodCatalog,
    TauEReport,
    encode_interval,
    neighborhood_catalog,
    tau_e_convergence_report,
)
from .probes import ProbeEntry, ProbeReport, vector_topology_probe
from .rules import closure_trace
from .search import closure_candidates, search_witness, try_witness
from .verdict import ClosureWitness, SearchReport, Verdict

__all__ = [
    "CenterMismatchError",
    "ClosureWitness",
    "Containment",
    "IntervalFit",
    "NeighborhoodCatalog",
    "PreconditionError",
    "ProbeEntry",
    "ProbeReport",
    "SearchReport",
    "TauEReport",
    "Verdict",
    "check_order_closed",
    "check_quasi_order_closed",
    "closure_candidates",
    "closure_trace",
    "contains_exact",
    "disjoint_exact",
    "encode_fit",
    "encode_interval",
    "interval_fit",
    "interval_within",
    "is_order_open",
    "neighborhood_catalog",
    "sample_points",
    "search_witness",
    "tau_e_convergence_report",
    "try_witness",
    "vector_topology_probe",
]
