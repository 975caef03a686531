"""Package for order topologies on vector lattices."""

from . import cli, lattice, nets, sets, theorems, topologies
from .riesz_inner.config import DEFAULT_CONFIG, SearchConfig
from .riesz_inner.core import TAIL_SEQ, Carrier, Vec
from .riesz_inner.nets import Family
from .riesz_inner.order_sets import Interval, IntervalSemantics, SetExpr
from .riesz_inner.status import Status
from .riesz_inner.theorems import TheoremReport
from .riesz_inner.topologies import Verdict

__all__ = [
    "DEFAULT_CONFIG",
    "TAIL_SEQ",
    "Carrier",
    "Family",
    "Interval",
    "IntervalSemantics",
    "SearchConfig",
    "SetExpr",
    "Status",
    "TheoremReport",
    "Vec",
    "Verdict",
    "cli",
    "lattice",
    "nets",
    "sets",
    "theorems",
    "topologies",
]
