"""Module for looking up theorem verifiers by id and running them on defaults."""

# ruff: noqa: TID252

from collections.abc import Callable
from typing import Any

from ..config import DEFAULT_CONFIG, SearchConfig
from ..core import TAIL_SEQ, Carrier, ones, unit_vector, zero
from ..nets import CoordDecay
from ..order_sets import DEFAULT_SEMANTICS, Band, IntervalSemantics
from ..topologies import NeighborhoodCatalog, neighborhood_catalog
from .band import verify_band_proposition
from .convergence import verify_theorem_t1
from .example import verify_example_e1
from .exceptions import UnknownTheoremError
from .probes import (
    default_open_catalog,
    tau_subset_probe,
    verify_solid_remark,
    verify_vector_topology,
)
from .report import TheoremReport

type Runner = Callable[..., TheoremReport]

_T1_DEPTH = 10
_TAU_SUBSET_SAMPLES = 50


def _example_e1(config: SearchConfig, semantics: IntervalSemantics, **_: Any) -> TheoremReport:
    return verify_example_e1(semantics, config)


def _t1(
    config: SearchConfig,
    semantics: IntervalSemantics,
    *,
    family: Any = None,
    x: Any = None,
    depth: int = _T1_DEPTH,
    neighborhoods: str = "chain",
    **_: Any,
) -> TheoremReport:
    if family is None:
        plane = Carrier.fin_dim(2)
        family = CoordDecay(zero(plane), ones(plane))
    if x is None:
        x = zero(family.carrier)
    chain = neighborhood_catalog(x, depth, semantics)
    if neighborhoods == "chain":
        chain = NeighborhoodCatalog(chain.center, chain.chain, chain.chain_length)
    return verify_theorem_t1(family, x, chain, config)


def _band(
    config: SearchConfig,
    semantics: IntervalSemantics,  # noqa: ARG001
    *,
    expression: Any = None,
    carrier: Carrier | None = None,
    **_: Any,
) -> TheoremReport:
    if expression is None:
        expression = Band([unit_vector(TAIL_SEQ, 0)])
    return verify_band_proposition(expression, carrier, config)


def _tau_subset(
    config: SearchConfig,
    semantics: IntervalSemantics,
    *,
    catalog: Any = None,
    carrier: Carrier | None = None,
    samples: int = _TAU_SUBSET_SAMPLES,
    **_: Any,
) -> TheoremReport:
    ambient = carrier or Carrier.fin_dim(2)
    sets = catalog if catalog is not None else default_open_catalog(ambient)
    return tau_subset_probe(sets, samples, ambient, config, semantics)


def _vector_topology(
    config: SearchConfig,
    semantics: IntervalSemantics,  # noqa: ARG001
    *,
    catalog: Any = None,
    carrier: Carrier | None = None,
    **_: Any,
) -> TheoremReport:
    return verify_vector_topology(catalog, carrier, config)


def _solid_remark(
    config: SearchConfig,
    semantics: IntervalSemantics,  # noqa: ARG001
    **_: Any,
) -> TheoremReport:
    return verify_solid_remark(None, config)


THEOREMS: dict[str, Runner] = {
    "example-e1": _example_e1,
    "t1": _t1,
    "band": _band,
    "tau-subset": _tau_subset,
    "vector-topology": _vector_topology,
    "solid-remark": _solid_remark,
}


def theorem_ids() -> list[str]:
    """Return the registered theorem ids in registration order."""
    return list(THEOREMS)


def run_theorem(
    theorem_id: str,
    config: SearchConfig = DEFAULT_CONFIG,
    semantics: IntervalSemantics = DEFAULT_SEMANTICS,
    **arguments: Any,
) -> TheoremReport:
    """Run the verifier registered under the id.

    Arguments the verifier does not take are ignored; missing ones fall back
    to the curated defaults.

    Raises:
        UnknownTheoremError: The id is not registered.
    """
    runner = THEOREMS.get(theorem_id)
    if runner is None:
        raise UnknownTheoremError(theorem_id)
    return runner(config, semantics, **arguments)
