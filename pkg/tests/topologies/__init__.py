"""Package for unit tests of order topologies."""

from .test_closure import ClosureTest
from .test_containment import ContainmentTest
from .test_fitting import FittingTest
from .test_neighborhoods import NeighborhoodTest
from .test_probes import VectorTopologyProbeTest

__all__ = [
    "ClosureTest",
    "ContainmentTest",
    "FittingTest",
    "NeighborhoodTest",
    "VectorTopologyProbeTest",
]
