"""Package for unit tests of vector lattices and their order topologies."""

from .cli import DocumentTest, MainTest
from .core import CodecTest, LatticeLawsTest, RationalTest, VecTest
from .nets import (
    ConvergenceTest,
    EventualTest,
    FamilyCodecTest,
    FamilyTest,
    MonotonicityTest,
)
from .order_sets import (
    IntervalTest,
    SetCodecTest,
    SetExprTest,
    SolidityTest,
    StructureTest,
)
from .theorems import (
    BandPropositionTest,
    ExampleTest,
    ProbeVerifierTest,
    RegistryTest,
    TheoremReportTest,
    TheoremT1Test,
)
from .topologies import (
    ClosureTest,
    ContainmentTest,
    FittingTest,
    NeighborhoodTest,
    VectorTopologyProbeTest,
)

__all__ = [
    "BandPropositionTest",
    "ClosureTest",
    "CodecTest",
    "ContainmentTest",
    "ConvergenceTest",
    "DocumentTest",
    "EventualTest",
    "ExampleTest",
    "FamilyCodecTest",
    "FamilyTest",
    "FittingTest",
    "IntervalTest",
    "LatticeLawsTest",
    "MainTest",
    "MonotonicityTest",
    "NeighborhoodTest",
    "ProbeVerifierTest",
    "RationalTest",
    "RegistryTest",
    "SetCodecTest",
    "SetExprTest",
    "SolidityTest",
    "StructureTest",
    "TheoremReportTest",
    "TheoremT1Test",
    "VecTest",
    "VectorTopologyProbeTest",
]
