"""Package for unit tests of the theorem verifiers."""

from .test_band import BandPropositionTest
from .test_convergence import TheoremT1Test
from .test_example import ExampleTest
from .test_probes import ProbeVerifierTest
from .test_registry import RegistryTest
from .test_report import TheoremReportTest

__all__ = [
    "BandPropositionTest",
    "ExampleTest",
    "ProbeVerifierTest",
    "RegistryTest",
    "TheoremReportTest",
    "TheoremT1Test",
]
