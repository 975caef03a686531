"""Package for unit tests of sequence families and order convergence."""

from .test_codec import FamilyCodecTest
from .test_convergence import ConvergenceTest
from .test_eventual import EventualTest
from .test_family import FamilyTest
from .test_monotonicity import MonotonicityTest

__all__ = [
    "ConvergenceTest",
    "EventualTest",
    "FamilyCodecTest",
    "FamilyTest",
    "MonotonicityTest",
]
