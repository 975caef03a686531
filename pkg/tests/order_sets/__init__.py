"""Package for unit tests of order intervals and set expressions."""

from .test_codec import SetCodecTest
from .test_interval import IntervalTest
from .test_set_expr import SetExprTest
from .test_solidity import SolidityTest
from .test_structure import StructureTest

__all__ = [
    "IntervalTest",
    "SetCodecTest",
    "SetExprTest",
    "SolidityTest",
    "StructureTest",
]
