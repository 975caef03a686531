"""Package for unit tests of exact scalars, carriers and lattice elements."""

from .test_codec import CodecTest
from .test_lattice_laws import LatticeLawsTest
from .test_rational import RationalTest
from .test_vec import VecTest

__all__ = [
    "CodecTest",
    "LatticeLawsTest",
    "RationalTest",
    "VecTest",
]
