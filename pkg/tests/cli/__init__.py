"""Package for unit tests of the command-line interface."""

from .test_document import DocumentTest
from .test_main import MainTest

__all__ = [
    "DocumentTest",
    "MainTest",
]
