"""Module for the command-line interface."""

from .riesz_inner.cli import (
    CommandResult,
    DocumentError,
    ProblemDocument,
    build_parser,
    cmd_check_set,
    cmd_convergence,
    cmd_fit,
    cmd_theorems,
    load_document,
    main,
)

__all__ = [
    "CommandResult",
    "DocumentError",
    "ProblemDocument",
    "build_parser",
    "cmd_check_set",
    "cmd_convergence",
    "cmd_fit",
    "cmd_theorems",
    "load_document",
    "main",
]
