"""Package for the command-line interface."""

from .commands import (
    CHECKS,
    COMMANDS,
    EXIT_CONTRADICTION,
    EXIT_INPUT_ERROR,
    EXIT_INTERNAL_ERROR,
    EXIT_OK,
    CommandResult,
    cmd_check_set,
    cmd_convergence,
    cmd_fit,
    cmd_theorems,
)
from .document import TASKS, ProblemDocument, load_document
from .exceptions import DocumentError
from .main import build_parser, main, render_json

__all__ = [
    "CHECKS",
    "COMMANDS",
    "EXIT_CONTRADICTION",
    "EXIT_INPUT_ERROR",
    "EXIT_INTERNAL_ERROR",
    "EXIT_OK",
    "TASKS",
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
    "render_json",
]
