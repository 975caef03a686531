"""Module for the command-line entry point."""

# ruff: noqa: TID252

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from .commands import COMMANDS, EXIT_INPUT_ERROR, EXIT_INTERNAL_ERROR, CommandResult
from .document import load_document

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser with one subcommand per task."""
    parser = argparse.ArgumentParser(
        prog="riesz",
        description="Decide order-topology properties of sets and sequence families.",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    for name, (_, handler) in COMMANDS.items():
        command = commands.add_parser(name, help=(handler.__doc__ or "").splitlines()[0])
        command.add_argument("document", type=Path, help="path of the JSON problem document")
        command.add_argument(
            "--semantics",
            choices=("strict-partial", "strict-uniform"),
            help="strictness semantics of open intervals",
        )
        command.add_argument("--horizon", type=int, help="brute-force scan length")
        command.add_argument("--grid-scale", type=int, help="grid refinement factor")
        command.add_argument("--workers", type=int, help="threads used by witness searches")
        command.add_argument("--output", type=Path, help="write the JSON report to this file")
        command.add_argument("--verbose", action="store_true", help="log at debug level")
    return parser


def render_json(report: object) -> str:
    """Return the canonical JSON text of a report."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _run(arguments: argparse.Namespace) -> CommandResult:
    task, handler = COMMANDS[arguments.command]
    data = json.loads(arguments.document.read_text(encoding="utf-8"))
    document = load_document(
        data,
        task,
        semantics=arguments.semantics,
        horizon=arguments.horizon,
        grid_scale=arguments.grid_scale,
        workers=arguments.workers,
    )
    return handler(document)


def main(argv: Sequence[str] | None = None) -> int:
    """Run the command line and return the exit code.

    Exit codes: 0 for a computed report, 1 for an input error, 2 for an
    internal error and 3 when a theorem report contradicts its result.
    """
    arguments = build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if arguments.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        result = _run(arguments)
    except (OSError, ValueError, LookupError) as error:
        logger.error("%s", error)  # noqa: TRY400
        return EXIT_INPUT_ERROR
    except Exception:
        logger.exception("Internal error while running %s.", arguments.command)
        return EXIT_INTERNAL_ERROR
    sys.stdout.write(result.text + "\n")
    if arguments.output is not None:
        arguments.output.write_text(render_json(result.report), encoding="utf-8")
    return result.exit_code
