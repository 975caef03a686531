"""Module for the command handlers behind the command-line interface.

Each handler decodes its task block, runs the library and returns the JSON
report, its text summary and the exit code.
"""

# ruff: noqa: TID252

import logging
from collections.abc import Callable
from typing import Any, cast

from ..core import Json, encode_carrier, encode_vec
from ..nets import ConvergenceCertificate, encode_family, order_converges
from ..order_sets import SetExpr, SolidityVerdict, check_solid, encode_set, semantics_name
from ..status import status_name
from ..theorems import TheoremReport, run_theorem, theorem_ids
from ..topologies import (
    NeighborhoodCatalog,
    Verdict,
    check_order_closed,
    check_quasi_order_closed,
    encode_fit,
    interval_fit,
    is_order_open,
    neighborhood_catalog,
    tau_e_convergence_report,
)
from .document import ProblemDocument, check_fields
from .exceptions import DocumentError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INTERNAL_ERROR = 2
EXIT_CONTRADICTION = 3

CHECKS = ("quasi-order-closed", "order-open", "order-closed", "solid")
CATALOGS = ("full", "chain")

_DEFAULT_DEPTH = 2


class CommandResult:
    """The outcome of one command."""

    def __init__(self, report: Json, text: str, exit_code: int = EXIT_OK) -> None:
        """Initialise a new command result."""
        self._report = report
        self._text = text
        self._exit_code = exit_code

    @property
    def report(self) -> Json:
        """The JSON report."""
        return self._report

    @property
    def text(self) -> str:
        """The text summary."""
        return self._text

    @property
    def exit_code(self) -> int:
        """The process exit code."""
        return self._exit_code


def _header(document: ProblemDocument) -> dict[str, Json]:
    header: dict[str, Json] = {
        "semantics": semantics_name(document.semantics),
        "search": document.config.describe(),
    }
    if document.has_carrier():
        header["carrier"] = encode_carrier(document.carrier)
    return header


def _names(data: Json, pointer: str, allowed: tuple[str, ...]) -> list[str]:
    if not isinstance(data, list):
        raise DocumentError(pointer, "expected an array of strings")
    names = cast("list[Any]", data)
    if not all(isinstance(name, str) for name in names):
        raise DocumentError(pointer, "expected an array of strings")
    for index, name in enumerate(names):
        if name not in allowed:
            raise DocumentError(f"{pointer}/{index}", f"expected one of {list(allowed)}")
    return names


def _run_check(
    name: str,
    expression: SetExpr,
    document: ProblemDocument,
) -> Verdict | SolidityVerdict:
    carrier, config = document.carrier, document.config
    if name == "quasi-order-closed":
        return check_quasi_order_closed(expression, carrier, config)
    if name == "order-open":
        return is_order_open(expression, carrier, config)
    if name == "order-closed":
        return check_order_closed(expression, carrier, config)
    return check_solid(expression, carrier, config)


def cmd_check_set(document: ProblemDocument) -> CommandResult:
    """Run the closure, openness and solidity checks on a set."""
    check_fields(document.payload, document.pointer, required={"set"}, optional={"checks"})
    expression = document.field("set", document.set_expr)
    checks = document.optional("checks", lambda data, at: _names(data, at, CHECKS)) or list(CHECKS)
    verdicts = {name: _run_check(name, expression, document) for name in checks}
    logger.debug("Checked %r: %s.", expression, {k: v.status for k, v in verdicts.items()})
    report = {
        **_header(document),
        "set": encode_set(expression),
        "verdicts": {name: verdict.to_json() for name, verdict in verdicts.items()},
    }
    text = "\n".join(f"{name}: {status_name(verdict.status)}" for name, verdict in verdicts.items())
    return CommandResult(report, text)


def cmd_convergence(document: ProblemDocument) -> CommandResult:
    """Decide order convergence of a family and check it against a neighbourhood catalog."""
    check_fields(
        document.payload,
        document.pointer,
        required={"family", "limit"},
        optional={"depth", "catalog"},
    )
    family = document.field("family", document.family)
    limit = document.field("limit", document.vec)
    depth = document.optional("depth", document.integer)
    if depth is None:
        depth = _DEFAULT_DEPTH
    kind = document.optional("catalog", document.string) or "full"
    if kind not in CATALOGS:
        raise DocumentError(f"{document.pointer}/catalog", f"expected one of {list(CATALOGS)}")
    try:
        catalog = neighborhood_catalog(limit, depth, document.semantics)
    except ValueError as error:
        raise DocumentError(f"{document.pointer}/depth", str(error)) from error
    if kind == "chain":
        catalog = NeighborhoodCatalog(catalog.center, catalog.chain, catalog.chain_length)
    outcome = order_converges(family, limit)
    tau_e = tau_e_convergence_report(family, limit, catalog)
    certified = isinstance(outcome, ConvergenceCertificate)
    report = {
        **_header(document),
        "family": encode_family(family),
        "limit": encode_vec(limit),
        "order": {"status": "certified" if certified else "refuted", **outcome.to_json()},
        "tau_e": tau_e.to_json(),
    }
    lines = [f"order: {'certified' if certified else 'refuted'}"]
    if tau_e.consistent:
        lines.append(f"tau_e: consistent over {len(catalog.intervals)} interval(s)")
    else:
        lines.extend(f"tau_e: refuted by {interval}" for interval, _ in tau_e.failures)
    return CommandResult(report, "\n".join(lines))


def cmd_fit(document: ProblemDocument) -> CommandResult:
    """Fit an open interval around a point inside an order-open set."""
    check_fields(document.payload, document.pointer, required={"set", "point"})
    expression = document.field("set", document.set_expr)
    point = document.field("point", document.vec)
    fit = interval_fit(
        point,
        expression,
        document.config,
        document.semantics,
        carrier=document.carrier,
    )
    report = {**_header(document), "set": encode_set(expression), "fit": encode_fit(fit, point)}
    if fit is None:
        text = f"no interval fits around {point} within budget {document.config.fit_budget}"
    else:
        method = "exact" if fit.exact else "sampled"
        text = f"fitted {fit.interval} at t={fit.exponent} ({method})"
    return CommandResult(report, text)


def _theorem_arguments(document: ProblemDocument) -> dict[str, Any]:
    payload = document.payload
    arguments: dict[str, Any] = {}
    if document.has_carrier():
        arguments["carrier"] = document.carrier
    if "family" in payload:
        arguments["family"] = document.field("family", document.family)
    if "x" in payload:
        arguments["x"] = document.field("x", document.vec)
    if "depth" in payload:
        arguments["depth"] = document.field("depth", document.integer)
    if "set" in payload:
        arguments["expression"] = document.field("set", document.set_expr)
    if "catalog" in payload:
        arguments["catalog"] = document.field(
            "catalog",
            lambda data, at: [
                document.set_expr(entry, f"{at}/{index}")
                for index, entry in enumerate(cast("list[Json]", _array(data, at)))
            ],
        )
    if "neighborhoods" in payload:
        arguments["neighborhoods"] = document.field("neighborhoods", _catalog_kind)
    if "samples" in payload:
        arguments["samples"] = document.field("samples", document.integer)
    return arguments


def _catalog_kind(data: Json, pointer: str) -> str:
    if data not in CATALOGS:
        raise DocumentError(pointer, f"expected one of {list(CATALOGS)}")
    return cast("str", data)


def _array(data: Json, pointer: str) -> list[Json]:
    if not isinstance(data, list):
        raise DocumentError(pointer, "expected an array")
    return cast("list[Json]", data)


def cmd_theorems(document: ProblemDocument) -> CommandResult:
    """Run one registered theorem verifier, or all of them for the id "all"."""
    check_fields(
        document.payload,
        document.pointer,
        required={"id"},
        optional={"family", "x", "depth", "set", "catalog", "neighborhoods", "samples"},
    )
    theorem_id = document.field("id", document.string)
    known = theorem_ids()
    if theorem_id != "all" and theorem_id not in known:
        raise DocumentError(f"{document.pointer}/id", f"expected one of {[*known, 'all']}")
    arguments = _theorem_arguments(document)
    ids = known if theorem_id == "all" else [theorem_id]
    reports: list[TheoremReport] = [
        run_theorem(name, document.config, document.semantics, **arguments) for name in ids
    ]
    contradicted = any(report.contradiction for report in reports)
    if contradicted:
        logger.warning("A theorem report contradicts the verified result.")
    report = {**_header(document), "reports": [report.to_json() for report in reports]}
    text = "\n".join(report.render_text() for report in reports)
    return CommandResult(report, text, EXIT_CONTRADICTION if contradicted else EXIT_OK)


COMMANDS: dict[str, tuple[str, Callable[[ProblemDocument], CommandResult]]] = {
    "check-set": ("check-set", cmd_check_set),
    "convergence": ("convergence", cmd_convergence),
    "fit": ("fit", cmd_fit),
    "theorems": ("theorem", cmd_theorems),
}
