# kfcert/core/cli.py
"""
Command-line interface.

Graph-consuming subcommands read one graph from a positional graph6
string, ``--file`` or stdin. Exit codes: 0 when the property holds, 1 when
it fails (or a campaign finds a violation), 2 on usage, parse or
configuration errors.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, TextIO

from pydantic import BaseModel

from .closure import l_closure
from .config.schema import config_summary, load_campaign_config
from .connectivity import is_t_connected, vertex_connectivity
from .data_models import CriticalityReason
from .exceptions import (
    ConfigurationError,
    EdgeListParseError,
    Graph6ParseError,
    InvalidGraphError,
    InvalidParametersError,
    KFCertError,
    SpectralConvergenceError,
)
from .extremal import (
    ExtremalParams,
    construct_extremal,
    extremal_edge_count,
    hong_edge_bound_doubled,
    spectral_edge_bridge,
    thm4_threshold,
)
from .formats import parse_edge_list, parse_graph6, serialize_edge_list, serialize_graph6
from .graph import Graph
from .invariants import clique_number, maximum_independent_set
from .matching import is_k_factor_critical
from .services.logger import LoggerService
from .spectral import DEFAULT_TOL, extremal_quotient_rho, hong_bound, spectral_radius
from .verification.campaign import search_counterexample
from .verification.data_models import Conclusion, TheoremReport
from .verification.theorems import verify_thm4, verify_thm5

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_USAGE = 2


class UsageError(KFCertError):
    """Bad flag value or input source; the message names the flag."""


def _vertex_set(vertices: List[int]) -> str:
    return "{" + ", ".join(str(v) for v in vertices) + "}"


class Command:
    """Shared plumbing for one subcommand invocation."""

    def __init__(self, args: argparse.Namespace, stdin: TextIO, stdout: TextIO):
        self.args = args
        self.stdin = stdin
        self.stdout = stdout

    def emit(self, text: str) -> None:
        self.stdout.write(text if text.endswith("\n") else text + "\n")

    def emit_json(self, payload: Any) -> None:
        if isinstance(payload, BaseModel):
            self.emit(payload.model_dump_json(indent=2))
        else:
            self.emit(json.dumps(payload, indent=2, sort_keys=True))

    def read_graph(self) -> Graph:
        args = self.args
        if args.graph is not None and args.file is not None:
            raise UsageError("--file: give either a positional graph or --file, not both")
        if args.graph is not None:
            text = args.graph
        elif args.file is not None:
            try:
                text = Path(args.file).read_text()
            except OSError as exc:
                raise UsageError(f"--file: cannot read {args.file}: {exc.strerror}") from exc
        else:
            text = self.stdin.read()

        if args.format == "edgelist":
            return parse_edge_list(text, n=args.order)
        lines = [line for line in text.splitlines() if line.strip()]
        if len(lines) != 1:
            raise UsageError(f"input: expected exactly one graph6 line, found {len(lines)}")
        return parse_graph6(lines[0])

    def write_graph(self, graph: Graph) -> str:
        return serialize_edge_list(graph) if self.args.format == "edgelist" else serialize_graph6(graph)


def _params(args: argparse.Namespace) -> ExtremalParams:
    try:
        return ExtremalParams.of(args.n, args.t, args.k)
    except InvalidParametersError as exc:
        raise UsageError(f"-n/-t/-k: {exc}") from exc


# -- subcommand handlers --------------------------------------------------------


def cmd_construct_extremal(cmd: Command) -> int:
    graph = construct_extremal(_params(cmd.args))
    if cmd.args.json:
        cmd.emit_json({"n": graph.n, "edges": graph.edge_count, "graph6": serialize_graph6(graph)})
    else:
        cmd.emit(cmd.write_graph(graph))
    return EXIT_OK


def cmd_check_critical(cmd: Command) -> int:
    graph = cmd.read_graph()
    if not 0 <= cmd.args.k <= graph.n:
        raise UsageError(f"-k: must satisfy 0 <= k <= n={graph.n}, got {cmd.args.k}")
    verdict = is_k_factor_critical(graph, cmd.args.k)
    if cmd.args.json:
        cmd.emit_json(verdict)
    elif verdict.is_critical:
        cmd.emit(f"{verdict.k}-factor-critical")
    elif verdict.reason == CriticalityReason.PARITY:
        cmd.emit(f"not critical, n - k = {graph.n - verdict.k} is odd")
    else:
        cmd.emit(f"not critical, witness {_vertex_set(verdict.witness or [])}")
    return EXIT_OK if verdict.is_critical else EXIT_FAILS


def cmd_closure(cmd: Command) -> int:
    graph = cmd.read_graph()
    if cmd.args.l < 0:
        raise UsageError(f"-l: closure level must be nonnegative, got {cmd.args.l}")
    closed, trace = l_closure(graph, cmd.args.l)
    if cmd.args.trace is not None:
        try:
            Path(cmd.args.trace).write_text(trace.to_json_lines())
        except OSError as exc:
            raise UsageError(f"--trace: cannot write {cmd.args.trace}: {exc.strerror}") from exc
    if cmd.args.json:
        cmd.emit_json({"graph6": serialize_graph6(closed), "trace": trace.model_dump(mode="json")})
    else:
        cmd.emit(cmd.write_graph(closed))
    return EXIT_OK


def cmd_connectivity(cmd: Command) -> int:
    graph = cmd.read_graph()
    t: Optional[int] = cmd.args.t
    if t is not None:
        holds = is_t_connected(graph, t)
        if cmd.args.json:
            cmd.emit_json({"t": t, "t_connected": holds})
        else:
            cmd.emit(f"{t}-connected" if holds else f"not {t}-connected")
        return EXIT_OK if holds else EXIT_FAILS
    if graph.n == 0:
        raise UsageError("input: connectivity of the empty graph is undefined")
    result = vertex_connectivity(graph)
    if cmd.args.json:
        cmd.emit_json(result)
    elif result.separator is None:
        cmd.emit(f"kappa={result.kappa}")
    else:
        cmd.emit(f"kappa={result.kappa} separator {_vertex_set(result.separator)}")
    return EXIT_OK


def cmd_clique(cmd: Command) -> int:
    result = clique_number(cmd.read_graph())
    if cmd.args.json:
        cmd.emit_json(result)
    else:
        cmd.emit(f"omega={result.omega} witness {_vertex_set(result.witness)}")
    return EXIT_OK


def cmd_independence(cmd: Command) -> int:
    witness = maximum_independent_set(cmd.read_graph())
    if cmd.args.json:
        cmd.emit_json({"alpha": len(witness), "witness": witness})
    else:
        cmd.emit(f"alpha={len(witness)} witness {_vertex_set(witness)}")
    return EXIT_OK


def cmd_spectral_radius(cmd: Command) -> int:
    graph = cmd.read_graph()
    if not cmd.args.tol > 0:
        raise UsageError(f"--tol: must be positive, got {cmd.args.tol}")
    try:
        estimate = spectral_radius(graph, cmd.args.tol)
    except SpectralConvergenceError as exc:
        logger.error("%s", exc)
        if cmd.args.json and exc.estimate is not None:
            cmd.emit_json({"converged": False, **exc.estimate.model_dump()})
        else:
            cmd.emit(f"not converged: {exc}")
        return EXIT_FAILS
    if cmd.args.json:
        cmd.emit_json({"converged": True, **estimate.model_dump()})
    else:
        cmd.emit(f"rho={estimate.rho:.12f} residual={estimate.residual:.3e} iterations={estimate.iterations}")
    return EXIT_OK


def cmd_hong_bound(cmd: Command) -> int:
    graph = cmd.read_graph()
    bound = hong_bound(graph)
    if cmd.args.json:
        cmd.emit_json({"n": graph.n, "edges": graph.edge_count, "bound": bound})
    else:
        cmd.emit(f"sqrt(2e - n + 1)={bound:.12f}")
    return EXIT_OK


def _emit_report(cmd: Command, report: TheoremReport) -> int:
    if cmd.args.json:
        cmd.emit_json(report)
    else:
        cmd.emit(f"{report.theorem.value}: {report.conclusion.value}")
        for name, check in report.hypotheses.items():
            mark = "ok" if check.passed else "FAIL"
            cmd.emit(f"  {name:<12} {mark:<4} value={check.value} required {check.required}")
        if report.criticality is not None and report.criticality.witness is not None:
            cmd.emit(f"  witness {_vertex_set(report.criticality.witness)}")
        if report.note:
            cmd.emit(f"  note: {report.note}")
    return EXIT_FAILS if report.conclusion == Conclusion.VIOLATION else EXIT_OK


def cmd_verify_thm4(cmd: Command) -> int:
    return _emit_report(cmd, verify_thm4(cmd.read_graph(), cmd.args.t, cmd.args.k))


def cmd_verify_thm5(cmd: Command) -> int:
    if not cmd.args.tol > 0:
        raise UsageError(f"--tol: must be positive, got {cmd.args.tol}")
    return _emit_report(cmd, verify_thm5(cmd.read_graph(), cmd.args.t, cmd.args.k, tol=cmd.args.tol))


def cmd_campaign(cmd: Command) -> int:
    config = load_campaign_config(Path(cmd.args.config))
    if cmd.args.workers is not None:
        if cmd.args.workers < 1:
            raise UsageError(f"--workers: must be at least 1, got {cmd.args.workers}")
        config = config.model_copy(update={"workers": cmd.args.workers})
    logger.info("campaign configuration loaded", extra=config_summary(config))
    report = search_counterexample(config)
    if cmd.args.output is not None:
        try:
            Path(cmd.args.output).write_text(report.model_dump_json(indent=2) + "\n")
        except OSError as exc:
            raise UsageError(f"--output: cannot write {cmd.args.output}: {exc.strerror}") from exc
    if cmd.args.json:
        cmd.emit_json(report)
    else:
        for cell in report.cells:
            p = cell.params
            counts = " ".join(f"{c.value}={v}" for c, v in cell.counts.items() if v)
            cmd.emit(f"n={p.n} t={p.t} k={p.k} seed={cell.cell_seed}: {counts}")
        cmd.emit(f"violations={report.violations}")
    return EXIT_FAILS if report.violations else EXIT_OK


def cmd_thresholds(cmd: Command) -> int:
    p = _params(cmd.args)
    values: Dict[str, Any] = {
        "thm4": thm4_threshold(p),
        "extremal_edges": extremal_edge_count(p),
        "rho": extremal_quotient_rho(p),
        "hong_edges": hong_edge_bound_doubled(p) / 2,
        "spectral_edge_bridge": spectral_edge_bridge(p),
    }
    if cmd.args.json:
        cmd.emit_json(values)
    else:
        cmd.emit(f"thm4={values['thm4']}")
        cmd.emit(f"extremal_edges={values['extremal_edges']}")
        cmd.emit(f"rho={values['rho']:.10f}")
    return EXIT_OK


# -- parser -------------------------------------------------------------------------


def _add_graph_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("graph", nargs="?", default=None, help="graph6 string (default: read stdin)")
    parser.add_argument("--file", default=None, help="read the graph from this file")
    parser.add_argument(
        "--order", type=int, default=None, help="vertex count for edge lists (default: largest vertex + 1)"
    )


def _add_params(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-n", type=int, required=True, help="order")
    parser.add_argument("-t", type=int, required=True, help="connectivity")
    parser.add_argument("-k", type=int, required=True, help="criticality")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print JSON instead of text")
    common.add_argument("--format", choices=["graph6", "edgelist"], default="graph6", help="graph I/O format")
    common.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR (default: $KFCERT_LOG_LEVEL)")
    common.add_argument("--log-json", action="store_true", default=None, help="structured JSON logs on stderr")

    parser = argparse.ArgumentParser(
        prog="kfcert", description="Check k-factor-criticality conditions for t-connected graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable[[Command], int], help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = add("construct-extremal", cmd_construct_extremal, "emit K_t v (K_{n+k-2t-1} + (t-k+1)K_1)")
    _add_params(p)

    p = add("check-critical", cmd_check_critical, "decide k-factor-criticality")
    _add_graph_input(p)
    p.add_argument("-k", type=int, required=True)

    p = add("closure", cmd_closure, "l-closure of the input graph")
    _add_graph_input(p)
    p.add_argument("-l", type=int, required=True)
    p.add_argument("--trace", default=None, help="write the joined pairs as JSON lines to this file")

    p = add("connectivity", cmd_connectivity, "vertex connectivity, or test t-connectivity with -t")
    _add_graph_input(p)
    p.add_argument("-t", type=int, default=None)

    _add_graph_input(add("clique", cmd_clique, "clique number with a witness"))
    _add_graph_input(add("independence", cmd_independence, "independence number with a witness"))

    p = add("spectral-radius", cmd_spectral_radius, "largest adjacency eigenvalue by power iteration")
    _add_graph_input(p)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)

    _add_graph_input(add("hong-bound", cmd_hong_bound, "sqrt(2e - n + 1)"))

    p = add("verify-thm4", cmd_verify_thm4, "edge-count condition report")
    _add_graph_input(p)
    p.add_argument("-t", type=int, required=True)
    p.add_argument("-k", type=int, required=True)

    p = add("verify-thm5", cmd_verify_thm5, "spectral-radius condition report")
    _add_graph_input(p)
    p.add_argument("-t", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)

    p = add("campaign", cmd_campaign, "random counterexample search from a JSON/YAML config")
    p.add_argument("--config", required=True)
    p.add_argument("--workers", type=int, default=None, help="override the config's worker count")
    p.add_argument("--output", default=None, help="also write the JSON report to this file")

    p = add("thresholds", cmd_thresholds, "edge threshold, extremal edge count and extremal rho")
    _add_params(p)

    return parser


def _describe(exc: KFCertError) -> str:
    if isinstance(exc, Graph6ParseError):
        return f"input: graph6 parse error: {exc}"
    if isinstance(exc, EdgeListParseError):
        return f"input: edge list parse error: {exc}"
    if isinstance(exc, ConfigurationError):
        return f"--config: {exc}"
    if isinstance(exc, InvalidGraphError):
        return f"input: {exc}"
    return str(exc)


def main(
    argv: Optional[List[str]] = None, stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None
) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE

    try:
        service = LoggerService.from_environment(level=args.log_level, json_format=args.log_json)
    except ValueError as exc:
        sys.stderr.write(f"kfcert: --log-level: {exc}\n")
        return EXIT_USAGE
    service.set_context(command=args.command)

    try:
        code = args.handler(Command(args, stdin, stdout))
    except KFCertError as exc:
        sys.stderr.write(f"kfcert {args.command}: {_describe(exc)}\n")
        return EXIT_USAGE
    service.debug("command finished", exit_code=code)
    return code


if __name__ == "__main__":
    sys.exit(main())
