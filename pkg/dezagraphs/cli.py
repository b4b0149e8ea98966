"""
Command Line Interface
`deza analyze | construct | enumerate | verify` over graph6 input and JSON output.

Exit codes: 0 ran to completion, 1 usage/parse/resource error, 2 infeasible construction.
"""

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from .analysis import (
    beta_by_formula,
    classify_all,
    deza_class,
    deza_invariants,
    deza_parameters,
    is_strictly_deza,
    is_strongly_regular,
    quotient_graph,
    rho_partition,
    type_census,
)
from .config import HARD_MAX_N, Settings, get_settings
from .constructions import construct_from_parameters, family_parameters, theorem1_family
from .enumeration import enumerate_strictly_deza, summarize, write_census
from .errors import DezaError, Graph6ParseError, HypothesisError, InfeasibleParametersError, ResourceLimitError
from .graph_core import Graph, diameter, from_graph6, read_graph6_lines, regular_degree, to_graph6
from .models import DezaParameters, GraphReport, QuotientSummary
from .verifier import lemma_suite, verify_theorem1, verify_theorem2

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2


class OutputFormat(str, Enum):
    JSON = "json"
    GRAPH6 = "graph6"
    TABLE = "table"


_DEFAULT_FORMATS = {
    "analyze": OutputFormat.JSON,
    "construct": OutputFormat.GRAPH6,
    "enumerate": OutputFormat.TABLE,
    "verify": OutputFormat.JSON,
}


class RunConfig(BaseModel):
    """Validated arguments of one CLI invocation."""

    command: str = Field(..., description="analyze, construct, enumerate or verify")
    input: Optional[Path] = Field(None, description="graph6 file, one record per line; '-' reads stdin")
    graph6: Optional[str] = Field(None, description="Inline graph6 record")
    output: Optional[Path] = None
    format: Optional[OutputFormat] = None
    n: Optional[int] = Field(None, ge=1)
    k: Optional[int] = Field(None, ge=1)
    s: Optional[int] = None
    t: Optional[int] = None
    params: Optional[DezaParameters] = None
    workers: Optional[int] = Field(None, ge=1)
    max_n: Optional[int] = Field(None, ge=1, le=HARD_MAX_N)
    log_level: Optional[str] = None

    @field_validator("params", mode="before")
    @classmethod
    def _parse_params(cls, value: Any) -> Any:
        if isinstance(value, str):
            return DezaParameters.parse(value)
        return value

    @model_validator(mode="after")
    def _check_sources(self) -> "RunConfig":
        graph_sources = [x for x in (self.input, self.graph6) if x is not None]
        if self.command == "analyze":
            if len(graph_sources) != 1:
                raise ValueError("analyze needs exactly one of --input and --graph6")
        elif self.command == "verify":
            if len(graph_sources) + (self.params is not None) != 1:
                raise ValueError("verify needs exactly one of --input, --graph6 and --params")
        elif self.command == "construct":
            family = self.s is not None or self.t is not None
            if family == (self.params is not None):
                raise ValueError("construct needs either --s and --t or --params")
            if family and (self.s is None or self.t is None):
                raise ValueError("construct needs both --s and --t")
        elif self.command == "enumerate":
            if self.n is None:
                raise ValueError("enumerate needs --n")
            if graph_sources:
                raise ValueError("enumerate takes no graph input")
        else:
            raise ValueError(f"unknown command {self.command!r}")
        if self.format is None:
            self.format = _DEFAULT_FORMATS[self.command]
        return self

    def settings(self) -> Settings:
        update: Dict[str, Any] = {}
        if self.max_n is not None:
            update["max_n"] = self.max_n
        if self.workers is not None:
            update["workers"] = self.workers
        return get_settings().model_copy(update=update)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="deza", description="Deza graph analysis, construction, enumeration and verification")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING (default) or ERROR")
    commands = parser.add_subparsers(dest="command", required=True)

    def graph_input(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("--input", type=Path, help="graph6 file, one graph per line ('-' for stdin)")
        sub.add_argument("--graph6", help="a single inline graph6 record")

    def output(sub: argparse.ArgumentParser, choices: Sequence[str]) -> None:
        sub.add_argument("--output", type=Path, help="write here instead of standard output")
        sub.add_argument("--format", choices=list(choices))

    analyze = commands.add_parser("analyze", help="parameters, types, rho-classes and quotient per graph")
    graph_input(analyze)
    output(analyze, ["json", "table"])

    construct = commands.add_parser("construct", help="build the 2-clique extension of K_{t,...,t}")
    construct.add_argument("--s", type=int, help="number of parts")
    construct.add_argument("--t", type=int, help="part size")
    construct.add_argument("--params", help="n,k,b,a; checked for feasibility first")
    output(construct, ["graph6", "json"])

    enumerate_ = commands.add_parser("enumerate", help="census of strictly Deza graphs on n vertices")
    enumerate_.add_argument("--n", type=int, required=True)
    enumerate_.add_argument("--k", type=int, help="restrict to one valency")
    enumerate_.add_argument("--workers", type=int)
    enumerate_.add_argument("--max-n", type=int, help=f"raise the vertex ceiling (at most {HARD_MAX_N})")
    enumerate_.add_argument("--output", type=Path, help="census JSON-lines path (default census_n<N>.jsonl)")
    enumerate_.add_argument("--format", choices=["table", "json"])

    verify = commands.add_parser("verify", help="classification verdict and lemma checks per graph")
    graph_input(verify)
    verify.add_argument("--params", help="n,k,b,a: check the parameter recognition statement instead")
    verify.add_argument("--workers", type=int)
    output(verify, ["json", "table"])
    return parser


def _emit(config: RunConfig, lines: List[str]) -> None:
    text = "".join(line + "\n" for line in lines)
    if config.output is None or config.command == "enumerate":
        sys.stdout.write(text)
        return
    config.output.write_text(text, encoding="utf-8")
    logger.info(f"wrote {len(lines)} lines to {config.output}")


def _table(header: Sequence[str], rows: List[Sequence[Any]]) -> List[str]:
    cells = [[str(x) for x in header]] + [[("-" if x is None else str(x)) for x in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    return ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in cells]


def load_graphs(config: RunConfig) -> List[Tuple[int, Graph]]:
    if config.graph6 is not None:
        try:
            return [(1, from_graph6(config.graph6))]
        except Graph6ParseError as exc:
            raise exc.at_line(1) from None
    if str(config.input) == "-":
        data = sys.stdin.buffer.read()
    else:
        data = config.input.read_bytes()
    return list(read_graph6_lines(data))


def analyze_graph(index: int, graph: Graph) -> GraphReport:
    params = deza_parameters(graph)
    srg = is_strongly_regular(graph)
    report = GraphReport(
        index=index,
        graph6=to_graph6(graph).decode("ascii"),
        n=graph.n,
        regular_degree=regular_degree(graph),
        diameter=diameter(graph),
        deza=params is not None,
        parameters=params,
        quadruple=None if params is None else params.label,
        strongly_regular=srg is not None,
        srg=srg,
        strictly_deza=is_strictly_deza(graph),
        deza_class=deza_class(graph).value,
    )
    if params is None or params.b == params.a:
        return report
    try:
        report.alpha, report.beta = deza_invariants(graph, params)
        beta = beta_by_formula(params)
        report.beta_formula = str(beta)
        if report.strictly_deza and params.k == params.b + 1 and beta > 1:
            report.types = type_census(classify_all(graph, params))
            rho = rho_partition(graph, params)
            report.rho_classes = rho.as_lists()
            quotient = quotient_graph(graph, rho)
            m = quotient.n
            report.quotient = QuotientSummary(
                order=m, edges=quotient.edge_count(), complete=quotient.edge_count() == m * (m - 1) // 2
            )
    except DezaError as exc:
        report.notes.append(str(exc))
    return report


def cmd_analyze(config: RunConfig) -> int:
    reports = [analyze_graph(line, graph) for line, graph in load_graphs(config)]
    if config.format is OutputFormat.TABLE:
        rows = [
            (r.index, r.quadruple, r.deza_class, r.alpha, r.beta, r.types and json.dumps(r.types), r.quotient and r.quotient.order)
            for r in reports
        ]
        _emit(config, _table(["line", "parameters", "class", "alpha", "beta", "types", "quotient"], rows))
    else:
        _emit(config, [json.dumps(r.model_dump(mode="json", by_alias=True)) for r in reports])
    return EXIT_OK


def cmd_construct(config: RunConfig) -> int:
    if config.params is not None:
        try:
            graph = construct_from_parameters(config.params)
        except InfeasibleParametersError as exc:
            print(f"infeasible {config.params.label}: {exc.report.reason}", file=sys.stderr)
            return EXIT_INFEASIBLE
        params = config.params
    else:
        try:
            graph = theorem1_family(config.s, config.t)
        except HypothesisError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        params = family_parameters(config.s, config.t)
    record = to_graph6(graph).decode("ascii")
    if config.format is OutputFormat.JSON:
        _emit(config, [json.dumps({"graph6": record, "parameters": params.model_dump()})])
    else:
        _emit(config, [record])
    return EXIT_OK


def cmd_enumerate(config: RunConfig) -> int:
    settings = config.settings()
    degrees = [config.k] if config.k is not None else None
    try:
        records = enumerate_strictly_deza(config.n, degrees=degrees, settings=settings)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    jsonl_path = config.output or Path(f"census_n{config.n}.jsonl")
    write_census(records, jsonl_path, jsonl_path.with_suffix(".g6"))
    counts = summarize(records)
    if config.format is OutputFormat.JSON:
        _emit(config, [json.dumps({"n": config.n, "total": len(records), "counts": counts})])
    else:
        lines = _table(["parameters", "graphs"], list(counts.items())) if counts else []
        _emit(config, lines + [f"{len(records)} strictly Deza graphs"])
    return EXIT_OK


def verify_graph(index: int, graph: Graph) -> Dict[str, Any]:
    verdict = verify_theorem1(graph)
    lemmas = lemma_suite(graph)
    counterexample = verdict.counterexample
    return {
        "index": index,
        "graph6": to_graph6(graph).decode("ascii"),
        "theorem1": verdict.holds,
        "applicable": verdict.applicable,
        "condition": None if counterexample is None else counterexample.condition,
        "reason": None if counterexample is None else counterexample.reason,
        "lemmas_passed": lemmas.all_passed,
        "verdict": verdict.model_dump(mode="json"),
        "lemmas": lemmas.model_dump(mode="json"),
    }


def _verify_all(graphs: List[Tuple[int, Graph]], workers: int) -> List[Dict[str, Any]]:
    if workers <= 1 or len(graphs) <= 1:
        return [verify_graph(index, graph) for index, graph in graphs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(verify_graph, [i for i, _ in graphs], [g for _, g in graphs]))


def cmd_verify(config: RunConfig) -> int:
    if config.params is not None:
        verdict = verify_theorem2(config.params)
        if config.format is OutputFormat.TABLE:
            _emit(config, _table(["parameters", "applicable", "holds", "reason"],
                                 [(config.params.label, verdict.applicable, verdict.holds, verdict.reason)]))
        else:
            _emit(config, [json.dumps(verdict.model_dump(mode="json"))])
        return EXIT_OK
    results = _verify_all(load_graphs(config), config.settings().workers)
    if config.format is OutputFormat.TABLE:
        rows = [(r["index"], r["theorem1"], r["applicable"], r["reason"], r["lemmas_passed"]) for r in results]
        _emit(config, _table(["line", "theorem1", "applicable", "reason", "lemmas"], rows))
    else:
        _emit(config, [json.dumps(r) for r in results])
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "construct": cmd_construct,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    values = {key: value for key, value in vars(args).items() if value is not None}
    try:
        config = RunConfig(**values)
    except ValidationError as exc:
        for error in exc.errors():
            print(f"error: {error['msg']}", file=sys.stderr)
        return EXIT_USAGE

    level = config.log_level or get_settings().log_level
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
        stream=sys.stderr,
    )
    try:
        return COMMANDS[config.command](config)
    except Graph6ParseError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except (DezaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
