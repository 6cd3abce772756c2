"""
Command Line Interface
Sub-commands over graphs, bounds, searches and labelings
"""

import argparse
import json
import logging
import sys
from typing import Callable, List, Optional, Sequence, Tuple

from core.exceptions import DeBruijnError, GuardExceededError, MalformedInputError
from core.graph import EdgeSet, GraphSpec, build_full_graph, format_word, word_edges
from core.serialization import EdgeFormat, deserialize, serialize
from constructions.construction1 import construction1
from constructions.construction2 import construction2
from puniq.checker import is_path_unique
from bounds.closed_forms import eta_closed_form, relative_bounds
from bounds.eta import count_words_containing, eta_exact, eta_oracle, eta_oracle_max
from bounds.report import CSV_HEADER, bounds_report
from search.algorithms import get_search
from search.outcome import AnnealConfig
from labeling.model import label_sequence, label_set_from_subgraph, parse_label_lines
from labeling.capacity import empirical_rate
from cli.table import (
    ASYMPTOTICS_HEADER, RELATIVE_HEADER, asymptotic_rows, relative_rows,
    render_csv, render_table, table_rows,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_EXHAUSTED = 2

CommandResult = Tuple[str, int]


class UsageError(Exception):
    """Bad command-line usage"""


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser that reports usage errors instead of exiting with status 2"""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read_text(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _parse_digits(text: str, q: int) -> List[int]:
    tokens = text.split()
    if len(tokens) == 1 and q <= 10:
        tokens = list(tokens[0])
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise MalformedInputError(f"expected digits, got {text!r}")


def _edge_format(args) -> EdgeFormat:
    name = args.format or "edgelist"
    if name == "csv":
        raise UsageError(f"{args.command}: csv output is not available, use edgelist, json or dot")
    return EdgeFormat(name)


def _load_edges(args) -> EdgeSet:
    fmt = EdgeFormat(args.format) if args.format in ("edgelist", "json") else EdgeFormat.EDGELIST
    return deserialize(_read_text(args.input), fmt)


def cmd_gen(args) -> CommandResult:
    return serialize(build_full_graph(GraphSpec(args.q, args.d)), _edge_format(args)), EXIT_OK


def cmd_construct1(args) -> CommandResult:
    return serialize(construction1(GraphSpec(args.q, args.d)), _edge_format(args)), EXIT_OK


def cmd_construct2(args) -> CommandResult:
    return serialize(construction2(args.q, args.d), _edge_format(args)), EXIT_OK


def cmd_check(args) -> CommandResult:
    edges = _load_edges(args)
    verdict = is_path_unique(edges)
    if verdict.is_path_unique:
        return "path unique\n", EXIT_OK
    lines = ["not path unique"]
    for number, walk in enumerate(verdict.witness, start=1):
        indices = ", ".join(str(e) for e in word_edges(edges.spec, walk))
        lines.append(f"walk {number}: {format_word(walk, ' ')} (edges {indices})")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_bounds(args) -> CommandResult:
    spec = GraphSpec(args.q, args.d)
    window = range(1, args.window + 1) if args.window else None
    report = bounds_report(spec, window=window)
    if args.format == "json":
        record = report.to_record()
        record['relative'] = {k: (str(v) if v is not None else None)
                              for k, v in relative_bounds(spec.q, spec.d).items()}
        return json.dumps(record, indent=2, sort_keys=True) + "\n", EXIT_OK
    return render_csv(CSV_HEADER, [report.csv_row()]), EXIT_OK


def cmd_eta(args) -> CommandResult:
    q, d, k = args.q, args.d, args.k
    header = ["q", "d", "k", "pattern", "closed_form", "automaton", "oracle"]
    if args.pattern:
        pattern = _parse_digits(args.pattern, q)
        automaton = count_words_containing(q, pattern, d + k)
        try:
            oracle = str(eta_oracle(q, d, k, pattern))
        except GuardExceededError:
            oracle = "-"
        row = [q, d, k, format_word(pattern), "-", automaton, oracle]
    else:
        try:
            oracle = str(eta_oracle_max(q, d, k)[0])
        except GuardExceededError:
            oracle = "-"
        row = [q, d, k, "max", eta_closed_form(q, d, k), eta_exact(q, d, k), oracle]
    return render_csv(header, [[str(c) for c in row]]), EXIT_OK


def _render_outcome(outcome, args) -> str:
    if args.format in (None, "json"):
        return json.dumps(outcome.to_record(), indent=2, sort_keys=True) + "\n"
    return serialize(outcome.witness, _edge_format(args))


def cmd_search_exhaustive(args) -> CommandResult:
    search = get_search("exhaustive", budget=args.budget, symmetry=args.symmetry)
    outcome = search.run(GraphSpec(args.q, args.d))
    return _render_outcome(outcome, args), EXIT_EXHAUSTED if outcome.budget_exhausted else EXIT_OK


def _anneal_config(args) -> AnnealConfig:
    return AnnealConfig.from_settings(
        seed=args.seed, iterations=args.iterations, restarts=args.restarts,
        initial_temperature=args.temperature, cooling_rate=args.cooling, workers=args.workers)


def cmd_search_anneal(args) -> CommandResult:
    outcome = get_search("anneal", config=_anneal_config(args)).run(GraphSpec(args.q, args.d))
    return _render_outcome(outcome, args), EXIT_OK


def _labels_from_args(args):
    if args.labels:
        with open(args.labels, encoding="utf-8") as handle:
            return parse_label_lines(handle, args.q)
    if args.input:
        edges = _load_edges(args)
        if edges.spec.q != args.q:
            raise MalformedInputError(f"edge list is over q={edges.spec.q}, not q={args.q}")
        return label_set_from_subgraph(edges)
    raise UsageError(f"{args.command}: give --labels FILE or --input EDGEFILE")


def cmd_label(args) -> CommandResult:
    if not args.word:
        raise UsageError("label: --word is required")
    labels = _labels_from_args(args)
    sequence = label_sequence(_parse_digits(args.word, args.q), labels)
    return " ".join(str(c) for c in sequence) + "\n", EXIT_OK


def cmd_rate(args) -> CommandResult:
    labels = _labels_from_args(args)
    series = empirical_rate(args.q, args.n, labels)
    return render_csv(["n", "rate"], [[str(n), f"{rate:.6f}"] for n, rate in series]), EXIT_OK


def _parse_rows(value: Optional[str]) -> Optional[int]:
    if value is None:
        return None
    key, sep, number = value.partition("=")
    if key != "q" or not sep or not number.isdigit():
        raise UsageError(f"table: --rows expects q=<q>, got {value!r}")
    return int(number)


def cmd_table(args) -> CommandResult:
    search = None
    if args.with_search:
        config = _anneal_config(args)
        strategy = get_search("anneal", config=config)
        search = lambda spec: strategy.run(spec).best_count
    return render_table(table_rows(_parse_rows(args.rows), search)), EXIT_OK


def cmd_asymptotics(args) -> CommandResult:
    if args.relative:
        if args.q is not None:
            specs = [(args.q, d) for d in range(2, 10)]
        else:
            specs = [(q, args.d or 2) for q in range(2, 11)]
        return render_csv(RELATIVE_HEADER, relative_rows(specs)), EXIT_OK
    return render_csv(ASYMPTOTICS_HEADER, asymptotic_rows()), EXIT_OK


COMMANDS: List[Tuple[str, Callable, str]] = [
    ("gen", cmd_gen, "print the full de Bruijn graph B(q,d)"),
    ("construct1", cmd_construct1, "print construction 1 on B(q,d)"),
    ("construct2", cmd_construct2, "print construction 2 on B(q,2)"),
    ("check", cmd_check, "decide path-uniqueness of an edge list"),
    ("bounds", cmd_bounds, "lower and upper bounds on gamma(q,d)"),
    ("eta", cmd_eta, "walks through one edge: closed form, automaton and oracle"),
    ("search-exhaustive", cmd_search_exhaustive, "exact gamma(q,d) by branch-and-bound"),
    ("search-anneal", cmd_search_anneal, "lower bound on gamma(q,d) by annealing"),
    ("label", cmd_label, "labeling sequence of a word"),
    ("rate", cmd_rate, "empirical labeling rate series"),
    ("table", cmd_table, "reference bound table as CSV"),
    ("asymptotics", cmd_asymptotics, "large-q limits of the relative bounds"),
]


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="debruijn", description="Path-unique subgraphs of de Bruijn graphs")
    subparsers = parser.add_subparsers(dest="command", parser_class=ArgumentParser)
    for name, handler, help_text in COMMANDS:
        sub = subparsers.add_parser(name, help=help_text)
        sub.set_defaults(handler=handler)
        sub.add_argument("--q", type=int, default=None if name == "asymptotics" else 2, help="alphabet size")
        sub.add_argument("--d", type=int, default=None if name == "asymptotics" else 2, help="dimension")
        sub.add_argument("--k", type=int, default=2, help="walk length")
        sub.add_argument("--n", type=int, default=12, help="input length")
        sub.add_argument("--format", choices=["csv", "json", "dot", "edgelist"], default=None)
        sub.add_argument("--out", default=None, help="output file (default standard output)")
        sub.add_argument("--input", default=None, help="edge list file, '-' for standard input")
        sub.add_argument("--seed", type=int, default=None)
        sub.add_argument("--iterations", type=int, default=None)
        sub.add_argument("--restarts", type=int, default=None)
        sub.add_argument("--workers", type=int, default=None)
        sub.add_argument("--temperature", type=float, default=None)
        sub.add_argument("--cooling", type=float, default=None)
        sub.add_argument("--budget", type=int, default=None, help="node expansion limit")
        if name == "search-exhaustive":
            sub.add_argument("--symmetry", action="store_true", help="reduce by graph symmetries")
        if name == "bounds":
            sub.add_argument("--window", type=int, default=None, help="largest walk length tried")
        if name == "eta":
            sub.add_argument("--pattern", default=None, help="edge word, e.g. 100")
        if name in ("label", "rate"):
            sub.add_argument("--labels", default=None, help="label file, one label per line")
        if name == "label":
            sub.add_argument("--word", default=None, help="input word digits")
        if name == "table":
            sub.add_argument("--rows", default=None, help="row filter q=<q>")
            sub.add_argument("--with-search", action="store_true", help="fill lb_comp by annealing")
        if name == "asymptotics":
            sub.add_argument("--relative", action="store_true",
                             help="relative bounds over d (with --q) or over q (with --d)")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse arguments, run one command and write its output

    Returns:
        0 on success, 1 on invalid input, 2 on guard or budget exhaustion
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_usage().strip())
        text, code = args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except GuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    except (DeBruijnError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID

    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    logger.debug(f"{args.command} finished with exit code {code}")
    return code
