"""Command line front end.

    specmatch analyze GRAPH6 [--a A] [--b B] [--k K] [--alpha ALPHA] [--json]
    specmatch scan CORPUS [--grid "a=0,0.5,1,2;b=1;k=0.5,1,2"] [--out PATH] [--jobs N] [--json]
    specmatch construct FAMILY key=value ... [--seed S] [--out PATH]

Exit codes: 0 clean, 1 input or domain error, 2 counterexample found.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterator, Sequence, TextIO

from .bounds import DEFAULT_EPSILON, GraphFacts
from .errors import SpecmatchError
from .families import (
    FamilyBSpec,
    complete_bipartite,
    family_b,
    join_exception,
    minimal_x_size,
    random_graph,
)
from .fracmatch import brute_cap, deficiency_bruteforce, fractional_matching_witness
from .graph import complete_graph
from .graph6 import parse_graph6, write_graph6
from .scan import (
    DEFAULT_GRID,
    Grid,
    ReportRecord,
    fmt_float,
    graph_verdicts,
    parse_grid,
    scan_for_counterexamples,
    write_records,
)
from .spectral import SpectralParams, build_matrix, eigenvalues

EXIT_OK, EXIT_INPUT, EXIT_COUNTEREXAMPLE = 0, 1, 2


@contextmanager
def _output(path: str | None) -> Iterator[TextIO]:
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _number(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def cmd_analyze(args: argparse.Namespace) -> int:
    g = parse_graph6(args.graph6)
    g6 = write_graph6(g)
    if not 0 < args.k < g.n:
        raise SpecmatchError(f"k must lie in (0, n) = (0, {g.n}), got {args.k}")
    grid = Grid((args.a,), (args.b,), (args.k,))
    facts = GraphFacts(g)
    records = [
        ReportRecord.from_verdict(g6, v)
        for v in graph_verdicts(facts, grid, args.epsilon, args.alpha)
    ]
    witness = fractional_matching_witness(g)
    spectrum = eigenvalues(build_matrix(g, SpectralParams(args.a, args.b))).values
    summary = {
        "graph6": g6,
        "n": g.n,
        "delta": facts.delta,
        "connected": facts.connected,
        "mu_f": str(facts.mu_f),
        "two_mu_f": facts.mu_f.twice_value,
        "fractional_matching": [list(t) for t in witness.as_triples()],
        "spectrum": [float(fmt_float(x)) for x in spectrum],
    }
    if g.n <= brute_cap():
        d = deficiency_bruteforce(g)
        summary["deficiency"] = {"S": list(d.set_s), "T": list(d.isolated_t), "value": d.value}

    with _output(args.out) as fh:
        if args.json:
            fh.write(json.dumps(summary) + "\n")
        else:
            for key, value in summary.items():
                fh.write(f"# {key}: {json.dumps(value)}\n")
        write_records(records, fh, args.json)
    return EXIT_COUNTEREXAMPLE if any(r.verdict == "counterexample" for r in records) else EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    grid = parse_grid(args.grid)
    try:
        if args.corpus == "-":
            lines = sys.stdin.readlines()
        else:
            with open(args.corpus, encoding="utf-8") as fh:
                lines = fh.readlines()
    except OSError as exc:
        print(f"error: cannot read corpus: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = scan_for_counterexamples(lines, grid, args.epsilon, args.jobs)
    with _output(args.out) as fh:
        write_records(report.records, fh, args.json)
    for s in report.skipped:
        print(f"skipped line {s.line_no} ({s.text!r}): {s.reason}", file=sys.stderr)
    print(report.summary(), file=sys.stderr if args.out in (None, "-") else sys.stdout)
    return EXIT_COUNTEREXAMPLE if report.counterexamples else EXIT_OK


def _parse_params(tokens: Sequence[str]) -> dict[str, str]:
    params = {}
    for tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep:
            raise SpecmatchError(f"expected key=value, got {tok!r}")
        params[key.strip().lower()] = value.strip()
    return params


def _h_graph(text: str, delta: int):
    """H given as K<d> (complete), <d>K1 (edgeless) or an edge list like 0-1,1-2."""
    if text == f"K{delta}":
        return complete_graph(delta).edges()
    if text in (f"{delta}K1", "empty", ""):
        return []
    try:
        return [tuple(int(x) for x in e.split("-")) for e in text.split(",") if e]
    except ValueError:
        raise SpecmatchError(f"cannot read H={text!r} for delta={delta}") from None


def cmd_construct(args: argparse.Namespace) -> int:
    params = _parse_params(args.params)

    def need(key: str) -> str:
        if key not in params:
            raise SpecmatchError(f"{args.family} needs parameter {key}=...")
        return params[key]

    lines = []
    if args.family == "complete_bipartite":
        lines.append(write_graph6(complete_bipartite(int(need("p")), int(need("q")))))
    elif args.family == "family_b":
        delta, k = int(need("delta")), int(need("k"))
        m = int(params["m"]) if "m" in params else minimal_x_size(delta, k)
        spec = FamilyBSpec(delta, k, m)
        g, connected = family_b(spec)
        lines.append(
            f"# family_b delta={delta} k={k} m={m} d={spec.d} connected={str(connected).lower()}"
        )
        lines.append(write_graph6(g))
    elif args.family == "join_exception":
        delta = int(need("delta"))
        h = params.get("h", f"{delta}K1")
        lines.append(write_graph6(join_exception(delta, _h_graph(h, delta))))
    elif args.family == "random":
        n, p = int(need("n")), float(need("p"))
        seed = int(params.get("seed", args.seed))
        count = int(params.get("count", 1))
        lines.extend(write_graph6(random_graph(n, p, seed + i)) for i in range(count))
    with _output(args.out) as fh:
        fh.write("\n".join(lines) + "\n")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for counterexamples
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="specmatch",
        description="Fractional matching numbers versus spectral radii of aD(G)+bA(G).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON,
                       help="margin for strict spectral inequalities (default 1e-9)")
        p.add_argument("--out", default=None, help="output file (default stdout)")
        p.add_argument("--json", action="store_true", help="one JSON object per line instead of CSV")

    p = sub.add_parser("analyze", help="run every check on a single graph")
    p.add_argument("graph6")
    p.add_argument("--a", type=_number, default=Fraction(0))
    p.add_argument("--b", type=_number, default=Fraction(1))
    p.add_argument("--k", type=_number, default=Fraction(1))
    p.add_argument("--alpha", type=_number, default=None,
                   help="alpha for the A_alpha checks (default a/(a+b))")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("scan", help="scan a graph6 corpus for counterexamples")
    p.add_argument("corpus", help="graph6 file, one graph per line; '-' for stdin")
    p.add_argument("--grid", default=DEFAULT_GRID, help=f"parameter grid (default {DEFAULT_GRID!r})")
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("construct", help="emit graph6 lines for a graph family")
    p.add_argument("family", choices=["complete_bipartite", "family_b", "join_exception", "random"])
    p.add_argument("params", nargs="*", help="key=value pairs, e.g. delta=2 k=1 m=2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_construct)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SpecmatchError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
