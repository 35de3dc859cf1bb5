"""Corpus scans: run every check over graphs x parameter grid and tabulate verdicts."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from itertools import product
from typing import Iterable, Iterator, TextIO

from .bounds import (
    DEFAULT_EPSILON,
    VERDICTS,
    BoundQuery,
    GraphFacts,
    Verdict,
    check_alpha_condition,
    check_complement_condition,
    check_fpm_spectral,
    check_lower_bound,
    check_spectral_condition,
    exact,
)
from .errors import DomainError, Graph6Error
from .graph import Graph
from .graph6 import parse_graph6, write_graph6
from .spectral import SpectralParams

DEFAULT_GRID = "a=0,0.5,1,2;b=1;k=0.5,1,2"

FIELDS = (
    "graph6", "n", "delta", "theorem_id", "a", "b", "k",
    "lambda1", "threshold", "two_mu_f", "verdict",
)


@dataclass(frozen=True)
class Grid:
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]
    k: tuple[Fraction, ...]

    def coefficient_pairs(self) -> Iterator[tuple[Fraction, Fraction]]:
        return product(self.a, self.b)


def parse_grid(text: str) -> Grid:
    """Parse "a=0,0.5,1,2;b=1;k=0.5,1,2"; omitted keys default to a=0, b=1, k=1."""
    values = {"a": (Fraction(0),), "b": (Fraction(1),), "k": (Fraction(1),)}
    for part in filter(None, (p.strip() for p in text.split(";"))):
        key, sep, rest = part.partition("=")
        key = key.strip()
        if not sep or key not in values:
            raise DomainError(f"bad grid component {part!r}; expected a=..., b=... or k=...")
        try:
            values[key] = tuple(Fraction(v.strip()) for v in rest.split(",") if v.strip())
        except ValueError:
            raise DomainError(f"bad number in grid component {part!r}") from None
        if not values[key]:
            raise DomainError(f"grid component {key} is empty")
    if any(a < 0 for a in values["a"]) or any(b <= 0 for b in values["b"]):
        raise DomainError("grid needs a >= 0 and b > 0")
    return Grid(values["a"], values["b"], values["k"])


def fmt_number(x: Fraction | None) -> str:
    if x is None:
        return ""
    if x.denominator == 1:
        return str(x.numerator)
    return format(float(x), ".12g")


def fmt_float(x: float | None) -> str:
    return "" if x is None else format(x, ".12g")


@dataclass(frozen=True)
class ReportRecord:
    graph6: str
    n: int
    delta: int
    theorem_id: str
    a: Fraction | None
    b: Fraction | None
    k: Fraction | None
    lambda1: float | None
    threshold: float | None
    two_mu_f: int | None
    verdict: str

    @classmethod
    def from_verdict(cls, graph6: str, v: Verdict) -> ReportRecord:
        ex = v.extra
        return cls(
            graph6, ex["n"], ex["delta"], v.theorem, ex.get("a"), ex.get("b"), ex.get("k"),
            v.lambda1, v.threshold, None if v.mu_f is None else v.mu_f.twice_value, v.label,
        )

    def row(self) -> list[str]:
        return [
            self.graph6, str(self.n), str(self.delta), self.theorem_id,
            fmt_number(self.a), fmt_number(self.b), fmt_number(self.k),
            fmt_float(self.lambda1), fmt_float(self.threshold),
            "" if self.two_mu_f is None else str(self.two_mu_f), self.verdict,
        ]

    def as_json(self) -> str:
        obj = dict(zip(FIELDS, self.row()))
        for key in ("n", "delta", "two_mu_f"):
            obj[key] = getattr(self, key)
        for key in ("a", "b", "k", "lambda1", "threshold"):
            obj[key] = float(obj[key]) if obj[key] != "" else None
        return json.dumps(obj)


def graph_verdicts(
    g: Graph | GraphFacts, grid: Grid, epsilon: float = DEFAULT_EPSILON, alpha=None
) -> list[Verdict]:
    """All verdicts for one graph over the grid, in a fixed order.

    Per (a, b, k) with 0 < k < n: the aD+bA bound (or the minimum-degree
    check when delta > (n-k)/2), the complement bound, the Q-index pair when
    a = b = 1 and the A_alpha pair with alpha = a/(a+b) unless ``alpha`` is
    given. Per (a, b): the mu_f lower bound and the three fractional perfect
    matching checks.
    """
    facts = g if isinstance(g, GraphFacts) else GraphFacts(g)
    out: list[Verdict] = []
    for a, b in grid.coefficient_pairs():
        params = SpectralParams(a, b)
        for k in grid.k:
            if not 0 < k < facts.n:
                continue
            q = BoundQuery(k, params, epsilon)
            main = check_spectral_condition(facts, q)
            out.append(main)
            if main.theorem == "th2":
                continue
            out.append(check_complement_condition(facts, q))
            if a == b == 1:
                out.append(check_spectral_condition(facts, q, theorem="co3i"))
                out.append(check_complement_condition(facts, q, theorem="co3ii"))
            al = exact(alpha) if alpha is not None else a / (a + b)
            out.extend(check_alpha_condition(facts, al, k, epsilon))
        out.append(check_lower_bound(facts, a, b, epsilon))
        out.extend(check_fpm_spectral(facts, a, b, epsilon))
    return out


def graph_records(
    graph6: str, g: Graph, grid: Grid, epsilon: float = DEFAULT_EPSILON, alpha=None
) -> list[ReportRecord]:
    return [ReportRecord.from_verdict(graph6, v) for v in graph_verdicts(g, grid, epsilon, alpha)]


@dataclass(frozen=True)
class SkippedLine:
    line_no: int
    text: str
    reason: str


@dataclass
class ScanReport:
    records: list[ReportRecord] = field(default_factory=list)
    skipped: list[SkippedLine] = field(default_factory=list)
    graphs: int = 0

    @property
    def counts(self) -> dict[str, int]:
        c = Counter(r.verdict for r in self.records)
        return {v: c.get(v, 0) for v in VERDICTS}

    @property
    def counterexamples(self) -> list[ReportRecord]:
        return [r for r in self.records if r.verdict == "counterexample"]

    def summary(self) -> str:
        counts = " ".join(f"{k}={v}" for k, v in self.counts.items())
        return (
            f"graphs={self.graphs} records={len(self.records)} {counts} "
            f"skipped={len(self.skipped)}"
        )


def _process(item: tuple[int, str | Graph], grid: Grid, epsilon: float):
    line_no, entry = item
    if isinstance(entry, Graph):
        return line_no, write_graph6(entry), graph_records(write_graph6(entry), entry, grid, epsilon), None
    text = entry.strip()
    try:
        g = parse_graph6(text)
    except Graph6Error as exc:
        return line_no, text, None, str(exc)
    return line_no, text, graph_records(text, g, grid, epsilon), None


def _corpus_items(corpus: Iterable[str | Graph]) -> Iterator[tuple[int, str | Graph]]:
    for line_no, entry in enumerate(corpus, 1):
        if isinstance(entry, str):
            text = entry.strip()
            if not text or text.startswith("#"):
                continue
        yield line_no, entry


def scan_for_counterexamples(
    corpus: Iterable[str | Graph],
    grid: Grid | str = DEFAULT_GRID,
    epsilon: float = DEFAULT_EPSILON,
    jobs: int = 1,
) -> ScanReport:
    """Apply every check to every graph of the corpus at every grid point.

    Corpus entries are graph6 lines or Graph objects; blank and '#' lines are
    ignored, malformed lines are recorded in ``skipped``. Records come back in
    corpus order whatever the number of worker processes.
    """
    if isinstance(grid, str):
        grid = parse_grid(grid)
    work = partial(_process, grid=grid, epsilon=epsilon)
    items = _corpus_items(corpus)
    report = ScanReport()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(work, items, chunksize=32))
    else:
        results = map(work, items)
    for line_no, text, records, error in results:
        if error is not None:
            report.skipped.append(SkippedLine(line_no, text, error))
            continue
        report.graphs += 1
        report.records.extend(records)
    return report


def write_records(records: Iterable[ReportRecord], fh: TextIO, as_json: bool = False) -> None:
    if as_json:
        for r in records:
            fh.write(r.as_json() + "\n")
        return
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(FIELDS)
    for r in records:
        writer.writerow(r.row())


def render_records(records: Iterable[ReportRecord], as_json: bool = False) -> str:
    buf = io.StringIO()
    write_records(records, buf, as_json)
    return buf.getvalue()
