"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the lines are repeated in the
terminal summary. Running this file directly prints them as well.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

import numpy as np
import pytest

from specmatch.bounds import exception_witness, lower_bound_value, phi
from specmatch.cli import main
from specmatch.families import complete_bipartite, family_b, family_b_specs, random_graph
from specmatch.fracmatch import deficiency_bruteforce, deficiency_of, fractional_matching_number
from specmatch.graph import complement
from specmatch.graph6 import parse_graph6
from specmatch.spectral import (
    SpectralParams,
    build_matrix,
    eigenvalues,
    family_quotient_radius,
    graph_quotient_matrix,
    graph_spectral_radius,
    interlaces,
    quotient_matrix,
)

from conftest import CORPUS_LE8, corpus_lines

RESULTS: list[str] = []
GRID_A = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2))
SHARP_PAIRS = ((2, 1), (1, 1), (2, 2), (3, 1))


def report(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})"
    RESULTS.append(line)
    print(line)
    assert ok, line


def oracle_radius(g, a) -> float:
    # numpy is the independent oracle here, not the package's own solver
    return float(np.linalg.eigvalsh(build_matrix(g, SpectralParams(a, 1)))[-1])


@pytest.fixture(scope="module")
def corpus():
    return [parse_graph6(s) for s in corpus_lines(8)]


def test_criterion_1_oracle_equivalence(corpus):
    bad = []
    for g in corpus:
        if fractional_matching_number(g).twice_value != g.n - deficiency_bruteforce(g).value:
            bad.append(g)
    report(1, "2 mu_f (double cover) = n - deficiency (brute force), connected n <= 8",
           not bad and len(corpus) == 12113, f"{len(corpus)} graphs, {len(bad)} mismatches")


def test_criterion_2_no_counterexamples(tmp_path, capsys):
    out = tmp_path / "scan.csv"
    code = main(["scan", str(CORPUS_LE8), "--grid", "a=0,0.5,1,2;b=1;k=0.5,1,2",
                 "--epsilon", "1e-9", "--out", str(out)])
    summary = capsys.readouterr().out.strip().splitlines()[-1]
    verdicts = [ln.rsplit(",", 1)[1] for ln in out.read_text().splitlines()[1:]]
    n_ce = verdicts.count("counterexample")
    report(2, "no counterexample verdicts over the full grid, connected n <= 8",
           code == 0 and n_ce == 0 and "graphs=12113" in summary, f"exit {code}; {summary}")


def test_criterion_3_sharpness():
    problems = []
    for delta, k in SHARP_PAIRS:
        g = complete_bipartite(delta, delta + k)
        n = g.n
        checks = {
            "lambda1(A)": (graph_spectral_radius(g, 0), phi(0, n, delta, k)),
            "q1": (graph_spectral_radius(g, 1), phi(1, n, delta, k)),
            "eq6 a=0": (graph_spectral_radius(g, 0), family_quotient_radius(0, delta, delta, delta + k)),
            "eq6 a=1": (graph_spectral_radius(g, 1), family_quotient_radius(1, delta, delta, delta + k)),
        }
        if (delta, k) == (2, 1):
            checks["sqrt6"] = (graph_spectral_radius(g, 0), math.sqrt(6))
            checks["q1=5"] = (graph_spectral_radius(g, 1), 5.0)
        for a in (0, 1, 2):
            checks[f"complement a={a}"] = (
                graph_spectral_radius(complement(g), a), (a + 1) * (delta + k - 1)
            )
        for name, (got, want) in checks.items():
            if abs(got - want) > 1e-8:
                problems.append(f"({delta},{k}) {name}: {got} vs {want}")
        if fractional_matching_number(g).value != delta:
            problems.append(f"({delta},{k}) mu_f != {delta}")
    report(3, "sharpness on K_{delta,delta+k}", not problems,
           f"pairs {list(SHARP_PAIRS)}; " + ("; ".join(problems) or "all within 1e-8, mu_f exact"))


def family_b_instances(max_x=12, max_k=6):
    return [(spec, family_b(spec)[0]) for spec in family_b_specs(max_x, max_k)]


def test_criterion_4_strictness():
    worst = math.inf
    count = 0
    for spec, g in family_b_instances():
        for a in (Fraction(1, 2), Fraction(2)):
            gap = graph_spectral_radius(g, a) - phi(a, spec.n, spec.delta, spec.k)
            worst = min(worst, gap)
            count += 1
    report(4, "lambda1 - phi > 1e-9 on family_b for a in {0.5, 2}", worst > 1e-9,
           f"{count} cases, smallest gap {worst:.3e}")


def test_criterion_5_lower_bounds(corpus):
    violations, checked = [], 0
    for g in corpus:
        delta = min(len(r) for r in g.adj)
        if g.n < 2 or 2 * delta > g.n - 1:
            continue
        mu = float(fractional_matching_number(g))
        for a in GRID_A:
            bound = lower_bound_value(a, g.n, delta, oracle_radius(g, a))
            checked += 1
            if mu < bound - 1e-9:
                violations.append((g, a, mu, bound))
    not_tight = []
    for delta, k in SHARP_PAIRS:
        g = complete_bipartite(delta, delta + k)
        for a in (0, 1):
            bound = lower_bound_value(a, g.n, delta, graph_spectral_radius(g, a))
            if abs(float(fractional_matching_number(g)) - bound) > 1e-8:
                not_tight.append((delta, k, a, bound))
    report(5, "mu_f lower bounds hold on the corpus and are tight on K_{delta,delta+k}",
           not violations and not not_tight,
           f"{checked} (graph, a) checks, {len(violations)} violations; "
           f"{2 * len(SHARP_PAIRS) - len(not_tight)}/{2 * len(SHARP_PAIRS)} tight cases at a in {{0,1}}")


def test_criterion_6_fpm(corpus):
    th4_bad = th7_bad = final_bad = 0
    exceptions = premises = 0
    for g in corpus:
        if g.n < 2:
            continue
        delta = min(len(r) for r in g.adj)
        has_fpm = fractional_matching_number(g).twice_value == g.n
        h = complement(g)
        for a in GRID_A:
            lam_c = oracle_radius(h, a)
            if 2 * delta <= g.n - 1:
                if oracle_radius(g, a) < phi(a, g.n, delta, 1) - 1e-9 and not has_fpm:
                    th4_bad += 1
            if lam_c < float((a + 1) * delta) - 1e-9 and not has_fpm:
                th7_bad += 1
            if lam_c < float((a + 1) * (delta + 1)) - 1e-9:
                premises += 1
                if has_fpm:
                    continue
                s = exception_witness(g)
                # constructive check: removing S leaves delta+1 isolated vertices
                if s is None or len(s) != delta or deficiency_of(g, s).value != 1 \
                        or len(deficiency_of(g, s).isolated_t) != delta + 1:
                    final_bad += 1
                else:
                    exceptions += 1
    report(6, "fractional perfect matching corollaries and exception structure",
           th4_bad == th7_bad == final_bad == 0,
           f"th4 misses {th4_bad}, th7 misses {th7_bad}, final premise {premises} times, "
           f"{exceptions} verified exceptions, {final_bad} unexplained")


def test_criterion_7_spectral_correctness():
    rng = random.Random(20240607)
    worst_res = worst_trace = 0.0
    for i in range(1000):
        n = rng.randint(1, 20)
        g = random_graph(n, rng.choice([0.2, 0.4, 0.6, 0.8]), seed=i)
        m = build_matrix(g, SpectralParams(rng.choice([0, 0.5, 1, 2]), 1))
        s = eigenvalues(m)
        worst_res = max(worst_res, s.residual)
        worst_trace = max(worst_trace, abs(float(np.trace(m)) - float(np.sum(s.values))))

    interlace_fail = 0
    for i in range(1000):
        n = rng.randint(2, 14)
        g = random_graph(n, rng.random(), seed=10_000 + i)
        m = build_matrix(g, SpectralParams(rng.choice([0, 0.5, 1, 2]), 1))
        parts = rng.randint(1, n - 1)
        labels = list(range(parts)) + [rng.randrange(parts) for _ in range(n - parts)]
        rng.shuffle(labels)
        blocks = [[v for v in range(n) if labels[v] == c] for c in range(parts)]
        # symmetric version of the quotient: S^T M S with S the normalized characteristic matrix
        s_mat = np.zeros((n, parts))
        for c, b in enumerate(blocks):
            s_mat[b, c] = 1 / math.sqrt(len(b))
        q = s_mat.T @ m @ s_mat
        q = (q + q.T) / 2
        eta = eigenvalues(q).values
        holds, _ = interlaces(eigenvalues(m).values, eta, tol=1e-8)
        # the package's average-row-sum quotient is similar to q
        b_vals = np.sort(np.linalg.eigvals(quotient_matrix(m, blocks).entries).real)[::-1]
        interlace_fail += not holds or not np.allclose(b_vals, eta, atol=1e-8)

    quotient_bad, instances = [], 0
    for spec, g in family_b_instances(max_x=12, max_k=12):
        instances += 1
        blocks = [range(spec.x_size), range(spec.x_size, spec.n)]
        for a in GRID_A:
            qm = graph_quotient_matrix(g, SpectralParams(a, 1), blocks)
            eta = max(np.linalg.eigvals(qm.entries).real)
            lam = graph_spectral_radius(g, a)
            closed = family_quotient_radius(a, spec.delta, spec.x_size, spec.y_size)
            if not qm.equitable or abs(lam - eta) > 1e-8 or abs(lam - closed) > 1e-8:
                quotient_bad.append((spec, a))
    ok = worst_res <= 1e-10 and worst_trace <= 1e-8 and not interlace_fail and not quotient_bad
    report(7, "Jacobi residual/trace, interlacing, equitable quotient radius", ok,
           f"max residual {worst_res:.2e}, max trace error {worst_trace:.2e}; "
           f"{interlace_fail}/1000 interlacing failures; "
           f"{len(quotient_bad)}/{instances * len(GRID_A)} quotient mismatches")


def test_criterion_8_determinism(tmp_path, capsys):
    corpus = tmp_path / "le7.g6"
    corpus.write_text("\n".join(corpus_lines(7)) + "\n")
    outputs = []
    for jobs in ("1", "8", "1", "8"):
        out = tmp_path / f"report_{len(outputs)}_{jobs}.csv"
        assert main(["scan", str(corpus), "--jobs", jobs, "--out", str(out)]) == 0
        outputs.append(out.read_bytes())
    capsys.readouterr()
    same = all(o == outputs[0] for o in outputs)
    report(8, "scan reports byte-identical for --jobs 1 and --jobs 8", same,
           f"{len(outputs)} runs over {len(corpus_lines(7))} graphs, {len(outputs[0])} bytes each")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
