"""Threshold function phi and executable checks of the spectral matching bounds.

Every check returns a ``Verdict``. The spectral side of a premise is a float
comparison with margin epsilon; anything within epsilon of its threshold is
reported as a boundary case, never as a counterexample. The matching side is
decided exactly: 2*mu_f is an integer and k is held as a rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from numbers import Real
from typing import Callable, Union

from .errors import DomainError
from .families import family_b_membership
from .fracmatch import HalfInt, fractional_matching_number
from .graph import Graph, complement, empty_graph, induced_subgraph, is_connected, join
from .spectral import SpectralParams, graph_spectral_radius

DEFAULT_EPSILON = 1e-9

VERDICTS = ("vacuous", "confirmed", "boundary", "counterexample")


def exact(x) -> Fraction:
    """Exact rational for an int, Fraction, decimal string or float.

    Floats are read through their shortest repr, so 0.1 means 1/10.
    """
    if isinstance(x, float):
        if not math.isfinite(x):
            raise DomainError(f"non-finite value {x}")
        return Fraction(repr(x))
    return Fraction(x)


@dataclass(frozen=True)
class BoundQuery:
    k: Real
    params: SpectralParams = SpectralParams()
    epsilon: float = DEFAULT_EPSILON

    def __post_init__(self):
        if self.epsilon <= 0:
            raise DomainError(f"epsilon must be positive, got {self.epsilon}")


@dataclass(frozen=True)
class Verdict:
    theorem: str
    premise_holds: bool
    conclusion_holds: bool
    boundary: bool
    lambda1: float | None
    threshold: float | None
    mu_f: HalfInt | None
    extra: dict = field(default_factory=dict)
    note: str = ""

    @property
    def is_counterexample(self) -> bool:
        return self.premise_holds and not self.conclusion_holds and not self.boundary

    @property
    def label(self) -> str:
        if self.boundary:
            return "boundary"
        if not self.premise_holds:
            return "vacuous"
        return "confirmed" if self.conclusion_holds else "counterexample"


class GraphFacts:
    """Lazily computed, cached invariants of one graph shared across checks."""

    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.delta = min((len(r) for r in g.adj), default=0)
        self.connected = is_connected(g)
        self._mu_f: HalfInt | None = None
        self._complement: Graph | None = None
        self._radius: dict[tuple[Fraction, bool], float] = {}

    @property
    def mu_f(self) -> HalfInt:
        if self._mu_f is None:
            self._mu_f = fractional_matching_number(self.g)
        return self._mu_f

    @property
    def complement(self) -> Graph:
        if self._complement is None:
            self._complement = complement(self.g)
        return self._complement

    def radius(self, a, b, of_complement: bool = False) -> float:
        """lambda_1(aD + bA) of G or its complement.

        Cached per ratio a/b; J(a, b) = b * J(a/b, 1) supplies the rest.
        """
        a, b = exact(a), exact(b)
        if b == 0:
            h = self.complement if of_complement else self.g
            return float(a) * max(len(r) for r in h.adj)
        key = (a / b, of_complement)
        if key not in self._radius:
            h = self.complement if of_complement else self.g
            self._radius[key] = graph_spectral_radius(h, key[0], 1)
        return float(b) * self._radius[key]


GraphLike = Union[Graph, GraphFacts]


def _facts(g: GraphLike) -> GraphFacts:
    return g if isinstance(g, GraphFacts) else GraphFacts(g)


def phi(a: Real, n: int, delta: int, k: Real) -> float:
    """Piecewise spectral threshold.

    a = 0:      delta * sqrt(1 + 2k/(n-k))
    0 < a <= 1: 2 a delta n / (n-k)
    a > 1:      a delta (n+k) / (n-k)
    """
    a_, k_ = exact(a), exact(k)
    if a_ < 0:
        raise DomainError(f"phi needs a >= 0, got a={a}")
    if not 0 < k_ < n:
        raise DomainError(f"phi needs 0 < k < n, got k={k}, n={n}")
    if not 1 <= delta <= (n - k_) / 2:
        raise DomainError(f"phi needs 1 <= delta <= (n-k)/2, got delta={delta}, n={n}, k={k}")
    nk = float(n - k_)
    if a_ == 0:
        return delta * math.sqrt(1 + 2 * float(k_) / nk)
    if a_ <= 1:
        return 2 * float(a_) * delta * n / nk
    return float(a_) * delta * float(n + k_) / nk


def _extra(f: GraphFacts, k, a=None, b=None) -> dict:
    out = {"n": f.n, "delta": f.delta, "k": None if k is None else exact(k)}
    if a is not None:
        out["a"], out["b"] = exact(a), exact(b)
    return out


def _vacuous(f: GraphFacts, theorem: str, note: str, extra: dict) -> Verdict:
    return Verdict(theorem, False, False, False, None, None, None, extra, note)


def _hypothesis_problem(f: GraphFacts) -> str | None:
    if f.n <= 1:
        return f"trivial graph (n={f.n})"
    if not f.connected:
        return "graph is disconnected"
    return None


def _check_k(f: GraphFacts, k) -> Fraction:
    k_ = exact(k)
    if not 0 < k_ < f.n:
        raise DomainError(f"k must lie in (0, n) = (0, {f.n}), got {k}")
    return k_


def check_min_degree_condition(g: GraphLike, k: Real) -> Verdict:
    """delta > (n-k)/2 implies mu_f > (n-k)/2, decided in exact arithmetic."""
    f = _facts(g)
    extra = _extra(f, k)
    problem = _hypothesis_problem(f)
    if problem:
        return _vacuous(f, "th2", problem, extra)
    k_ = _check_k(f, k)
    target = f.n - k_
    premise = 2 * f.delta > target
    return Verdict(
        "th2", premise, f.mu_f.twice_value > target, False,
        None, float(target / 2), f.mu_f, extra,
    )


def _spectral_check(
    f: GraphFacts,
    theorem: str,
    k,
    epsilon: float,
    extra: dict,
    spectral: Callable[[], tuple[float, float]],
) -> Verdict:
    """Shared premise/conclusion logic of the (n-k)/2 bounds.

    ``spectral`` returns (lambda_1, threshold) and is only called once the
    hypotheses (connected, n >= 2, 0 < k < n, delta <= (n-k)/2) hold; a graph
    with delta > (n-k)/2 is routed to the minimum-degree check.
    """
    problem = _hypothesis_problem(f)
    if problem:
        return _vacuous(f, theorem, problem, extra)
    k_ = _check_k(f, k)
    target = f.n - k_
    if 2 * f.delta > target:
        routed = check_min_degree_condition(f, k)
        return Verdict(
            routed.theorem, routed.premise_holds, routed.conclusion_holds, False,
            None, routed.threshold, routed.mu_f, extra,
            f"delta > (n-k)/2; routed from {theorem}",
        )
    lam, thr = spectral()
    return Verdict(
        theorem,
        lam < thr - epsilon,
        f.mu_f.twice_value > target,
        abs(lam - thr) <= epsilon,
        lam, thr, f.mu_f, extra,
    )


def check_spectral_condition(g: GraphLike, q: BoundQuery, theorem: str = "th1") -> Verdict:
    """lambda_1(aD + bA) < b * phi(a/b, n, delta, k) implies mu_f > (n-k)/2."""
    f = _facts(g)
    a, b = exact(q.params.a), exact(q.params.b)

    def spectral():
        return f.radius(a, b), float(b) * phi(a / b, f.n, f.delta, q.k)

    return _spectral_check(f, theorem, q.k, q.epsilon, _extra(f, q.k, a, b), spectral)


def check_complement_condition(g: GraphLike, q: BoundQuery, theorem: str = "th5") -> Verdict:
    """lambda_1(aD + bA of the complement) < (a+b)(delta+k-1) implies mu_f > (n-k)/2."""
    f = _facts(g)
    a, b = exact(q.params.a), exact(q.params.b)

    def spectral():
        return f.radius(a, b, of_complement=True), float((a + b) * (f.delta + exact(q.k) - 1))

    return _spectral_check(f, theorem, q.k, q.epsilon, _extra(f, q.k, a, b), spectral)


def alpha_branch(alpha) -> str:
    alpha = exact(alpha)
    if alpha == 0:
        return "co4i"
    return "co4ii" if alpha <= Fraction(1, 2) else "co4iii"


def _alpha_threshold(branch: str, alpha: Fraction, n: int, delta: int, k: Fraction) -> float:
    if branch == "co4i":
        return delta * math.sqrt(1 + 2 * float(k) / float(n - k))
    if branch == "co4ii":
        return float(2 * alpha * delta * n / (n - k))
    if branch == "co4iii":
        return float(alpha * delta * (n + k) / (n - k))
    return float(delta + k - 1)


def _assert_threshold(v: Verdict, printed: float) -> None:
    if v.threshold is not None and v.lambda1 is not None:
        assert math.isclose(v.threshold, printed, rel_tol=1e-12, abs_tol=1e-12), (
            f"{v.theorem}: delegated threshold {v.threshold!r} != printed {printed!r}"
        )


def check_alpha_condition(
    g: GraphLike, alpha: Real, k: Real, epsilon: float = DEFAULT_EPSILON
) -> tuple[Verdict, Verdict]:
    """A_alpha versions of the two bounds: (branch i/ii/iii verdict, branch iv verdict).

    For alpha < 1 this delegates to the (a, b) checks with a = alpha,
    b = 1 - alpha and asserts the delegated threshold equals the A_alpha
    formula of the branch. alpha = 1 (A_1 = D) is evaluated directly.
    """
    f = _facts(g)
    al = exact(alpha)
    if not 0 <= al <= 1:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    branch = alpha_branch(al)
    extra = _extra(f, k, al, 1 - al)
    extra["alpha"] = al

    if al < 1:
        q = BoundQuery(k, SpectralParams(al, 1 - al), epsilon)
        direct = check_spectral_condition(f, q, theorem=branch)
        comp = check_complement_condition(f, q, theorem="co4iv")
        direct = replace(direct, extra=extra)
        comp = replace(comp, extra=extra)
    else:
        def direct_spec():
            return f.radius(1, 0), _alpha_threshold(branch, al, f.n, f.delta, exact(k))

        def comp_spec():
            return f.radius(1, 0, of_complement=True), float(f.delta + exact(k) - 1)

        direct = _spectral_check(f, branch, k, epsilon, extra, direct_spec)
        comp = _spectral_check(f, "co4iv", k, epsilon, extra, comp_spec)

    if direct.theorem == branch:
        _assert_threshold(direct, _alpha_threshold(branch, al, f.n, f.delta, exact(k)))
    if comp.theorem == "co4iv":
        _assert_threshold(comp, _alpha_threshold("co4iv", al, f.n, f.delta, exact(k)))
    return direct, comp


@dataclass(frozen=True)
class LowerBound:
    bound: float
    mu_f: HalfInt
    lambda1: float
    holds: bool
    tight: bool
    in_regime: bool
    tight_outside_family: bool


def lower_bound_value(a, n: int, delta: int, lam: float) -> float:
    """Lower bound on mu_f from lambda_1(aD + A), by the range of a."""
    a = exact(a)
    if delta == 0:
        return 0.0
    if a == 0:
        return n * delta**2 / (lam**2 + delta**2)
    if a <= 1:
        return float(a) * delta * n / lam
    return float(a) * delta * n / (lam + float(a) * delta)


def mu_f_lower_bound(g: GraphLike, a: Real, epsilon: float = DEFAULT_EPSILON) -> LowerBound:
    """Evaluate the spectral lower bound on mu_f and compare it to the exact value.

    The bound is computed for any graph with an edge; ``in_regime`` flags
    connected graphs with delta <= (n-1)/2. ``tight_outside_family`` marks an
    equality case that is not a member of B(delta, k).
    """
    f = _facts(g)
    if f.n == 0:
        raise DomainError("empty graph")
    lam = f.radius(a, 1)
    bound = lower_bound_value(a, f.n, f.delta, lam)
    mu = float(f.mu_f)
    tight = abs(mu - bound) <= epsilon
    in_regime = f.n >= 2 and f.connected and 2 * f.delta <= f.n - 1
    outside = tight and family_b_membership(f.g) is None
    return LowerBound(bound, f.mu_f, lam, mu >= bound - epsilon, tight, in_regime, outside)


def check_lower_bound(g: GraphLike, a: Real, b: Real = 1, epsilon: float = DEFAULT_EPSILON) -> Verdict:
    """Verdict form of ``mu_f_lower_bound``: threshold is the bound, boundary means tight."""
    f = _facts(g)
    a_, b_ = exact(a), exact(b)
    extra = _extra(f, None, a_, b_)
    problem = _hypothesis_problem(f)
    if problem:
        return _vacuous(f, "th3", problem, extra)
    if 2 * f.delta > f.n - 1:
        return _vacuous(f, "th3", "delta > (n-1)/2", extra)
    lb = mu_f_lower_bound(f, a_ / b_, epsilon)
    extra["tight_outside_family"] = lb.tight_outside_family
    return Verdict("th3", True, lb.holds, lb.tight, f.radius(a_, b_), lb.bound, lb.mu_f, extra)


def exception_witness(g: Graph) -> tuple[int, ...] | None:
    """S = V(H) if g is (delta+1)K_1 joined with some H on delta vertices, else None.

    Each candidate S is the neighbourhood of a minimum-degree vertex; the
    structure is confirmed by rebuilding the join and comparing edge sets.
    """
    n = g.n
    delta = min((len(r) for r in g.adj), default=0)
    if delta < 1 or n != 2 * delta + 1:
        return None
    for v in range(n):
        if len(g.adj[v]) != delta:
            continue
        s = sorted(g.adj[v])
        t = [u for u in range(n) if u not in g.adj[v]]
        order = t + s
        rebuilt = join(empty_graph(delta + 1), induced_subgraph(g, s))
        relabelled = {(min(order[x], order[y]), max(order[x], order[y])) for x, y in rebuilt.edges()}
        if relabelled == set(g.edges()):
            return tuple(s)
    return None


def check_fpm_spectral(
    g: GraphLike, a: Real, b: Real = 1, epsilon: float = DEFAULT_EPSILON
) -> tuple[Verdict, Verdict, Verdict]:
    """Fractional perfect matching checks, returned as (th4, th7, final).

    th4:   lambda_1(J(G)) < b phi(a/b, n, delta, 1)
    th7:   lambda_1(J(complement)) < (a+b) delta
    final: lambda_1(J(complement)) < (a+b)(delta+1), conclusion holds when G
           has a fractional perfect matching or is (delta+1)K_1 v H_delta.
    """
    f = _facts(g)
    a_, b_ = exact(a), exact(b)
    extra = _extra(f, 1, a_, b_)
    problem = _hypothesis_problem(f) or (
        "delta > (n-1)/2" if 2 * f.delta > f.n - 1 else None
    )
    if problem:
        return tuple(_vacuous(f, t, problem, extra) for t in ("th4", "th7", "final"))

    has_fpm = f.mu_f.twice_value == f.n
    lam = f.radius(a_, b_)
    lam_c = f.radius(a_, b_, of_complement=True)

    def verdict(theorem, lam_, thr, conclusion, ex=extra):
        return Verdict(
            theorem, lam_ < thr - epsilon, conclusion, abs(lam_ - thr) <= epsilon,
            lam_, thr, f.mu_f, ex,
        )

    th4 = verdict("th4", lam, float(b_) * phi(a_ / b_, f.n, f.delta, 1), has_fpm)
    th7 = verdict("th7", lam_c, float((a_ + b_) * f.delta), has_fpm)
    witness = None if has_fpm else exception_witness(f.g)
    final_extra = {**extra, "exception_s": witness}
    final = verdict(
        "final", lam_c, float((a_ + b_) * (f.delta + 1)), has_fpm or witness is not None, final_extra
    )
    return th4, th7, final
