"""Formula-versus-enumeration verification scenarios.

Each scenario computes one or more quantities by brute force and compares
them, by exact integer equality, with the closed forms in
:mod:`paramcodes.formulas`.  Scenarios are grouped in suites; running a
suite yields one :class:`VerificationReport` per scenario.  A scenario
whose enumeration would exceed the budget is reported ``skipped``.
"""
from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from functools import partial
from typing import Any, Callable

import numpy as np

from . import formulas as fm
from .errors import DEFAULT_BUDGET, BudgetExceeded
from .evalcode import code_from, evaluation_matrix, minimum_distance, regularity_index
from .gfq import GF, parse_field
from .graph import component_profile, parse_graph_spec
from .linalg import matmul
from .toricset import enumerate_points, expected_length
from .zeros import Polynomial, max_zeros_search, projective_linear_forms, pullback, z_count, zeros_on_X

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class Comparison:
    name: str
    expected: Any
    expected_source: str
    computed: Any
    computed_source: str

    @property
    def passed(self) -> bool:
        return self.expected == self.computed


@dataclass
class VerificationReport:
    id: str
    suite: str
    graph: str
    field: str
    degree: int | None
    gated: bool = True
    status: str = PASS
    comparisons: list[Comparison] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    note: str = ""

    def to_dict(self) -> dict:
        d = asdict(self)
        for c, src in zip(d["comparisons"], self.comparisons):
            c["pass"] = src.passed
        return d

    @classmethod
    def from_dict(cls, d: dict) -> VerificationReport:
        d = dict(d)
        d["comparisons"] = [
            Comparison(**{k: v for k, v in c.items() if k != "pass"}) for c in d["comparisons"]]
        return cls(**d)


class _Context:
    def __init__(self, report: VerificationReport, budget: int, seed: int):
        self.report = report
        self.budget = budget
        self.seed = seed

    @contextmanager
    def stage(self, name: str):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.report.timings[name] = self.report.timings.get(name, 0.0) + time.perf_counter() - t0

    def compare(self, name, expected, expected_source, computed, computed_source):
        self.report.comparisons.append(
            Comparison(name, expected, expected_source, computed, computed_source))

    def rng(self, *key: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, *key])


@dataclass(frozen=True)
class Scenario:
    id: str
    suite: str
    graph: str
    field: str
    degree: int | None
    body: Callable[[_Context], None]
    gated: bool = True

    def run(self, budget: int = DEFAULT_BUDGET, seed: int = 0) -> VerificationReport:
        report = VerificationReport(self.id, self.suite, self.graph, self.field, self.degree,
                                    gated=self.gated)
        ctx = _Context(report, budget, seed)
        try:
            self.body(ctx)
        except BudgetExceeded as exc:
            report.status = SKIPPED
            report.note = str(exc)
            return report
        report.status = PASS if all(c.passed for c in report.comparisons) else FAIL
        return report


# -- scenario bodies -----------------------------------------------------------

def _length(ctx: _Context, graph: str, q: int):
    g, F = parse_graph_spec(graph), GF(q)
    with ctx.stage("enumerate"):
        X = enumerate_points(g, F, ctx.budget)
    with ctx.stage("formula"):
        expected = expected_length(g, F)
    ctx.compare("length", expected, "formula:expected_length", X.m, "brute:enumerate_points")
    prof = component_profile(g)
    if prof.b0 == 1 and prof.bipartite:
        ctx.compare("fiber_uniform", True, "fiber size (q-1)^n/|X|",
                    bool(np.all(X.fiber * X.m == (q - 1) ** g.n)), "brute:fiber counts")


def _theorem(ctx: _Context, k: int, q: int):
    F = GF(q)
    with ctx.stage("enumerate"):
        X = enumerate_points(parse_graph_spec(f"cycle:{2 * k}"), F, ctx.budget)
    with ctx.stage("code"):
        C = code_from(X, 1, ctx.budget)
    with ctx.stage("mindist"):
        d = minimum_distance(C, ctx.budget)
    ctx.compare("length", fm.cycle_length(k, q), "formula:cycle_length", C.length, "brute:enumerate_points")
    ctx.compare("dimension", fm.cycle_dimension(k, q), "formula:cycle_dimension", C.dimension,
                "brute:rank")
    ctx.compare("min_distance", fm.cycle_min_distance(k, q), "formula:cycle_min_distance", d,
                "brute:minimum_distance")
    ctx.compare("branch", fm.theorem_branch(k, q), "formula:theorem_branch",
                fm.branch_predicate(k, q), "formula:sign(delta)")
    ctx.compare("singleton", True, "bound", d <= C.length - C.dimension + 1, "brute")


def _path_poly(betas, r: int, n: int, F) -> Polynomial:
    terms = []
    for i in range(r - 1):
        e = [0] * n
        e[i] = e[i + 1] = 1
        terms.append((tuple(e), int(betas[i])))
    return Polynomial.from_terms(F, n, terms)


def _lemma_path(ctx: _Context, k: int, q: int, r: int, samples: int = 20):
    F, n = GF(q), 2 * k
    rng = ctx.rng(k, q, r)
    expected = fm.path_zero_count(r, q, k)
    with ctx.stage("z_count"):
        counts = []
        for _ in range(samples):
            betas = rng.integers(1, q, size=r - 1)
            counts.append(z_count([_path_poly(betas, r, n, F)], n, F, ctx.budget))
    ctx.compare("z_count", [expected] * samples, "formula:path_zero_count", counts,
                f"brute:z_count over {samples} random coefficient vectors")


def _lemma_zeros(ctx: _Context, k: int, q: int):
    F = GF(q)
    g = parse_graph_spec(f"cycle:{2 * k}")
    with ctx.stage("enumerate"):
        X = enumerate_points(g, F, ctx.budget)
    agree = total = 0
    with ctx.stage("count"):
        for block in projective_linear_forms(F, g.s, "all", ctx.budget):
            for coeffs in block:
                Fm = Polynomial.linear(coeffs, F)
                lhs = zeros_on_X(Fm, X) * (q - 1) ** 2
                rhs = z_count([pullback(Fm, g)], g.n, F, ctx.budget)
                agree += lhs == rhs
                total += 1
    ctx.compare("forms_agreeing", total, "every projective linear form",
                agree, "brute:zeros_on_X*(q-1)^2 == z_count(pullback)")


def _prop_incomplete(ctx: _Context, k: int, q: int):
    F = GF(q)
    with ctx.stage("enumerate"):
        X = enumerate_points(parse_graph_spec(f"cycle:{2 * k}"), F, ctx.budget)
    with ctx.stage("search"):
        res = max_zeros_search(X, "incomplete", ctx.budget)
    ctx.compare("max_zeros", fm.incomplete_max(k, q), "formula:incomplete_max", res.max,
                "brute:max_zeros_search")
    witness = (1, F.neg(1)) + (0,) * (2 * k - 2)
    ctx.compare("witness_t1_minus_t2", fm.incomplete_max(k, q), "formula:incomplete_max",
                zeros_on_X(Polynomial.linear(witness, F), X), "brute:zeros_on_X")
    ctx.compare("witness_is_maximizer", True, "t1 - t2 attains the bound",
                witness in res.maximizers, "brute:maximizer set")


def _prop_complete(ctx: _Context, k: int, q: int):
    F = GF(q)
    with ctx.stage("enumerate"):
        X = enumerate_points(parse_graph_spec(f"cycle:{2 * k}"), F, ctx.budget)
    with ctx.stage("search"):
        res = max_zeros_search(X, "complete", ctx.budget)
    ctx.compare("max_zeros", fm.complete_max(k, q), "formula:complete_max", res.max,
                "brute:max_zeros_search")
    solutions = [
        (1,) + tail for tail in itertools.product(range(1, q), repeat=2 * k - 1)
        if fm.equality_condition((1,) + tail, F)
    ]
    ctx.compare("argmax_set", [list(t) for t in solutions], "formula:equality_condition",
                [list(t) for t in res.maximizers], "brute:maximizer set")


def _regularity(ctx: _Context, graph: str, q: int, expected: int, source: str):
    F = GF(q)
    with ctx.stage("enumerate"):
        X = enumerate_points(parse_graph_spec(graph), F, ctx.budget)
    with ctx.stage("hilbert"):
        reg = regularity_index(X, budget=ctx.budget)
    ctx.compare("regularity_index", expected, source, reg, "brute:rank saturation")


def _torus_code(ctx: _Context, s: int, q: int, d: int, stage: str):
    F = GF(q)
    with ctx.stage(stage):
        X = enumerate_points(parse_graph_spec(f"path:{s + 1}"), F, ctx.budget)
        return minimum_distance(code_from(X, d, ctx.budget), ctx.budget)


def _torus(ctx: _Context, s: int, q: int, d: int):
    got = _torus_code(ctx, s, q, d, "torus mindist")
    ctx.compare("torus_min_distance", fm.torus_min_distance(s, q, d), "formula:torus_min_distance",
                got, "brute:minimum_distance on path graph (torus)")


def _closing_example(ctx: _Context, q: int):
    torus = _torus_code(ctx, 2, q, 1, "torus mindist")
    F = GF(q)
    with ctx.stage("cycle mindist"):
        X = enumerate_points(parse_graph_spec("kbip:2,2"), F, ctx.budget)
        cyc = minimum_distance(code_from(X, 1, ctx.budget), ctx.budget)
    ctx.compare("square_identity", fm.cycle_min_distance(2, q), "formula:cycle_min_distance(2,q)",
                fm.torus_min_distance(2, q, 1) ** 2, "formula:torus_min_distance(2,q,1)^2")
    ctx.compare("K22_min_distance", fm.cycle_min_distance(2, q), "formula:cycle_min_distance(2,q)",
                cyc, "brute:minimum_distance on K_{2,2}")
    ctx.compare("T1_min_distance", fm.torus_min_distance(2, q, 1), "formula:torus_min_distance",
                torus, "brute:minimum_distance on T^1")


def _duality(ctx: _Context, k: int, q: int, samples: int = 100):
    F = GF(q)
    with ctx.stage("enumerate"):
        X = enumerate_points(parse_graph_spec(f"cycle:{2 * k}"), F, ctx.budget)
        M = evaluation_matrix(X, 1, ctx.budget)
    rng = ctx.rng(k, q)
    lhs, rhs = [], []
    with ctx.stage("forms"):
        for _ in range(samples):
            coeffs = rng.integers(0, q, size=2 * k)
            if not coeffs.any():
                coeffs[0] = 1
            word = matmul(coeffs[None, :], M, F)[0]
            lhs.append(X.m - int(np.count_nonzero(word)))
            rhs.append(zeros_on_X(Polynomial.linear(coeffs, F), X))
    ctx.compare("m_minus_weight", rhs, "brute:zeros_on_X", lhs, "brute:m - weight(ev_1(F))")


# -- registry ------------------------------------------------------------------

THEOREM_GRID = [(2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (4, 3), (4, 4), (5, 3)]
LEMMA_GRID = [(2, 3), (2, 4), (3, 3)]
PROP_GRID = [(2, 3), (2, 4), (2, 5), (3, 3)]


def _sc(id, suite, graph, q, degree, body, gated=True) -> Scenario:
    return Scenario(id, suite, graph, str(q), degree, body, gated)


def _suite_length():
    out = []
    gated = (
        [(f"cycle:{n}", q) for n in (4, 6, 8, 10) for q in (3, 4, 5)]
        + [(f"path:{n}", q) for n in (2, 3, 4, 5) for q in (3, 4, 5)]
        + [(f"cycle:{n}", q) for n in (3, 5) for q in (3, 5)]
        + [(f"kbip:{a},{b}", q) for a, b in ((2, 2), (2, 3)) for q in (3, 4)]
    )
    for graph, q in gated:
        out.append(_sc(f"length/{graph}/q={q}", "length", graph, q, None,
                       partial(_length, graph=graph, q=q)))
    for graph in ("cycle:3+cycle:4", "cycle:3+cycle:3", "cycle:4+path:1", "cycle:5+cycle:3+cycle:4"):
        for q in (3, 4, 5):
            out.append(_sc(f"length/{graph}/q={q}", "length", graph, q, None,
                           partial(_length, graph=graph, q=q), gated=False))
    return out


def _suite_lemma_path():
    return [
        _sc(f"lemma-path/k={k},q={q},r={r}", "lemma-path", f"path:{r}", q, None,
            partial(_lemma_path, k=k, q=q, r=r))
        for k, q in LEMMA_GRID for r in range(2, 2 * k + 1)
    ]


def _suite_lemma_zeros():
    return [_sc(f"lemma-zeros/k={k},q={q}", "lemma-zeros", f"cycle:{2 * k}", q, 1,
                partial(_lemma_zeros, k=k, q=q)) for k, q in LEMMA_GRID]


def _suite_prop_incomplete():
    return [_sc(f"prop-incomplete/k={k},q={q}", "prop-incomplete", f"cycle:{2 * k}", q, 1,
                partial(_prop_incomplete, k=k, q=q)) for k, q in PROP_GRID]


def _suite_prop_complete():
    return [_sc(f"prop-complete/k={k},q={q}", "prop-complete", f"cycle:{2 * k}", q, 1,
                partial(_prop_complete, k=k, q=q)) for k, q in PROP_GRID]


def _suite_theorem():
    return [_sc(f"theorem/k={k},q={q}", "theorem", f"cycle:{2 * k}", q, 1,
                partial(_theorem, k=k, q=q)) for k, q in THEOREM_GRID]


def _suite_regularity():
    out = [
        _sc(f"regularity/cycle:{2 * k}/q={q}", "regularity", f"cycle:{2 * k}", q, None,
            partial(_regularity, graph=f"cycle:{2 * k}", q=q,
                    expected=fm.even_cycle_regularity(k, q), source="formula:even_cycle_regularity"))
        for k, q in LEMMA_GRID
    ]
    for n in (2, 3, 4):
        for q in (3, 4, 5):
            out.append(_sc(f"regularity/path:{n}/q={q}", "regularity", f"path:{n}", q, None,
                           partial(_regularity, graph=f"path:{n}", q=q,
                                   expected=fm.torus_regularity(n - 1, q),
                                   source="formula:torus_regularity")))
    return out


def _suite_torus():
    out = [_sc(f"torus/closing-example/q={q}", "torus", "kbip:2,2", q, 1,
               partial(_closing_example, q=q)) for q in (3, 4, 5, 7)]
    for s, q, d in ((2, 4, 1), (3, 3, 1), (2, 5, 2), (3, 4, 1), (3, 4, 2), (3, 5, 3), (4, 3, 2)):
        out.append(_sc(f"torus/s={s},q={q},d={d}", "torus", f"path:{s + 1}", q, d,
                       partial(_torus, s=s, q=q, d=d)))
    return out


def _suite_duality():
    return [_sc(f"duality/k={k},q={q}", "duality", f"cycle:{2 * k}", q, 1,
                partial(_duality, k=k, q=q)) for k, q in THEOREM_GRID]


SUITES: dict[str, Callable[[], list[Scenario]]] = {
    "length": _suite_length,
    "lemma-path": _suite_lemma_path,
    "lemma-zeros": _suite_lemma_zeros,
    "prop-incomplete": _suite_prop_incomplete,
    "prop-complete": _suite_prop_complete,
    "theorem": _suite_theorem,
    "regularity": _suite_regularity,
    "torus": _suite_torus,
    "duality": _suite_duality,
}


def scenarios(suite: str) -> list[Scenario]:
    if suite == "all":
        return [sc for build in SUITES.values() for sc in build()]
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES) + ['all']}")
    return SUITES[suite]()


def _run_one(sc: Scenario, budget: int, seed: int) -> VerificationReport:
    t0 = time.perf_counter()
    report = sc.run(budget, seed)
    report.timings["total"] = time.perf_counter() - t0
    return report


def run(scs: list[Scenario], budget: int = DEFAULT_BUDGET, seed: int = 0,
        workers: int = 1) -> list[VerificationReport]:
    """Run scenarios; reports come back in scenario order whatever ``workers`` is."""
    if workers <= 1:
        return [_run_one(sc, budget, seed) for sc in scs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_one, scs, [budget] * len(scs), [seed] * len(scs)))


def run_suite(suite: str, budget: int = DEFAULT_BUDGET, seed: int = 0,
              workers: int = 1) -> list[VerificationReport]:
    return run(scenarios(suite), budget, seed, workers)


def exit_code(reports: list[VerificationReport], strict: bool = False) -> int:
    """0 when every gated scenario passed; in strict mode, also none skipped."""
    for r in reports:
        if r.gated and r.status == FAIL:
            return 1
        if strict and r.status == SKIPPED:
            return 1
    return 0


def to_json(reports: list[VerificationReport], suite: str, budget: int, seed: int) -> str:
    return json.dumps({
        "suite": suite,
        "budget": budget,
        "seed": seed,
        "reports": [r.to_dict() for r in reports],
    }, indent=2)


def replay(document: dict, workers: int = 1) -> list[tuple[str, bool]]:
    """Rerun the scenarios of a saved report; True where every number is identical."""
    registry = {sc.id: sc for sc in scenarios("all")}
    old = [VerificationReport.from_dict(r) for r in document["reports"]]
    missing = [r.id for r in old if r.id not in registry]
    if missing:
        raise ValueError(f"unknown scenario ids in report: {missing}")
    new = run([registry[r.id] for r in old], document["budget"], document["seed"], workers)
    out = []
    for a, b in zip(old, new):
        same = a.status == b.status and [c.computed for c in a.comparisons] == [
            c.computed for c in b.comparisons]
        out.append((a.id, same))
    return out


def format_table(reports: list[VerificationReport]) -> str:
    width = max((len(r.id) for r in reports), default=10)
    lines = [f"{'scenario':<{width}}  status   checks  seconds"]
    for r in reports:
        ok = sum(c.passed for c in r.comparisons)
        status = r.status if r.gated else f"{r.status}*"
        lines.append(f"{r.id:<{width}}  {status:<7}  {ok:>2}/{len(r.comparisons):<3}  "
                     f"{r.timings.get('total', 0.0):7.3f}")
        for c in r.comparisons:
            if not c.passed:
                lines.append(f"    {c.name}: expected {c.expected} ({c.expected_source}), "
                             f"got {c.computed} ({c.computed_source})")
    if any(not r.gated for r in reports):
        lines.append("* reported only, not gated")
    n_pass = sum(r.status == PASS for r in reports)
    n_fail = sum(r.status == FAIL for r in reports)
    n_skip = sum(r.status == SKIPPED for r in reports)
    lines.append(f"{n_pass} passed, {n_fail} failed, {n_skip} skipped")
    return "\n".join(lines)
