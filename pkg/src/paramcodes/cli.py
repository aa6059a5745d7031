"""Command line driver: ``paramcodes <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import formulas as fm
from . import verify as vf
from .errors import DEFAULT_BUDGET, BudgetExceeded
from .evalcode import code_from, minimum_distance, regularity_index
from .gfq import parse_field
from .graph import parse_graph_spec
from .toricset import enumerate_points
from .zeros import SUPPORT_CLASSES, Polynomial, max_zeros_search, pullback, z_count, zeros_on_X


def _emit(args, payload: dict, text: str | None = None) -> None:
    if args.json or text is None:
        print(json.dumps(payload))
    else:
        print(text)


def _setup(args):
    g = parse_graph_spec(args.graph)
    F = parse_field(args.field)
    return g, F, enumerate_points(g, F, args.budget)


def cmd_params(args) -> int:
    g, F, X = _setup(args)
    C = code_from(X, args.d, args.budget)
    out = {"graph": args.graph, "field": F.spec, "d": args.d, "length": C.length,
           "dimension": C.dimension}
    if not args.no_mindist:
        out["mindist"] = minimum_distance(C, args.budget)
    _emit(args, out, " ".join(f"{k}={v}" for k, v in out.items()))
    return 0


def cmd_points(args) -> int:
    g, F, X = _setup(args)
    if args.json:
        print(X.to_json())
    else:
        for row in X.as_tuples():
            print("(" + ":".join(map(str, row)) + ")")
    return 0


def cmd_dim(args) -> int:
    g, F, X = _setup(args)
    C = code_from(X, args.d, args.budget)
    if args.export:
        path = Path(args.export)
        path.write_text(C.to_json() if path.suffix == ".json" else C.to_text())
    _emit(args, {"length": C.length, "dimension": C.dimension},
          f"length={C.length} dimension={C.dimension}")
    return 0


def cmd_mindist(args) -> int:
    g, F, X = _setup(args)
    C = code_from(X, args.d, args.budget)
    d = minimum_distance(C, args.budget)
    _emit(args, {"length": C.length, "dimension": C.dimension, "mindist": d},
          f"[{C.length}, {C.dimension}, {d}]")
    return 0


def cmd_regindex(args) -> int:
    g, F, X = _setup(args)
    reg = regularity_index(X, args.max_degree, args.budget)
    _emit(args, {"length": X.m, "regularity_index": reg}, f"regularity_index={reg}")
    return 0


def _parse_form(text: str, F) -> list[int]:
    coeffs = []
    for tok in text.split(","):
        v = int(tok)
        coeffs.append(F.neg(F(-v).value) if v < 0 else F(v).value)
    return coeffs


def cmd_zeros(args) -> int:
    g, F, X = _setup(args)
    coeffs = _parse_form(args.form, F)
    if len(coeffs) != g.s:
        raise ValueError(f"form has {len(coeffs)} coefficients, graph has {g.s} edges")
    form = Polynomial.linear(coeffs, F)
    f = pullback(form, g)
    on_x = zeros_on_X(form, X)
    out = {"form": coeffs, "zeros_on_X": on_x, "pullback": str(f)}
    try:
        z = z_count([f], g.n, F, args.budget)
    except BudgetExceeded:
        z = None
    out["z_count"] = z
    fibers = set(int(v) for v in X.fiber)
    if len(fibers) == 1 and len(g.isolated_vertices()) == 0:
        (fiber,) = fibers
        out["fiber"] = fiber
        out["consistent"] = None if z is None else z == on_x * fiber
    _emit(args, out)
    return 0


def cmd_maxzeros(args) -> int:
    g, F, X = _setup(args)
    res = max_zeros_search(X, args.support, args.budget)
    _emit(args, {"class": args.support, "max": res.max, "count": len(res.maximizers),
                 "forms_checked": res.forms_checked,
                 "sample_maximizers": [list(t) for t in res.maximizers[:args.samples]]})
    return 0


def cmd_predict(args) -> int:
    _emit(args, fm.predict_cycle(args.k, args.q).as_dict())
    return 0


def cmd_verify(args) -> int:
    if args.replay:
        doc = json.loads(Path(args.replay).read_text())
        results = vf.replay(doc, args.workers)
        for sid, same in results:
            print(f"{'identical' if same else 'DIFFERS':<9}  {sid}")
        return 0 if all(same for _, same in results) else 1
    reports = vf.run_suite(args.suite, args.budget, args.seed, args.workers)
    doc = vf.to_json(reports, args.suite, args.budget, args.seed)
    if args.output:
        Path(args.output).write_text(doc)
    print(doc if args.json else vf.format_table(reports))
    return vf.exit_code(reports, args.strict)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="maximum items any exhaustive enumeration may visit")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument("--graph", required=True, help="cycle:N, path:N, kbip:A,B or @file.edges")
    graph.add_argument("--field", required=True, help="q or p^e")

    degree = argparse.ArgumentParser(add_help=False)
    degree.add_argument("--d", type=int, default=1, help="code order (form degree)")

    p = argparse.ArgumentParser(prog="paramcodes", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("params", parents=[common, graph, degree], help="length, dimension, mindist")
    s.add_argument("--no-mindist", action="store_true")
    s.set_defaults(func=cmd_params)

    s = sub.add_parser("points", parents=[common, graph], help="dump the points of X")
    s.set_defaults(func=cmd_points)

    s = sub.add_parser("dim", parents=[common, graph, degree], help="dimension of C_X(d)")
    s.add_argument("--export", help="write the generator matrix (.json, otherwise plain text)")
    s.set_defaults(func=cmd_dim)

    s = sub.add_parser("mindist", parents=[common, graph, degree], help="exhaustive minimum distance")
    s.set_defaults(func=cmd_mindist)

    s = sub.add_parser("regindex", parents=[common, graph], help="regularity index of X")
    s.add_argument("--max-degree", type=int, default=None)
    s.set_defaults(func=cmd_regindex)

    s = sub.add_parser("zeros", parents=[common, graph], help="zeros of a linear form on X")
    s.add_argument("--form", required=True, help='coefficients, e.g. "1,-1,0,0"')
    s.set_defaults(func=cmd_zeros)

    s = sub.add_parser("maxzeros", parents=[common, graph], help="max zeros of linear forms on X")
    s.add_argument("--class", dest="support", choices=SUPPORT_CLASSES, default="all")
    s.add_argument("--samples", type=int, default=10, help="maximizers to list")
    s.set_defaults(func=cmd_maxzeros)

    s = sub.add_parser("predict", parents=[common], help="closed-form even-cycle parameters")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.set_defaults(func=cmd_predict)

    s = sub.add_parser("verify", parents=[common], help="formula vs brute-force suites")
    s.add_argument("suite", nargs="?", default="all", choices=sorted(vf.SUITES) + ["all"])
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--strict", action="store_true", help="skipped scenarios also fail the run")
    s.add_argument("--output", help="also write the JSON report here")
    s.add_argument("--replay", help="rerun a saved JSON report and compare numbers")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
