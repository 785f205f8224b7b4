"""``ghs`` command-line interface.

Exit codes: 0 success (and "indistinguishable" for ``distinguish``),
1 "distinguishable", 2 domain error, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import borsuk, distinguish, extremal, graphs, io, mst, oracle, partitions, simplex
from .corpus import write_corpus
from .curves import sample
from .errors import GHSError
from .metric import INF, format_rational, is_ultrametric, to_rational

EXIT_OK, EXIT_DIFFERENT, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2, 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _approx(q) -> str:
    if q == INF:
        return "inf"
    return f"{float(q):.6g}"


def _num(q) -> str:
    """Exact value with a decimal approximation alongside, for text output."""
    exact = format_rational(q)
    approx = _approx(q)
    return exact if exact == approx else f"{exact} (~{approx})"


def _rational_arg(text: str) -> Fraction:
    try:
        return to_rational(text)
    except GHSError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _emit(args, payload: dict, text_lines: list[str] | None = None, force_json=False) -> None:
    if args.json or force_json or text_lines is None:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text_lines))


# -- subcommands ----------------------------------------------------------------

def cmd_validate(args) -> int:
    X = io.load_space(args.file)
    _emit(args, {"valid": True, "points": X.m}, [f"valid metric space with {X.m} points"])
    return EXIT_OK


def cmd_info(args) -> int:
    X = io.load_space(args.file)
    sigma = mst.spectrum(X).sigma if X.m >= 2 else ()
    payload = {
        "cardinality": X.m,
        "diameter": format_rational(X.diameter),
        "ultrametric": is_ultrametric(X),
        "mst_spectrum": [format_rational(q) for q in sigma],
    }
    lines = [
        f"cardinality: {X.m}",
        f"diameter: {_num(X.diameter)}",
        f"ultrametric: {'yes' if is_ultrametric(X) else 'no'}",
        "mst-spectrum: (" + ", ".join(_num(q) for q in sigma) + ")",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_stats(args) -> int:
    X = io.load_space(args.file)
    n = args.n
    table = partitions.ad_table(X, n, args.cap)
    a_lo, a_hi, d_lo, d_hi = partitions.extremes(X, n, args.cap)
    payload = {
        "n": n,
        "ad_set": [
            {"alpha": format_rational(a), "diam": format_rational(d), "witness": part.notation(X.labels)}
            for (a, d), part in table
        ],
        "extremes": {
            "alpha_minus": format_rational(a_lo),
            "alpha_plus": format_rational(a_hi),
            "d_minus": format_rational(d_lo),
            "d_plus": format_rational(d_hi),
        },
    }
    _emit(args, payload, force_json=True)
    return EXIT_OK


def cmd_curve(args) -> int:
    X = io.load_space(args.file)
    c = simplex.gh_simplex_curve(X, args.n, cap=args.cap)
    payload = {"n": args.n, "diameter": format_rational(X.diameter), "two_dgh": c.to_dict()}
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["lambda", "two_dgh", "lambda_decimal", "two_dgh_decimal"])
            for x, y in sample(c, args.grid or ()):
                w.writerow([format_rational(x), format_rational(y), _approx(x), _approx(y)])
    _emit(args, payload, force_json=True)
    return EXIT_OK


def cmd_mset(args) -> int:
    X = io.load_space(args.file)
    ms = extremal.m_set(X, args.n, args.cap)
    payload = {"n": args.n, "diameter": format_rational(X.diameter), **ms.to_dict()}
    _emit(args, payload, force_json=True)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    X = io.load_space(args.file)
    tree = mst.spectrum(X)
    edges = [[X.labels[i], X.labels[j], format_rational(X.dist[i][j])] for i, j in tree.tree_edges]
    payload = {"sigma": [format_rational(q) for q in tree.sigma], "tree_edges": edges}
    lines = ["sigma: (" + ", ".join(_num(q) for q in tree.sigma) + ")", "tree edges:"]
    lines += [f"  {a} -- {b}  ({d})" for a, b, d in edges]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_oracle(args) -> int:
    X, Y = io.load_space(args.a), io.load_space(args.b)
    cap = args.cap if args.cap is not None else oracle.DEFAULT_ORACLE_CAP
    value, R = oracle.brute_gh_witness(X, Y, cap)
    pairs = [[X.labels[i], Y.labels[j]] for i, j in sorted(R.pairs)]
    payload = {"two_dgh": format_rational(value), "dgh": format_rational(value / 2), "correspondence": pairs}
    lines = [f"2d_GH: {_num(value)}", f"d_GH: {_num(value / 2)}", "optimal correspondence:"]
    lines += [f"  {a} ~ {b}" for a, b in pairs]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_distinguish(args) -> int:
    X, Y = io.load_space(args.a), io.load_space(args.b)
    report = distinguish.distinguishability_report(X, Y, cap=args.cap)
    if args.report:
        names = (Path(args.a).stem, Path(args.b).stem)
        Path(args.report).write_text(distinguish.report_markdown(report, names), encoding="utf-8")
    verdict = {k: report[k] for k in ("verdict", "route", "witness", "trace")}
    lines = [f"{report['verdict']} (route: {report['route']})"]
    w = report["witness"]
    if w:
        lines.append(
            f"witness: n={w['n']}, lambda={w['lambda']}: 2d_GH = {w['two_dgh_x']} vs {w['two_dgh_y']}"
        )
    _emit(args, verdict, lines)
    return EXIT_OK if report["verdict"] == "indistinguishable" else EXIT_DIFFERENT


def _graph_cmd(args, via, direct, convention, label) -> int:
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        raise GHSError(f"cannot read {args.file}: {exc}") from exc
    G = graphs.read_graph(text)
    p = graphs.ABParams(args.a, args.b)
    value = via(G, p, args.cap)
    payload = {label: value, "vertices": G.n, "edges": len(G.edges), "convention": convention}
    lines = [f"{label} (via GH): {value}"]
    if G.n <= graphs.DEFAULT_COLORING_CAP:
        check = direct(G)
        payload[f"{label}_direct"] = check
        lines.append(f"{label} (direct search): {check}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_chromatic(args) -> int:
    return _graph_cmd(args, graphs.chromatic_via_gh, graphs.chromatic_direct,
                      "adjacent at b", "chromatic_number")


def cmd_cliquecover(args) -> int:
    return _graph_cmd(args, graphs.clique_cover_via_gh, graphs.clique_cover_direct,
                      "adjacent at a", "clique_cover_number")


def cmd_borsuk(args) -> int:
    X = io.load_space(args.file)
    ok, part = borsuk.borsuk_direct(X, args.n, args.cap)
    payload = {
        "n": args.n,
        "partitionable": ok,
        "witness": part.notation(X.labels) if part else None,
    }
    lines = [f"partition into {args.n} parts of smaller diameter: {'yes' if ok else 'no'}"]
    if part:
        lines.append(f"witness: {part.notation(X.labels)}")
    if X.diameter > 0:
        lam = args.lam if args.lam is not None else borsuk.default_lambda(X)
        value = simplex.gh_simplex_at(X, args.n, lam, cap=args.cap)
        via = borsuk.borsuk_via_gh(X, args.n, lam, args.cap)
        payload["gh_check"] = {
            "lambda": format_rational(lam),
            "two_dgh": format_rational(value),
            "diameter": format_rational(X.diameter),
            "partitionable": via,
        }
        lines.append(
            f"GH criterion at lambda={_num(lam)}: 2d_GH = {_num(value)} "
            f"{'<' if via else '>='} diam = {_num(X.diameter)}"
        )
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_corpus(args) -> int:
    paths = write_corpus(args.out)
    payload = {"written": [p.name for p in paths]}
    _emit(args, payload, [f"wrote {len(paths)} files to {args.out}"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--cap", type=int, default=None,
                        help="override the size cap of exhaustive searches")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = _Parser(prog="ghs", description="Exact GH distances from finite metric spaces to simplexes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check the metric axioms").add_argument("file")
    add("info", cmd_info, "cardinality, diameter, ultrametricity, spectrum").add_argument("file")

    sp = add("stats", cmd_stats, "(alpha, diam) set and extremes for n blocks")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("file")

    sp = add("curve", cmd_curve, "exact curve lambda -> 2d_GH(lambda Delta_n, X)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--csv", help="also write lambda,value rows to this CSV file")
    sp.add_argument("--grid", type=_rational_arg, nargs="*", help="extra lambda values for the CSV")
    sp.add_argument("file")

    sp = add("mset", cmd_mset, "extreme points and the canonical set M_n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("file")

    add("spectrum", cmd_spectrum, "mst-spectrum and a witness tree").add_argument("file")

    sp = add("oracle", cmd_oracle, "brute-force 2d_GH between two small spaces")
    sp.add_argument("a")
    sp.add_argument("b")

    sp = add("distinguish", cmd_distinguish, "decide indistinguishability by simplexes")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--report", help="write a markdown report here")

    for name, func in (("chromatic", cmd_chromatic), ("cliquecover", cmd_cliquecover)):
        sp = add(name, func, f"{name} number through GH distances")
        sp.add_argument("--a", type=_rational_arg, default=Fraction(1))
        sp.add_argument("--b", type=_rational_arg, default=Fraction(2))
        sp.add_argument("file")

    sp = add("borsuk", cmd_borsuk, "partition into n parts of smaller diameter")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--lambda", dest="lam", type=_rational_arg, default=None)
    sp.add_argument("file")

    add("corpus", cmd_corpus, "write the built-in corpus").add_argument("--out", required=True)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cap is None and args.func is not cmd_oracle:
        args.cap = partitions.DEFAULT_CAP
    try:
        return args.func(args)
    except (GHSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
