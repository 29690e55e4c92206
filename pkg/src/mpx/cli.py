"""Command line interface: ``mpx <command> ...``.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
Graph arguments are JSON files of the form {"n": 3, "edges": [[0, 1], ...]};
"-" reads the graph from stdin.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formulas, series, verify
from .digraph import FAMILIES, Digraph, family, from_json
from .dynamics import decompose, join_euler_check, module_subgraph
from .homotopy import CLASSIFY_FAMILIES, classify_family
from .multipath import DEFAULT_CAP, TooManyMultipaths, count_by_length, multipath_sets
from .pathposet import reduced_euler_characteristic
from .simplicial import graph_homology, matching_complex, reduced_homology


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def _read_graph(path: str) -> Digraph:
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
        return from_json(text)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad graph JSON in {path}: {exc}")


def _emit(args, data, text: str) -> None:
    if args.json:
        print(json.dumps(data))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _homology_json(h) -> dict:
    return {
        "empty": h.empty,
        "betti": list(h.betti),
        "torsion": [list(t) for t in h.torsion],
        "betti_line": h.betti_line(),
    }


def _family_params(args) -> dict:
    return {"n": args.n, "m": args.m, "word": args.word, "legs": args.legs, "removed": args.removed}


# -- commands ------------------------------------------------------------------

def cmd_gen(args) -> int:
    params = _family_params(args)
    if args.family == "incomplete-tournament" and params["removed"] is None:
        params["removed"] = []
    g = family(args.family, **params)
    out = g.to_dot() if args.format == "dot" else g.to_json() + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


def cmd_multipaths(args) -> int:
    g = _read_graph(args.graph)
    if args.by_length:
        counts = count_by_length(g, args.max_count)
        _emit(args, counts, " ".join(map(str, counts)))
    else:
        sets = [list(s) for s in multipath_sets(g, args.max_count)]
        print(json.dumps(sets))
    return 0


def cmd_chi(args) -> int:
    g = _read_graph(args.graph)
    try:
        chi = reduced_euler_characteristic(g, method=args.method)
    except AssertionError as exc:
        print(f"methods disagree: {exc}", file=sys.stderr)
        return 1
    _emit(args, {"chi": chi, "method": args.method}, str(chi))
    return 0


def cmd_homology(args) -> int:
    g = _read_graph(args.graph)
    if args.matching:
        undirected = sorted({tuple(sorted(e)) for e in g.edges})
        h = reduced_homology(matching_complex(g.n, undirected))
    else:
        h = graph_homology(g, args.max_count)
    _emit(args, _homology_json(h), "\n".join(h.format_lines() + [h.betti_line()]))
    return 0


def cmd_decompose(args) -> int:
    g = _read_graph(args.graph)
    mods = decompose(g)
    rows = []
    for m in mods:
        sub = module_subgraph(g, m)
        stable = not any(sub.in_degree(v) and sub.out_degree(v) for v in range(sub.n))
        rows.append({"edges": sorted(m), "stable": stable})
    lines = [f"module {i}: {r['edges']} {'stable' if r['stable'] else 'unstable'}" for i, r in enumerate(rows)]
    data: dict = {"modules": rows}
    status = 0
    if args.check_join:
        jc = join_euler_check(g)
        data["join_check"] = {"ok": jc.ok, "chi": jc.chi_graph, "module_chis": list(jc.chi_modules)}
        lines.append(f"join check: {'ok' if jc.ok else 'FAILED'} "
                     f"(chi={jc.chi_graph}, modules={list(jc.chi_modules)})")
        status = 0 if jc.ok else 1
    _emit(args, data, "\n".join(lines))
    return status


def cmd_classify(args) -> int:
    params = {k: v for k, v in _family_params(args).items() if v is not None}
    try:
        typ, g = classify_family(args.family, **params)
    except KeyError as exc:
        raise UsageError(f"family {args.family!r} needs --{exc.args[0]}")
    data: dict = {"type": str(typ)}
    lines = [str(typ)]
    status = 0
    if args.oracle:
        if g is None:
            h = None
            agree = typ.kind == "empty"
        else:
            h = verify.grid_oracle(g)
            agree = typ.matches(h)
        data["oracle"] = {"agrees": agree, "homology": _homology_json(h) if h else None}
        lines.append(f"oracle: {h.betti_line() if h else 'no edges'} -> {'agrees' if agree else 'DISAGREES'}")
        status = 0 if agree else 1
    _emit(args, data, "\n".join(lines))
    return status


# sign relating each series to its fixture: value(n) = sign(n) * fixture(n)
_FIXTURE_SIGNS = {
    "complete": lambda n: (-1) ** n,
    "tournament": lambda n: (-1) ** (n + 1),
    "reversed": lambda n: 1,
}


def cmd_series(args) -> int:
    fn = series.SERIES[args.name]
    coeffs = fn(args.order)
    if isinstance(coeffs, dict):
        table = {f"{n},{m}": v for (n, m), v in sorted(coeffs.items())}
        flat = series.antidiagonals(coeffs, args.order + 1)
        text = " ".join(map(str, flat))
        data: dict = {"coefficients": table, "antidiagonals": flat}
    else:
        text = " ".join(map(str, coeffs))
        data = {"coefficients": coeffs}
    status = 0
    if args.fixture:
        try:
            off, vals = series.load_fixture_with_offset(args.fixture)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read fixture {args.fixture}: {exc}")
        diffs = []
        if isinstance(coeffs, dict):
            for i, (a, b) in enumerate(zip(flat, vals)):
                if a != b:
                    diffs.append((i, a, b))
        else:
            sign = _FIXTURE_SIGNS.get(args.name, lambda n: 1)
            for k, b in enumerate(vals):
                n = k + off
                if n > args.order:
                    break
                if coeffs[n] != sign(n) * b:
                    diffs.append((n, coeffs[n], b))
        data["fixture_mismatches"] = diffs
        text += "\nfixture: " + ("match" if not diffs else f"{len(diffs)} mismatches, first {diffs[:3]}")
        status = 0 if not diffs else 1
    _emit(args, data, text)
    return status


def cmd_formula(args) -> int:
    value = formulas.evaluate(args.name, args.args)
    _emit(args, {"name": args.name, "args": args.args, "value": value}, str(value))
    return 0


def cmd_verify(args) -> int:
    if args.what == "all":
        n_jobs = max(1, args.jobs)
        if args.level == "quick":
            results = [verify.run_one(k) for k in ("1", "2", "4", "7")]
        else:
            results = verify.run_all(n_jobs)
        if args.json:
            print(json.dumps([{"key": r.key, "title": r.title, "ok": r.ok, "detail": r.detail}
                              for r in results]))
        else:
            sys.stdout.write(verify.report(results, timings=args.timings))
        return 0 if all(r.ok for r in results) else 1
    if args.what == "conjecture":
        ok, detail = verify.check_conjecture(args.n, sampled=args.samples)
    else:
        ok, detail = verify.check_torsion_conjecture(args.max_edges, count=args.samples or 300)
    _emit(args, {"ok": ok, "detail": detail}, f"{'PASS' if ok else 'FAIL'}: {detail}")
    return 0 if ok else 1


# -- parser --------------------------------------------------------------------

def _add_family_params(p) -> None:
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--word", help="orientation word over 'f' (forward) and 'b' (backward)")
    p.add_argument("--legs", type=_int_list, help="comma separated leg counts")
    p.add_argument("--removed", type=_int_list, help="comma separated removed vertices")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine readable output")

    parser = argparse.ArgumentParser(prog="mpx", description="Multipath complexes of directed graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="write a graph from a named family")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    _add_family_params(p)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("multipaths", parents=[common], help="list multipaths as edge-index lists")
    p.add_argument("graph")
    p.add_argument("--max-count", type=int, default=DEFAULT_CAP)
    p.add_argument("--by-length", action="store_true", help="print counts per length instead")
    p.set_defaults(func=cmd_multipaths)

    p = sub.add_parser("chi", parents=[common], help="reduced Euler characteristic")
    p.add_argument("graph")
    p.add_argument("--method", choices=("mobius", "fvector", "both"), default="both")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("homology", parents=[common], help="reduced integral homology")
    p.add_argument("graph")
    p.add_argument("--matching", action="store_true",
                   help="use the matching complex of the underlying undirected graph")
    p.add_argument("--max-count", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("decompose", parents=[common], help="split a graph into modules")
    p.add_argument("graph")
    p.add_argument("--check-join", action="store_true", help="compare with the join of the modules")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("classify", parents=[common], help="symbolic homotopy type of a family member")
    p.add_argument("family", choices=CLASSIFY_FAMILIES)
    _add_family_params(p)
    p.add_argument("--oracle", action="store_true", help="cross-check against computed homology")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("series", parents=[common], help="generating function coefficients")
    p.add_argument("name", choices=sorted(series.SERIES))
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--fixture", help="fixture id (e.g. A000587) or file to diff against")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("formula", parents=[common], help="evaluate a closed form")
    p.add_argument("name", choices=sorted(formulas.NAMED))
    p.add_argument("args", type=int, nargs="*")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("verify", parents=[common], help="run verification experiments")
    p.add_argument("what", choices=("all", "conjecture", "torsion-conjecture"))
    p.add_argument("--level", choices=("quick", "desk"), default="desk")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timings", action="store_true")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--samples", type=int, default=0, help="random samples (conjecture: at n+1)")
    p.add_argument("--max-edges", type=int, default=8)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ValueError, IndexError) as exc:
        print(f"mpx: error: {exc}", file=sys.stderr)
        return 2
    except TooManyMultipaths as exc:
        print(f"mpx: error: {exc} (raise --max-count to continue)", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
