"""Command-line front end.

Every command prints one JSON run report on stdout and a short human summary
on stderr.  Exit codes: 0 success, 1 usage or input error, 2 a mathematical
check failed.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from itertools import combinations
from typing import List, Optional

from . import __version__
from .families import (
    FamilyError,
    all_layer_families,
    best_layer_count,
    block,
    glued,
    growth_base,
    lb_count,
    melon,
)
from .graph import Graph, GraphError
from .io import format_graph, read_graph, write_graph
from .separators import (
    ALL,
    BALANCED,
    BRUTE_FORCE_CAP,
    GOLDEN,
    CapExceeded,
    brute_force_minimal_ab_separators,
    brute_force_minimal_separators,
    canonical_order,
    enumerate_minimal_ab_separators,
    enumerate_minimal_separators,
    is_minimal_ab_separator,
    max_sep_exhaustive,
)
from .triangulation import check_corollary

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2

# constructive layer families grow as 3**(2(m-1)); beyond this they are not desk-sized
FAMILY_VERIFY_MAX_M = 6
FAMILY_ENUMERATE_MAX_M = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _report(command: str, params: dict, results: dict, started: float) -> dict:
    return {
        "command": command,
        "params": params,
        "results": results,
        "elapsed_ms": max(0, int((time.perf_counter() - started) * 1000)),
        "version": __version__,
    }


def _emit(report: dict, out=None) -> None:
    out = out or sys.stdout
    out.write(json.dumps(report, sort_keys=True) + "\n")


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def _vertex(G: Graph, token: str) -> int:
    if token.isdigit():
        v = int(token)
        if v >= G.n:
            raise UsageError(f"vertex {v} out of range 0..{G.n - 1}")
        return v
    try:
        return G.vertex(token)
    except GraphError as exc:
        raise UsageError(str(exc)) from None


def _load(path: str) -> Graph:
    try:
        return read_graph(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from None


# -- gen ---------------------------------------------------------------------


def cmd_gen(args) -> int:
    started = time.perf_counter()
    try:
        if args.family == "melon":
            G = melon(args.k)
            params = {"family": "melon", "k": args.k}
        elif args.family == "block":
            G = block(args.m)
            params = {"family": "block", "m": args.m}
        else:
            G = glued(args.ell, args.m)
            params = {"family": "glued", "ell": args.ell, "m": args.m}
    except FamilyError as exc:
        raise UsageError(str(exc)) from None
    comment = " ".join(f"{k}={v}" for k, v in params.items())
    if args.output:
        write_graph(G, args.output, comment)
        _emit(_report("gen", params, {"n": G.n, "m": G.m, "output": args.output}, started))
    else:
        sys.stdout.write(format_graph(G, comment))
    _say(f"{params['family']}: n={G.n} m={G.m}")
    return EXIT_OK


# -- count -------------------------------------------------------------------


def cmd_count(args) -> int:
    started = time.perf_counter()
    G = _load(args.input)
    params = {"input": args.input, "method": args.method}
    results = {"n": G.n}
    if args.pair:
        a, b = (_vertex(G, t) for t in args.pair)
        if a == b:
            raise UsageError("pair vertices must differ")
        params["pair"] = [a, b]
        results["mode"] = "brute" if args.method == "brute" else "ab"
        if args.method == "brute":
            seps = brute_force_minimal_ab_separators(G, a, b, cap=args.max_brute_n)
        else:
            seps = enumerate_minimal_ab_separators(G, a, b)
        results["count"] = len(seps)
        if args.emit_separators:
            results["separators"] = [sorted(s) for s in canonical_order(seps)]
    elif args.method == "brute":
        seps = brute_force_minimal_separators(G, cap=args.max_brute_n)
        results["mode"] = "brute"
        results["count"] = len(seps)
        if args.emit_separators:
            results["separators"] = [sorted(s) for s in canonical_order(seps)]
    else:
        mode = BALANCED if args.method == "branch" else ALL
        rep = enumerate_minimal_separators(G, mode, jobs=args.jobs)
        results.update(rep.to_json(args.emit_separators))
    _emit(_report("count", params, results, started))
    _say(f"{args.method}: {results['count']} minimal separators (n={G.n})")
    return EXIT_OK


# -- verify ------------------------------------------------------------------


def _verify_family(m: int, max_enumerate_m: int):
    if m < 2:
        raise UsageError("m must be >= 2")
    if m > FAMILY_VERIFY_MAX_M:
        raise UsageError(f"family verification limited to m <= {FAMILY_VERIFY_MAX_M}")
    G = block(m)
    expected = 3 ** (2 * (m - 1))
    families = all_layer_families(G, verify=False)
    results = {"m": m, "n": G.n, "expected_family_size": expected,
               "family_sizes": [len(f) for f in families], "lb_count": lb_count(m)}
    for f in families:
        if len(f) != expected:
            return results, {"check": "family_size", "layer": f.j, "size": len(f)}
    for f1, f2 in combinations(families, 2):
        common = f1.separators & f2.separators
        if common:
            return results, {"check": "disjointness", "layers": [f1.j, f2.j],
                             "separator": sorted(min(common, key=sorted))}
    for f in families:
        for S in canonical_order(f.separators):
            if not is_minimal_ab_separator(G, S, 0, 1):
                return results, {"check": "membership", "layer": f.j, "separator": sorted(S)}
    if m <= max_enumerate_m:
        found = enumerate_minimal_ab_separators(G, 0, 1)
        results["ab_separator_count"] = len(found)
        union = frozenset().union(*(f.separators for f in families))
        missing = union - found
        if missing:
            return results, {"check": "containment", "separator": sorted(min(missing, key=sorted))}
        if len(found) <= lb_count(m):
            return results, {"check": "strict_excess", "ab_separator_count": len(found),
                             "lb_count": lb_count(m)}
    return results, None


def cmd_verify(args) -> int:
    started = time.perf_counter()
    if args.target == "family":
        params = {"target": "family", "m": args.m}
        results, failure = _verify_family(args.m, args.max_enumerate_m)
    elif args.target == "corollary":
        if not args.input:
            raise UsageError("verify corollary needs --input")
        G = _load(args.input)
        params = {"target": "corollary", "input": args.input}
        rep = check_corollary(G, cap=args.max_brute_n)
        results = rep.to_json()
        failure = None if rep.holds else {"check": "pmc_times_n_ge_sep", **rep.to_json()}
    else:
        if args.n is None:
            raise UsageError("verify bounds needs --n")
        params = {"target": "bounds", "n": args.n, "reduce_isomorphism": args.reduce_isomorphism}
        count, witness = max_sep_exhaustive(args.n, args.reduce_isomorphism)
        bound = GOLDEN ** args.n * args.n
        results = {"n": args.n, "max_sep": count, "bound_rho_n_times_n": bound,
                   "witness_edges": [list(e) for e in witness.edges()]}
        failure = None if count <= bound else {"check": "sep_le_rho_n_n", "max_sep": count,
                                               "witness_edges": results["witness_edges"]}
    results["ok"] = failure is None
    if failure is not None:
        results["counterexample"] = failure
    _emit(_report("verify", params, results, started))
    if failure is None:
        _say(f"verify {args.target}: ok")
        return EXIT_OK
    _say(f"verify {args.target}: FAILED {failure['check']}")
    return EXIT_VERIFY


# -- formula / maxsep / pmc --------------------------------------------------


def cmd_formula(args) -> int:
    started = time.perf_counter()
    try:
        if args.what == "lb-count":
            params = {"what": args.what, "m": args.m}
            value = lb_count(args.m)
            results = {"value": str(value), "digits": len(str(value))}
        elif args.what == "growth-base":
            params = {"what": args.what, "m": args.m}
            results = {"value": str(growth_base(args.m)), "rounding": "down", "significant_digits": 12}
        else:
            params = {"what": args.what, "max_m": args.max_m}
            m, base = best_layer_count(args.max_m)
            results = {"m": m, "value": str(base), "rounding": "down", "significant_digits": 12}
    except FamilyError as exc:
        raise UsageError(str(exc)) from None
    _emit(_report("formula", params, results, started))
    _say(f"{args.what}: {results['value']}")
    return EXIT_OK


def cmd_maxsep(args) -> int:
    started = time.perf_counter()
    count, witness = max_sep_exhaustive(args.n, args.reduce_isomorphism)
    params = {"n": args.n, "reduce_isomorphism": args.reduce_isomorphism}
    results = {"n": args.n, "max_sep": count, "witness_edges": [list(e) for e in witness.edges()],
               "bound_rho_n_times_n": GOLDEN ** args.n * args.n}
    _emit(_report("maxsep", params, results, started))
    _say(f"sep({args.n}) = {count}")
    return EXIT_OK


def cmd_pmc(args) -> int:
    started = time.perf_counter()
    G = _load(args.input)
    rep = check_corollary(G, cap=args.max_brute_n)
    _emit(_report("pmc", {"input": args.input}, rep.to_json(), started))
    _say(f"pmc={rep.pmc_count} sep={rep.sep_count} n={rep.n}")
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=1, help="worker processes for per-root enumeration")
    common.add_argument("--max-brute-n", type=int, default=BRUTE_FORCE_CAP,
                        help="largest n accepted by brute-force routines")
    common.add_argument("--emit-separators", action="store_true", help="include separator lists in the report")

    p = _Parser(prog="minsep", description="Minimal separators and potential maximal cliques.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", parents=[common], help="generate an extremal family graph")
    g.add_argument("family", choices=["melon", "block", "glued"])
    g.add_argument("--k", type=int, default=1, help="melon layers")
    g.add_argument("--m", type=int, default=2, help="block layers")
    g.add_argument("--ell", type=int, default=1, help="glued blocks")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("count", parents=[common], help="count minimal separators of a graph file")
    c.add_argument("input")
    c.add_argument("--method", choices=["brute", "branch", "branch-all"], default="branch")
    c.add_argument("--pair", nargs=2, metavar=("A", "B"), help="restrict to minimal (A,B)-separators (ids or labels)")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_count)

    v = sub.add_parser("verify", parents=[common], help="run an invariant suite")
    v.add_argument("target", choices=["family", "corollary", "bounds"])
    v.add_argument("--m", type=int, default=2)
    v.add_argument("--max-enumerate-m", type=int, default=FAMILY_ENUMERATE_MAX_M,
                   help="largest m for which all (a,b)-separators are enumerated")
    v.add_argument("--input")
    v.add_argument("--n", type=int)
    v.add_argument("--reduce-isomorphism", action="store_true")
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("formula", parents=[common], help="evaluate the counting formulas")
    f.add_argument("what", choices=["lb-count", "growth-base", "best-m"])
    f.add_argument("--m", type=int, default=24)
    f.add_argument("--max-m", type=int, default=100)
    f.add_argument("-o", "--output")
    f.set_defaults(func=cmd_formula)

    x = sub.add_parser("maxsep", parents=[common], help="exhaustive sep(n) for tiny n")
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--reduce-isomorphism", action="store_true")
    x.add_argument("-o", "--output")
    x.set_defaults(func=cmd_maxsep)

    q = sub.add_parser("pmc", parents=[common], help="count PMCs and check pmc >= sep/n")
    q.add_argument("input")
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_pmc)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    out_path = getattr(args, "output", None)
    redirect = out_path and args.command != "gen"
    saved = sys.stdout
    try:
        if redirect:
            sys.stdout = open(out_path, "w", encoding="utf-8")
        return args.func(args)
    except (UsageError, CapExceeded, GraphError, FamilyError) as exc:
        print(f"minsep {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if redirect:
            sys.stdout.close()
            sys.stdout = saved


if __name__ == "__main__":
    sys.exit(main())
