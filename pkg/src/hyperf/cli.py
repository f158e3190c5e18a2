"""Command-line front end: generation, invariants, orientation, verification.

Commands read and write the plain-text format of ``hypercore`` and print
either human-readable lines or, with ``--json``, one JSON document.  Exit
codes: 0 success; 1 usage, parse, or I/O error; 2 infeasible or not found
(an expected negative answer); 3 budget exhausted; 4 verification failure.
A default search budget may be set through the ``HYPERF_BUDGET`` variable;
``--budget`` overrides it per invocation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import comb

from .hypercore import (
    GENERATORS,
    BudgetExceeded,
    Hypergraph,
    HyperfError,
    Orientation,
    generate,
    read_path,
    to_text,
    write_path,
)
from .orient import Infeasible, orient_budget, orient_max_outdeg
from .extremal import TooLarge, degeneracy, m_value, mad_exact
from .fcalc import (
    FReport,
    ThresholdUnknown,
    bounds,
    closed_form_complete,
    closed_form_multipartite,
    f_bruteforce,
    f_via_m,
    find_tset,
    packing_bound,
)
from .ramsey import b_value, chi_r, f_p1_exact
from .verify import SUITES, UnknownSuite, verify_suite

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NEGATIVE = 2
EXIT_BUDGET = 3
EXIT_VERIFY = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse parser that reports errors through exit code 1."""

    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--seed", type=int, default=1, help="seed for randomized work (default 1)")
    common.add_argument("--budget", type=int, default=None,
                        help="search budget override (default: HYPERF_BUDGET or built-in)")
    common.add_argument("--quiet", action="store_true", help="suppress detail lines")
    return common


def build_parser() -> _Parser:
    common = _common_flags()
    parser = _Parser(prog="hyperf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    g = sub.add_parser("gen", parents=[common], help="generate a hypergraph")
    g.add_argument("family", choices=sorted(GENERATORS))
    g.add_argument("--n", type=int, help="number of vertices")
    g.add_argument("--r", type=int, help="edge size")
    g.add_argument("--m", type=int, help="number of edges (random family)")
    g.add_argument("--sizes", help="comma-separated class sizes (multipartite)")
    g.add_argument("-i", "--input", help="input file (join-k2, complement)")
    g.add_argument("-o", "--output", help="output path (default: stdout)")
    g.set_defaults(func=_cmd_gen)

    p = sub.add_parser("mad", parents=[common], help="exact maximum average degree")
    p.add_argument("file")
    p.set_defaults(func=_cmd_mad)

    p = sub.add_parser("degeneracy", parents=[common], help="degeneracy and elimination order")
    p.add_argument("file")
    p.set_defaults(func=_cmd_degeneracy)

    p = sub.add_parser("orient", parents=[common],
                       help="orient with bounded first-position degrees")
    p.add_argument("file")
    p.add_argument("--max-outdeg", type=int, help="uniform per-vertex cap")
    p.add_argument("--budget-file", help="per-vertex caps, one 'vertex cap' pair per line")
    p.add_argument("-o", "--output", help="oriented output path (default: stdout)")
    p.set_defaults(func=_cmd_orient)

    p = sub.add_parser("f", parents=[common], help="minimum everywhere-full p-set count")
    p.add_argument("file")
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--method", choices=("auto", "brute", "via-m", "closed", "via-b"),
                   default="auto")
    p.set_defaults(func=_cmd_f)

    p = sub.add_parser("chi-r", parents=[common], help="Ramsey p-chromatic number")
    p.add_argument("file")
    p.add_argument("--p", type=int, default=1)
    p.set_defaults(func=_cmd_chi_r)

    p = sub.add_parser("b", parents=[common], help="largest safely colorable p-set family")
    p.add_argument("file")
    p.add_argument("--p", type=int, default=1)
    p.set_defaults(func=_cmd_b)

    p = sub.add_parser("m", parents=[common], help="largest union of r sparse parts")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=_cmd_m)

    p = sub.add_parser("bounds", parents=[common], help="bounds bracketing f(H,1,k)")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=1)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("tset", parents=[common],
                       help="t-set with all p-subsets everywhere-full (oriented input)")
    p.add_argument("file")
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=_cmd_tset)

    p = sub.add_parser("pack", parents=[common], help="greedy packing lower-bound data")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, default=None, help="block size override")
    p.set_defaults(func=_cmd_pack)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", help="suite name or 'all'")
    p.set_defaults(func=_cmd_verify)

    return parser


# ------------------------------------------------------------------ helpers


def _resolve_budget(args) -> int | None:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("HYPERF_BUDGET")
    if env is None:
        return None
    try:
        return int(env)
    except ValueError:
        raise _UsageError(f"hyperf: HYPERF_BUDGET must be an integer, got {env!r}")


def _budget_kw(budget):
    return {} if budget is None else {"budget": budget}


def _read_hypergraph(path) -> Hypergraph:
    obj = read_path(path)
    if isinstance(obj, Orientation):
        return obj.base
    return obj


def _emit_json(payload):
    json.dump(payload, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _is_complete(h: Hypergraph) -> bool:
    return h.e == comb(h.n, h.r)


def _multipartite_sizes(g: Hypergraph):
    """Class sizes if g is a complete multipartite graph, else None."""
    if g.r != 2:
        return None
    adjacent = [set() for _ in range(g.n)]
    for a, b in g.edges:
        adjacent[a].add(b)
        adjacent[b].add(a)
    label = [-1] * g.n
    classes = 0
    for start in range(g.n):
        if label[start] != -1:
            continue
        stack = [start]
        label[start] = classes
        while stack:
            v = stack.pop()
            for u in range(g.n):
                if u != v and u not in adjacent[v] and label[u] == -1:
                    label[u] = classes
                    stack.append(u)
        classes += 1
    if any(label[a] == label[b] for a, b in g.edges):
        return None
    sizes = [0] * classes
    for v in range(g.n):
        sizes[label[v]] += 1
    return tuple(sorted(sizes, reverse=True))


def _closed_report(h: Hypergraph, p: int, k: int) -> FReport | None:
    if p != 1:
        return None
    if _is_complete(h):
        return FReport(value=closed_form_complete(h.n, h.r, k), method="closed")
    sizes = _multipartite_sizes(h)
    if sizes is not None:
        res = closed_form_multipartite(sizes, k)
        if res.applicable:
            return FReport(value=res.value, method="closed")
    return None


def _pick_method(h: Hypergraph, p: int, k: int) -> str:
    if p == 1 and _closed_report(h, p, k) is not None:
        return "closed"
    if p == 1:
        return "via-m"
    if k == 1 and p == h.r - 1:
        return "via-b"
    return "brute"


# ----------------------------------------------------------------- commands


def _cmd_gen(args, budget) -> int:
    family = args.family
    if family == "complete":
        _require(args, "n", "r")
        h = generate(family, n=args.n, r=args.r)
    elif family == "multipartite":
        _require(args, "sizes")
        sizes = tuple(int(s) for s in args.sizes.split(","))
        h = generate(family, sizes=sizes)
    elif family == "mop-fan":
        _require(args, "n")
        h = generate(family, n=args.n)
    elif family == "mop-random":
        _require(args, "n")
        h = generate(family, n=args.n, seed=args.seed)
    elif family == "random":
        _require(args, "n", "r", "m")
        h = generate(family, n=args.n, r=args.r, m=args.m, seed=args.seed)
    else:  # join-k2, complement
        _require(args, "input")
        h = generate(family, g=_read_hypergraph(args.input))
    if args.output:
        write_path(h, args.output)
        if args.json:
            _emit_json({"written": args.output, "n": h.n, "r": h.r, "e": h.e})
        elif not args.quiet:
            print(f"wrote {args.output}: n={h.n} r={h.r} e={h.e}")
    elif args.json:
        _emit_json({"n": h.n, "r": h.r, "edges": [list(e) for e in h.edges]})
    else:
        sys.stdout.write(to_text(h))
    return EXIT_OK


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join("--" + n for n in missing)
        raise _UsageError(f"hyperf gen {args.family}: missing {flags}")


def _cmd_mad(args, budget) -> int:
    h = _read_hypergraph(args.file)
    value, witness = mad_exact(h)
    if args.json:
        _emit_json({"mad": f"{value.numerator}/{value.denominator}",
                    "witness": list(witness)})
    else:
        print(f"{value.numerator}/{value.denominator}")
        if not args.quiet:
            print("witness:", " ".join(str(v) for v in witness))
    return EXIT_OK


def _cmd_degeneracy(args, budget) -> int:
    h = _read_hypergraph(args.file)
    value, order = degeneracy(h)
    if args.json:
        _emit_json({"degeneracy": value, "order": list(order)})
    else:
        print(value)
        if not args.quiet:
            print("order:", " ".join(str(v) for v in order))
    return EXIT_OK


def _cmd_orient(args, budget) -> int:
    h = _read_hypergraph(args.file)
    if (args.max_outdeg is None) == (args.budget_file is None):
        raise _UsageError("hyperf orient: give exactly one of --max-outdeg or --budget-file")
    if args.max_outdeg is not None:
        result = orient_max_outdeg(h, args.max_outdeg)
    else:
        result = orient_budget(h, _read_budget_file(args.budget_file))
    if isinstance(result, Infeasible):
        if args.json:
            _emit_json({"feasible": False, "witness": list(result.witness),
                        "edges_inside": result.edges_inside,
                        "capacity": result.capacity})
        else:
            inside = " ".join(str(v) for v in result.witness)
            print(f"infeasible: vertices {inside} span {result.edges_inside} "
                  f"edges but have total capacity {result.capacity}")
        return EXIT_NEGATIVE
    if args.json:
        _emit_json({"feasible": True,
                    "orders": [list(o) for o in result.orders]})
        if args.output:
            write_path(result, args.output)
    elif args.output:
        write_path(result, args.output)
        if not args.quiet:
            print(f"wrote {args.output}")
    else:
        sys.stdout.write(to_text(result))
    return EXIT_OK


def _read_budget_file(path) -> dict:
    caps = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            try:
                if len(fields) != 2:
                    raise ValueError
                caps[int(fields[0])] = int(fields[1])
            except ValueError:
                raise _UsageError(
                    f"{path}:{lineno}: expected 'vertex cap', got {raw.strip()!r}")
    return caps


def _cmd_f(args, budget) -> int:
    h = _read_hypergraph(args.file)
    kw = _budget_kw(budget)
    method = args.method
    if method == "auto":
        method = _pick_method(h, args.p, args.k)
    if method == "closed":
        rep = _closed_report(h, args.p, args.k)
        if rep is None:
            print("no closed form applies to this instance", file=sys.stderr)
            return EXIT_NEGATIVE
    elif method == "via-m":
        if args.p != 1:
            raise _UsageError("hyperf f: --method via-m requires --p 1")
        rep = f_via_m(h, args.k, **kw)
    elif method == "via-b":
        if args.k != 1:
            raise _UsageError("hyperf f: --method via-b requires --k 1")
        rep = f_p1_exact(h, args.p, **kw)
    else:
        rep = f_bruteforce(h, args.p, args.k, **kw)
    if args.json:
        _emit_json(rep.to_dict())
    else:
        print(rep.value)
        if not args.quiet:
            print("method:", rep.method)
    return EXIT_OK


def _cmd_chi_r(args, budget) -> int:
    h = _read_hypergraph(args.file)
    value = chi_r(h, args.p, **_budget_kw(budget))
    if args.json:
        _emit_json({"chi_r": value, "p": args.p})
    else:
        print(value)
    return EXIT_OK


def _cmd_b(args, budget) -> int:
    h = _read_hypergraph(args.file)
    result = b_value(h, args.p, **_budget_kw(budget))
    if args.json:
        _emit_json({"b": result.value, "p": args.p,
                    "coloring": result.coloring.to_dict()})
    else:
        print(result.value)
        if not args.quiet:
            colored = " ".join(
                f"{'-'.join(str(v) for v in pset)}:{c}"
                for pset, c in sorted(result.coloring.colored.items()))
            print("coloring:", colored if colored else "(empty)")
    return EXIT_OK


def _cmd_m(args, budget) -> int:
    h = _read_hypergraph(args.file)
    result = m_value(h, args.k, **_budget_kw(budget))
    if args.json:
        _emit_json({"m": result.value, "k": args.k,
                    "parts": [list(p) for p in result.parts],
                    "remainder": list(result.remainder)})
    else:
        print(result.value)
        if not args.quiet:
            for i, part in enumerate(result.parts):
                print(f"part {i}:", " ".join(str(v) for v in part))
    return EXIT_OK


def _cmd_bounds(args, budget) -> int:
    h = _read_hypergraph(args.file)
    rows = bounds(h, args.k, **_budget_kw(budget))
    if args.json:
        _emit_json({"k": args.k, "bounds": [b.to_dict() for b in rows]})
    else:
        for b in rows:
            if not b.applicable and args.quiet:
                continue
            status = "" if b.applicable else "  [not applicable]"
            note = f"  ({b.note})" if b.note and not args.quiet else ""
            print(f"{b.name}: {b.side} {b.value}{status}{note}")
    return EXIT_OK


def _cmd_tset(args, budget) -> int:
    obj = read_path(args.file)
    if not isinstance(obj, Orientation):
        raise _UsageError("hyperf tset: input must be an oriented file")
    found = find_tset(obj, args.p, args.k, args.t, **_budget_kw(budget))
    if found is None:
        if args.json:
            _emit_json({"found": False, "p": args.p, "k": args.k, "t": args.t})
        else:
            print(f"no {args.t}-set with all {args.p}-subsets everywhere-full "
                  f"at level {args.k}")
        return EXIT_NEGATIVE
    if args.json:
        _emit_json({"found": True, "tset": list(found)})
    else:
        print(" ".join(str(v) for v in found))
    return EXIT_OK


def _cmd_pack(args, budget) -> int:
    result = packing_bound(args.n, args.r, args.p, args.k, m=args.m)
    if args.json:
        _emit_json(result.to_dict())
    else:
        print(result.count)
        if not args.quiet and result.blocks:
            print(f"blocks of size {result.m}:",
                  "; ".join(" ".join(str(v) for v in b) for b in result.blocks))
    return EXIT_OK


def _cmd_verify(args, budget) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = [verify_suite(name, seed=args.seed, budget=budget) for name in names]
    if args.json:
        payload = [r.to_dict() for r in reports]
        _emit_json(payload[0] if len(payload) == 1 else {"suites": payload})
    else:
        for rep in reports:
            print(f"{rep.suite}: {rep.passed} passed, {rep.failed} failed "
                  f"({rep.seconds:.2f}s)")
            if not args.quiet:
                for check in rep.checks:
                    if not check.ok:
                        print(f"  FAIL {check.instance}: {check.relation} sees "
                              f"{check.values}")
    failed = sum(rep.failed for rep in reports)
    return EXIT_VERIFY if failed else EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        budget = _resolve_budget(args)
        return args.func(args, budget)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, TooLarge) as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        best = getattr(exc, "best", None)
        lower, upper = getattr(exc, "lower", None), getattr(exc, "upper", None)
        if best is not None:
            print(f"best found: {best}", file=sys.stderr)
        if lower is not None or upper is not None:
            print(f"bracket: [{lower}, {upper}]", file=sys.stderr)
        return EXIT_BUDGET
    except ThresholdUnknown as exc:
        print(exc, file=sys.stderr)
        return EXIT_NEGATIVE
    except UnknownSuite as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (HyperfError, OSError) as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
