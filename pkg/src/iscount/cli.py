"""Command-line front end.

Exit codes: 0 success, 1 self-test failures, 2 unreadable or malformed
input, 3 brute-force size cap exceeded, 4 internal contract violation.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import List, Optional

from .cardinality import format_rational, trivial_cardinality
from .chromatic import ChromaticLimitExceeded, chromatic_number
from .engine import EngineConfig, SearchStats, iscount
from .generators import gnp, random_cubic, random_state
from .graph import Graph, GraphFormatError, parse_graph
from .oracle import OracleLimitExceeded, count_is_bruteforce, weighted_total_bruteforce
from .partition import bisect, skeleton, width

EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_INTERNAL = 4


def _read_graph(args) -> Graph:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    return parse_graph(text, args.format)


def _config(args) -> EngineConfig:
    kw = {"rng_seed": args.seed}
    if args.cutoff is not None:
        kw["small_cutoff"] = args.cutoff
    return EngineConfig.from_env(**kw)


def _emit(args, result: str, stats: Optional[SearchStats] = None, extra: Optional[dict] = None) -> None:
    if args.json:
        obj = {"result": result}
        if extra:
            obj.update(extra)
        if args.stats and stats is not None:
            obj["stats"] = stats.to_json()
        print(json.dumps(obj, sort_keys=True))
        return
    print(result)
    if args.stats and stats is not None:
        print(json.dumps(stats.to_json(), sort_keys=True))


def cmd_count(args) -> int:
    g = _read_graph(args)
    stats = SearchStats()
    total = iscount(trivial_cardinality(g, copy=False), config=_config(args), stats=stats)
    _emit(args, format_rational(total), stats)
    return 0


def cmd_chromatic(args) -> int:
    g = _read_graph(args)
    res = chromatic_number(g, max_n=args.max_n, config=_config(args), workers=args.workers)
    extra = {"per_k_sums": [str(s) for s in res.per_k_sums], "subsets_evaluated": res.subsets_evaluated}
    _emit(args, str(res.chi), None, extra if args.stats else None)
    return 0


def cmd_oracle(args) -> int:
    g = _read_graph(args)
    _emit(args, str(count_is_bruteforce(g, max_n=args.max_n)))
    return 0


def cmd_selftest(args) -> int:
    rng = random.Random(args.seed)
    cfg = _config(args)
    passed = failed = 0
    for trial in range(args.trials):
        n = rng.randint(1, args.max_n)
        g = gnp(n, rng.choice([0.1, 0.3, 0.5, 0.8]), rng)
        if trial % 2:
            st = random_state(g, rng, gadgets=rng.randint(0, 2))
            ok = iscount(st, config=cfg) == weighted_total_bruteforce(st)
        else:
            ok = iscount(trivial_cardinality(g, copy=False), config=cfg) == count_is_bruteforce(g)
        if ok:
            passed += 1
        else:
            failed += 1
            print(f"mismatch: trial {trial} n={n}", file=sys.stderr)
    if args.json:
        print(json.dumps({"seed": args.seed, "trials": args.trials, "passed": passed, "failed": failed}, sort_keys=True))
    else:
        print(f"selftest seed={args.seed} trials={args.trials} passed={passed} failed={failed}")
    return EXIT_FAILED if failed else 0


def cmd_bench(args) -> int:
    rows = []
    for n in args.sizes:
        rng = random.Random(args.seed * 7919 + n)
        g = random_cubic(n, rng)
        b = skeleton(g)
        row = {"n": n, "width": width(bisect(b, args.seed), b)}
        if not args.width_only:
            stats = SearchStats()
            t0 = time.perf_counter()
            total = iscount(trivial_cardinality(g, copy=False), config=_config(args), stats=stats)
            row.update(
                count=str(total.numerator),
                branch_nodes=stats.branch_nodes,
                bound=int(64 * 2 ** (0.2001 * g.count_degree(3))),
                d2=stats.reductions["d2"],
                bisections=stats.bisections,
            )
            if args.timing:
                row["seconds"] = round(time.perf_counter() - t0, 3)
            if args.stats:
                row["stats"] = stats.to_json()
        rows.append(row)
    if args.json:
        print(json.dumps(rows, sort_keys=True))
        return 0
    cols = [c for c in ("n", "width", "branch_nodes", "bound", "d2", "bisections", "seconds", "count") if c in rows[0]]
    print("\t".join(cols))
    for row in rows:
        print("\t".join(str(row[c]) for c in cols))
        if args.stats and "stats" in row:
            print(json.dumps(row["stats"], sort_keys=True))
    return 0


def _sizes(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None


def _cutoff(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError("cutoff must be >= 2")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cutoff", type=_cutoff, default=None, help="small-graph cutoff (default 20, or $ISCOUNT_CUTOFF)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--stats", action="store_true", help="attach search statistics")
    common.add_argument("--json", action="store_true", help="emit one JSON object")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("input", nargs="?", default="-", help="graph file, or - for stdin")
    graph_in.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")

    p = argparse.ArgumentParser(prog="iscount", description="Exact weighted independent-set counting.")
    sub = p.add_subparsers(dest="verb", required=True)

    sp = sub.add_parser("count", parents=[common, graph_in], help="count independent sets")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("chromatic", parents=[common, graph_in], help="chromatic number")
    sp.add_argument("--max-n", type=int, default=18)
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_chromatic)

    sp = sub.add_parser("oracle", parents=[common, graph_in], help="brute-force count")
    sp.add_argument("--max-n", type=int, default=25)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("selftest", parents=[common], help="randomised comparison against brute force")
    sp.add_argument("--trials", type=int, default=200)
    sp.add_argument("--max-n", type=int, default=14)
    sp.set_defaults(func=cmd_selftest)

    sp = sub.add_parser("bench", parents=[common], help="search statistics on random cubic graphs")
    sp.add_argument("--sizes", type=_sizes, default=[20, 30, 40, 50, 60])
    sp.add_argument("--width-only", action="store_true", help="report bisection widths without counting")
    sp.add_argument("--timing", action="store_true", help="add wall-clock seconds (not reproducible)")
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, OSError) as exc:
        print(f"iscount: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (OracleLimitExceeded, ChromaticLimitExceeded) as exc:
        print(f"iscount: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (AssertionError, ValueError, ArithmeticError) as exc:
        print(f"iscount: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
