"""Command-line interface.

Solution output (one vertex set per line, members ascending) goes to
stdout; warnings, notices, and metrics go to stderr or the requested
file.  Exit codes: 0 success (agreement for validate), 1 usage or input
errors, 2 validation disagreement.
"""

from __future__ import annotations

import argparse
import os
import sys
from itertools import combinations

from .bench import ALGOS, BenchRecord, bench_graph, count_separators, render_csv
from .enumerators import (
    GATE_NAMES,
    Metrics,
    collect_sorted,
    enumerate_bt,
    enumerate_dfs,
    enumerate_nondup,
)
from .families import gen_family
from .graph import (
    Graph,
    GraphFormatError,
    dump_dimacs,
    dump_edgelist,
    format_set,
    load_graph,
    members,
    parse_set,
    seeded_ordering,
)
from .oracle import pmc_oracle_scan, pmc_oracle_triangulation
from .pmc import is_minimal_separator, is_pmc
from .separators import OracleBudgetError, separators, separators_oracle

BT_SPACE_WARNING = (
    "warning: algorithm 'bt' retains every level's full PMC family "
    "(exponential space); prefer 'dfs' for large graphs"
)


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; remap to 1."""

    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# shared option plumbing
# ---------------------------------------------------------------------------

def _add_graph_opts(p: argparse.ArgumentParser):
    p.add_argument("path", help="graph file ('-' reads stdin)")
    p.add_argument(
        "--format",
        choices=("auto", "edgelist", "dimacs"),
        default="auto",
        help="input format (auto sniffs a DIMACS problem line)",
    )
    p.add_argument(
        "--n",
        type=int,
        default=None,
        metavar="N",
        help="vertex count for headerless or empty edge lists",
    )


def _add_order_opts(p: argparse.ArgumentParser):
    p.add_argument(
        "--order",
        choices=("input", "seeded", "file"),
        default="input",
        help="vertex ordering: as labeled, shuffled by --seed, or from --order-file",
    )
    p.add_argument("--seed", type=int, default=0, help="seed for --order seeded")
    p.add_argument(
        "--order-file", default=None, metavar="PATH",
        help="whitespace-separated permutation of 1..n (for --order file)",
    )


def _add_metrics_opt(p: argparse.ArgumentParser):
    p.add_argument(
        "--metrics",
        nargs="?",
        const="-",
        default=None,
        metavar="PATH",
        help="append a metrics CSV (header + row) to PATH, or stderr if bare",
    )


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _graph_name(path: str) -> str:
    name = "<stdin>" if path == "-" else os.path.basename(path)
    return name.replace(",", "_")


def _load(args) -> Graph:
    g = load_graph(_read_text(args.path), args.format, n=args.n)
    order = getattr(args, "order", "input")
    if order == "seeded":
        g = g.with_ordering(seeded_ordering(g.n, args.seed))
    elif order == "file":
        if not args.order_file:
            raise GraphFormatError("--order file requires --order-file PATH")
        tokens = _read_text(args.order_file).split()
        try:
            perm = [int(t) for t in tokens]
        except ValueError:
            raise GraphFormatError(
                f"order file {args.order_file!r} must contain integers"
            ) from None
        g = g.with_ordering(perm)
    return g


def _emit_sets(masks, do_sort: bool):
    out = sorted(masks, key=members) if do_sort else masks
    for m in out:
        print(format_set(m))


def _write_metrics(args, record: BenchRecord):
    if args.metrics is None:
        return
    if args.metrics == "-":
        sys.stderr.write(render_csv([record]))
        return
    # append rows; only a fresh/empty file gets the header
    fresh = not os.path.exists(args.metrics) or os.path.getsize(args.metrics) == 0
    text = render_csv([record]) if fresh else record.csv_row() + "\n"
    with open(args.metrics, "a", encoding="utf-8") as fh:
        fh.write(text)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    g = _load(args)
    if args.algo == "bt":
        sys.stderr.write(BT_SPACE_WARNING + "\n")
    m = Metrics()
    if args.algo == "bt":
        result = enumerate_bt(g, m)
        _emit_sets(result, do_sort=True)  # bt computes a set; canonical order
        pmcs = len(result)
    else:
        stream = enumerate_nondup(g, m) if args.algo == "nondup" else enumerate_dfs(g, m)
        if args.sorted:
            result = collect_sorted(stream)
            _emit_sets(result, do_sort=False)
            pmcs = len(result)
        else:
            pmcs = 0
            for mask in stream:
                print(format_set(mask))
                pmcs += 1
    _write_metrics(args, BenchRecord(
        _graph_name(args.path), g.level, g.edge_count, args.algo,
        pmcs=pmcs, seps=count_separators(g), ispmc_calls=m.is_pmc_calls,
        peak_sets=m.peak_retained_sets, ms=m.wall_time_s * 1000.0,
    ))
    return 0


def cmd_separators(args) -> int:
    g = _load(args)
    m = Metrics()
    import time

    t0 = time.perf_counter()
    if args.sorted:
        seps = sorted(separators(g, m), key=members)
    else:
        seps = list(separators(g, m))
    ms = (time.perf_counter() - t0) * 1000.0
    _emit_sets(seps, do_sort=False)
    _write_metrics(args, BenchRecord(
        _graph_name(args.path), g.level, g.edge_count, "separators",
        pmcs=None, seps=len(seps), ispmc_calls=m.is_pmc_calls,
        peak_sets=m.peak_retained_sets, ms=ms,
    ))
    return 0


def cmd_check(args) -> int:
    g = _load(args)
    target = parse_set(args.set)
    if args.kind == "pmc":
        verdict = is_pmc(g, target)
    else:
        verdict = is_minimal_separator(g, target)
    print("true" if verdict else "false")
    return 0


def cmd_oracle(args) -> int:
    g = _load(args)
    if args.method == "scan":
        result = pmc_oracle_scan(g)
    else:
        result = pmc_oracle_triangulation(g)
    _emit_sets(result, do_sort=True)
    return 0


def cmd_gen(args) -> int:
    params = {}
    if args.k is not None:
        params["k"] = args.k
    if args.count_n is not None:
        params["n"] = args.count_n
    if args.p is not None:
        params["p"] = args.p
    params["seed"] = args.seed
    g = gen_family(args.family, **params)
    text = dump_dimacs(g) if args.out_format == "dimacs" else dump_edgelist(g)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        sys.stderr.write(
            f"wrote {args.family} graph (n={g.n}, m={g.edge_count}) to {args.out}\n"
        )
    return 0


# -- validate ----------------------------------------------------------------

def _validate_one(g: Graph, disable_gate=None, quiet=False) -> bool:
    """Cross-check every route on one graph; prints a report unless quiet.

    Returns True on full agreement with duplicate-free streams.
    """
    report = []
    families = {}
    dupes = 0

    families["bt"] = frozenset(enumerate_bt(g, Metrics()))
    report.append(f"bt: {len(families['bt'])} pmcs")

    dup_example = None
    for algo, fn in (("nondup", enumerate_nondup), ("dfs", enumerate_dfs)):
        m = Metrics()
        seq = list(fn(g, m, disable_gate=disable_gate))
        m.duplicates_detected = len(seq) - len(set(seq))
        dupes += m.duplicates_detected
        if m.duplicates_detected and dup_example is None:
            seen = set()
            for k in seq:
                if k in seen:
                    dup_example = (algo, k)
                    break
                seen.add(k)
        families[algo] = frozenset(seq)
        report.append(
            f"{algo}: {len(seq)} emitted, {len(families[algo])} distinct "
            f"({m.duplicates_detected} duplicates)"
        )

    if g.level <= 15:
        families["oracle-scan"] = pmc_oracle_scan(g)
        report.append(f"oracle-scan: {len(families['oracle-scan'])} pmcs")
    elif not quiet:
        sys.stderr.write("notice: subset-scan oracle skipped (needs n <= 15)\n")
    if g.level <= 7:
        families["oracle-triangulation"] = pmc_oracle_triangulation(g)
        report.append(
            f"oracle-triangulation: {len(families['oracle-triangulation'])} pmcs"
        )
    elif not quiet:
        sys.stderr.write("notice: triangulation oracle skipped (needs n <= 7)\n")

    sep_ok = True
    if g.level <= 12:
        stream = list(separators(g))
        sep_ok = (
            len(stream) == len(set(stream))
            and set(stream) == set(separators_oracle(g))
        )
        report.append(f"separators: {len(stream)} streamed, oracle match: "
                      f"{'yes' if sep_ok else 'NO'}")

    base = families["bt"]
    agree = all(f == base for f in families.values()) and dupes == 0 and sep_ok
    report.append(f"agreement: {'yes' if agree else 'NO'}")
    if not agree:
        # pin down one offending set so the failure is reproducible
        where = None
        if dup_example is not None:
            where = (f"route={dup_example[0]} duplicated "
                     f"set={{{format_set(dup_example[1])}}}")
        else:
            for name in sorted(families):
                diff = families[name] ^ base
                if diff:
                    k = min(diff, key=members)
                    side = "extra" if k in families[name] else "missing"
                    where = f"route={name} {side} set={{{format_set(k)}}} vs bt"
                    break
            if where is None:
                where = "separator stream disagrees with the subset oracle"
        report.append(
            f"counterexample: n={g.level} m={g.edge_count} "
            f"ordering={','.join(map(str, g.ordering))} {where}"
        )
    if not quiet:
        print("\n".join(report))
    return agree


def _all_graphs(n: int):
    slots = list(combinations(range(1, n + 1), 2))
    for code in range(1 << len(slots)):
        edges = [e for i, e in enumerate(slots) if (code >> i) & 1]
        yield code, Graph.from_edges(n, edges)


def cmd_validate(args) -> int:
    if args.exhaustive_n is not None:
        n = args.exhaustive_n
        if not (1 <= n <= 5):
            raise GraphFormatError(
                "--exhaustive-n is limited to 1..5 (the graph count is "
                "2^(n choose 2))"
            )
        total = 0
        bad = []
        for code, g in _all_graphs(n):
            total += 1
            if not _validate_one(g, disable_gate=args.disable_gate, quiet=True):
                bad.append(code)
        print(f"checked all {total} labeled graphs on {n} vertices")
        if bad:
            print(f"disagreements on {len(bad)} graphs "
                  f"(edge codes: {bad[:10]}{'...' if len(bad) > 10 else ''})")
            return 2
        print("agreement: yes")
        return 0

    if args.path is None:
        raise GraphFormatError("validate needs a graph file or --exhaustive-n")
    g = _load(args)
    return 0 if _validate_one(g, disable_gate=args.disable_gate) else 2


def cmd_bench(args) -> int:
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    for a in algos:
        if a not in ALGOS:
            raise GraphFormatError(f"unknown algorithm {a!r}; pick from {ALGOS}")
    graphs = []
    if args.family == "theta":
        for k in range(args.kmin, args.kmax + 1):
            graphs.append((f"theta{k}", gen_family("theta", k=k)))
    elif args.family == "random":
        if args.count_n is None:
            raise GraphFormatError("bench --family random needs --n")
        for i in range(args.count):
            seed = args.seed + i
            graphs.append(
                (f"rand-n{args.count_n}-p{args.p}-s{seed}",
                 gen_family("random", n=args.count_n, p=args.p, seed=seed))
            )
    else:
        if args.count_n is None:
            raise GraphFormatError(f"bench --family {args.family} needs --n")
        top = args.nmax if args.nmax is not None else args.count_n
        for n in range(args.count_n, top + 1):
            graphs.append((f"{args.family}{n}", gen_family(args.family, n=n)))

    records = []
    for name, g in graphs:
        records.extend(bench_graph(name, g, algos=algos, bt_cutoff=args.bt_cutoff))
    text = render_csv(records)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


# ---------------------------------------------------------------------------
# parser assembly
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="pmclique",
        description="Enumerate potential maximal cliques and minimal separators.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("enumerate", help="enumerate all PMCs of a graph")
    _add_graph_opts(p)
    _add_order_opts(p)
    _add_metrics_opt(p)
    p.add_argument("--algo", choices=ALGOS, default="dfs")
    p.add_argument("--sorted", action="store_true",
                   help="canonical sorted output instead of emission order")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("separators", help="stream all minimal separators")
    _add_graph_opts(p)
    _add_metrics_opt(p)
    p.add_argument("--sorted", action="store_true")
    p.set_defaults(func=cmd_separators)

    p = sub.add_parser("check", help="test one vertex set")
    _add_graph_opts(p)
    p.add_argument("--set", required=True, help="vertex set, e.g. '1,2,3'")
    p.add_argument("--kind", choices=("pmc", "separator"), default="pmc")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="brute-force PMC family (small graphs)")
    _add_graph_opts(p)
    p.add_argument("--method", choices=("scan", "triangulation"), default="scan")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("validate",
                       help="cross-check enumerators against the oracles")
    p.add_argument("path", nargs="?", default=None,
                   help="graph file ('-' reads stdin)")
    p.add_argument("--format", choices=("auto", "edgelist", "dimacs"),
                   default="auto")
    p.add_argument("--n", type=int, default=None)
    _add_order_opts(p)
    p.add_argument("--exhaustive-n", type=int, default=None, metavar="N",
                   help="validate every labeled graph on N vertices (N <= 5)")
    p.add_argument("--disable-gate", choices=GATE_NAMES, default=None,
                   help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("gen", help="generate a family graph")
    p.add_argument("--family", required=True,
                   choices=("theta", "path", "cycle", "complete", "random"))
    p.add_argument("--k", type=int, default=None, help="theta parameter")
    p.add_argument("--n", dest="count_n", type=int, default=None)
    p.add_argument("--p", type=float, default=None, help="edge probability")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", "-o", default="-")
    p.add_argument("--out-format", choices=("edgelist", "dimacs"),
                   default="edgelist")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="benchmark the enumerators on a family")
    p.add_argument("--family", required=True,
                   choices=("theta", "path", "cycle", "complete", "random"))
    p.add_argument("--kmin", type=int, default=2)
    p.add_argument("--kmax", type=int, default=6)
    p.add_argument("--n", dest="count_n", type=int, default=None)
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1,
                   help="number of random graphs (seeds seed..seed+count-1)")
    p.add_argument("--algos", default="bt,nondup,dfs")
    p.add_argument("--bt-cutoff", type=int, default=None, metavar="N",
                   help="emit 'skipped' rows for bt above N vertices")
    p.add_argument("--out", "-o", default="-")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 1
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0
    except (GraphFormatError, OracleBudgetError, ValueError, OSError) as e:
        sys.stderr.write(f"pmclique: error: {e}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
