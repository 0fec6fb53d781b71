"""Benchmark records and runners for the three enumerators."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .enumerators import Metrics, enumerate_bt, enumerate_dfs, enumerate_nondup
from .graph import Graph
from .separators import _machine_yields

CSV_HEADER = "graph,n,m,algo,pmcs,seps,ispmc_calls,peak_sets,ms"

ALGOS = ("bt", "nondup", "dfs")


@dataclass
class BenchRecord:
    graph: str
    n: int
    m: int
    algo: str
    pmcs: Optional[int] = None
    seps: Optional[int] = None
    ispmc_calls: Optional[int] = None
    peak_sets: Optional[int] = None
    ms: Optional[float] = None
    skipped: bool = False

    def csv_row(self) -> str:
        if self.skipped:
            return f"{self.graph},{self.n},{self.m},{self.algo},skipped,,,,"

        def cell(v, fmt="{}"):
            return "" if v is None else fmt.format(v)

        return (
            f"{self.graph},{self.n},{self.m},{self.algo},"
            f"{cell(self.pmcs)},{cell(self.seps)},{cell(self.ispmc_calls)},"
            f"{cell(self.peak_sets)},{cell(self.ms, '{:.3f}')}"
        )


def count_separators(g: Graph) -> int:
    """Number of minimal separators of the full graph (one machine sweep)."""
    return sum(1 for _ in _machine_yields(g))


def run_algo(g: Graph, algo: str, metrics: Optional[Metrics] = None) -> Tuple[int, Metrics]:
    """Run one enumerator to completion; returns (pmc count, metrics)."""
    m = metrics if metrics is not None else Metrics()
    if algo == "bt":
        pmcs = len(enumerate_bt(g, m))
    elif algo == "nondup":
        pmcs = sum(1 for _ in enumerate_nondup(g, m))
    elif algo == "dfs":
        pmcs = sum(1 for _ in enumerate_dfs(g, m))
    else:
        raise ValueError(f"unknown algorithm {algo!r}; pick from {ALGOS}")
    return pmcs, m


def bench_graph(
    name: str,
    g: Graph,
    algos: Sequence[str] = ALGOS,
    bt_cutoff: Optional[int] = None,
) -> List[BenchRecord]:
    """Benchmark each requested algorithm on one graph.

    The separator count is computed once per graph and repeated on every
    row.  With ``bt_cutoff``, bt rows for graphs above that many vertices
    are emitted as explicit skips instead of being run.
    """
    edge_count = g.edge_count
    seps = count_separators(g)
    records = []
    for algo in algos:
        if algo == "bt" and bt_cutoff is not None and g.level > bt_cutoff:
            records.append(
                BenchRecord(name, g.level, edge_count, algo, skipped=True)
            )
            continue
        pmcs, m = run_algo(g, algo)
        records.append(
            BenchRecord(
                name,
                g.level,
                edge_count,
                algo,
                pmcs=pmcs,
                seps=seps,
                ispmc_calls=m.is_pmc_calls,
                peak_sets=m.peak_retained_sets,
                ms=m.wall_time_s * 1000.0,
            )
        )
    return records


def render_csv(records: Iterable[BenchRecord]) -> str:
    lines = [CSV_HEADER]
    lines.extend(r.csv_row() for r in records)
    return "\n".join(lines) + "\n"
