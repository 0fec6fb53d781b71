"""Potential maximal cliques: enumeration, checks, oracles, benchmarks.

The package enumerates all potential maximal cliques (PMCs) of an
undirected graph — the vertex sets that appear as maximal cliques in some
minimal triangulation — with three interchangeable engines plus a
polynomial-space minimal-separator stream, and ships two brute-force
oracles for cross-validation.  Graphs are capped at 62 vertices; vertex
sets travel as int bitmasks (vertex v <-> bit v-1).
"""

from .graph import (
    MAX_VERTICES,
    ComponentReport,
    Graph,
    GraphFormatError,
    bit,
    components_of,
    dump_dimacs,
    dump_edgelist,
    format_set,
    identity_ordering,
    load_graph,
    members,
    parse_set,
    seeded_ordering,
    set_size,
    vset,
)
from .pmc import (PmcExtensionError, extend_pmc, extend_pmc_chain,
                  is_minimal_separator, is_pmc)
from .separators import (
    OracleBudgetError,
    SeparatorStream,
    separators,
    separators_list,
    separators_oracle,
)
from .enumerators import (
    GATE_NAMES,
    Metrics,
    PmcStream,
    collect_sorted,
    enumerate_bt,
    enumerate_dfs,
    enumerate_nondup,
    not_yet_seen,
)
from .oracle import (
    Triangulation,
    elimination_game,
    fill_is_minimal_exhaustive,
    is_chordal,
    maximal_cliques_chordal,
    minimize_triangulation,
    pmc_oracle_scan,
    pmc_oracle_triangulation,
)
from .families import (
    complete_graph,
    cycle_graph,
    gen_family,
    path_graph,
    random_graph,
    theta_graph,
)
from .bench import ALGOS, CSV_HEADER, BenchRecord, bench_graph, count_separators, render_csv, run_algo

__version__ = "0.1.0"

__all__ = [
    "MAX_VERTICES",
    "ComponentReport",
    "Graph",
    "GraphFormatError",
    "bit",
    "components_of",
    "dump_dimacs",
    "dump_edgelist",
    "format_set",
    "identity_ordering",
    "load_graph",
    "members",
    "parse_set",
    "seeded_ordering",
    "set_size",
    "vset",
    "PmcExtensionError",
    "extend_pmc",
    "extend_pmc_chain",
    "is_minimal_separator",
    "is_pmc",
    "OracleBudgetError",
    "SeparatorStream",
    "separators",
    "separators_list",
    "separators_oracle",
    "GATE_NAMES",
    "Metrics",
    "PmcStream",
    "collect_sorted",
    "enumerate_bt",
    "enumerate_dfs",
    "enumerate_nondup",
    "not_yet_seen",
    "Triangulation",
    "elimination_game",
    "fill_is_minimal_exhaustive",
    "is_chordal",
    "maximal_cliques_chordal",
    "minimize_triangulation",
    "pmc_oracle_scan",
    "pmc_oracle_triangulation",
    "complete_graph",
    "cycle_graph",
    "gen_family",
    "path_graph",
    "random_graph",
    "theta_graph",
    "ALGOS",
    "CSV_HEADER",
    "BenchRecord",
    "bench_graph",
    "count_separators",
    "render_csv",
    "run_algo",
    "__version__",
]
