"""Shared corpus builders for the test suite."""

from itertools import combinations

import pmclique as pq


def all_labeled_graphs(n):
    """Yield every labeled simple graph on vertices 1..n (2^C(n,2) of them)."""
    slots = list(combinations(range(1, n + 1), 2))
    for code in range(1 << len(slots)):
        edges = [e for i, e in enumerate(slots) if (code >> i) & 1]
        yield pq.Graph.from_edges(n, edges)


def random_corpus():
    """The 200 seeded random graphs used by the duplicate-freeness checks.

    n cycles through 6..9, p through 0.2/0.4/0.6, seed = 4200 + index, so the
    corpus is fully reproducible from this function alone.
    """
    out = []
    for t in range(200):
        out.append(pq.random_graph(6 + t % 4, (0.2, 0.4, 0.6)[t % 3], seed=4200 + t))
    return out


def pmc_family(g):
    """Reference PMC family via the classic enumerator (cheap, already
    cross-checked against both oracles elsewhere)."""
    return set(pq.enumerate_bt(g))
