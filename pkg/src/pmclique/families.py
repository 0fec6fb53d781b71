"""Graph family generators used by the benchmarks and tests."""

from __future__ import annotations

import random

from .graph import Graph, GraphFormatError


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphFormatError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphFormatError("cycle needs n >= 3")
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return Graph.from_edges(n, edges)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphFormatError("complete graph needs n >= 1")
    return Graph.from_edges(n, [(u, v) for u in range(1, n) for v in range(u + 1, n + 1)])


def theta_graph(k: int) -> Graph:
    """Two hub vertices joined by k internally disjoint paths of length 3.

    Hubs are 1 and 2; path i runs 1 - (2i+1) - (2i+2) - 2.  The graph has
    2k + 2 vertices, 3k edges, and a separator/PMC population that grows
    like 2^k — the stress family for the space/enumeration trade-offs.
    """
    if k < 1:
        raise GraphFormatError("theta graph needs k >= 1")
    n = 2 * k + 2
    edges = []
    for i in range(1, k + 1):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(1, a), (a, b), (b, 2)]
    return Graph.from_edges(n, edges)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) with a deterministic seed."""
    if n < 1:
        raise GraphFormatError("random graph needs n >= 1")
    if not (0.0 <= p <= 1.0):
        raise GraphFormatError(f"edge probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(1, n)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def gen_family(family: str, **params) -> Graph:
    """Dispatch by family name; see the individual generators for params."""
    try:
        if family == "path":
            return path_graph(int(params["n"]))
        if family == "cycle":
            return cycle_graph(int(params["n"]))
        if family == "complete":
            return complete_graph(int(params["n"]))
        if family == "theta":
            return theta_graph(int(params["k"]))
        if family == "random":
            return random_graph(
                int(params["n"]), float(params["p"]), int(params.get("seed", 0))
            )
    except KeyError as e:
        raise GraphFormatError(f"family {family!r} is missing parameter {e}") from None
    raise GraphFormatError(
        f"unknown family {family!r}; pick from path, cycle, complete, theta, random"
    )
