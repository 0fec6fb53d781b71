"""Brute-force reference routes for cross-checking the enumerators.

Two independent ways to the same answer:

* `pmc_oracle_scan` runs the direct PMC test over every nonempty subset.
* `pmc_oracle_triangulation` never touches the PMC test: it plays the
  elimination game for every vertex ordering, strips the resulting fill
  down to a minimal triangulation, and collects maximal cliques of the
  chordal results.  The union over all orderings is exactly the PMC
  family, because every minimal triangulation arises from some ordering
  and a maximal clique of a minimal triangulation is a PMC by definition.

The triangulation route works on plain dict/set adjacency so that a bug in
the bitmask kernels cannot hide in both answers.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Dict, FrozenSet, Optional, Set, Tuple

from .graph import Graph, members, vset
from .pmc import is_pmc
from .separators import OracleBudgetError


class Triangulation:
    """A chordal supergraph of a base graph, with its fill and a PEO."""

    __slots__ = ("graph", "order", "fill", "peo")

    def __init__(self, graph: Graph, order: Tuple[int, ...],
                 fill: FrozenSet[Tuple[int, int]], peo: Tuple[int, ...]):
        self.graph = graph
        self.order = order
        self.fill = fill
        self.peo = peo

    def adjacency(self) -> Dict[int, Set[int]]:
        """Mutable dict-of-sets adjacency of the triangulated graph."""
        adjd = {v: set(members(self.graph.adj(v))) for v in self.graph.vertices()}
        for u, v in self.fill:
            adjd[u].add(v)
            adjd[v].add(u)
        return adjd

    def __repr__(self):
        return (f"Triangulation(order={self.order}, "
                f"fill={sorted(self.fill)})")


def _check_order(g: Graph, order) -> Tuple[int, ...]:
    order = tuple(order)
    if sorted(order) != list(g.vertices()):
        raise ValueError(
            f"order must be a permutation of the view vertices {g.vertices()}"
        )
    return order


def elimination_game(g: Graph, order) -> Triangulation:
    """Eliminate vertices in the given order, turning each one's remaining
    neighborhood into a clique; the added edges are the fill.  The result
    is always a triangulation of g with the order itself as a PEO."""
    order = _check_order(g, order)
    adjd = {v: set(members(g.adj(v))) for v in g.vertices()}
    remaining = set(order)
    fill = set()
    for v in order:
        remaining.discard(v)
        nb = sorted(adjd[v] & remaining)
        for i, u in enumerate(nb):
            for w in nb[i + 1:]:
                if w not in adjd[u]:
                    adjd[u].add(w)
                    adjd[w].add(u)
                    fill.add((u, w) if u < w else (w, u))
    return Triangulation(g, order, frozenset(fill), order)


def _mcs_peo(adjd: Dict[int, Set[int]]) -> Optional[Tuple[int, ...]]:
    """Perfect elimination order via maximum cardinality search, or None
    if the graph is not chordal."""
    verts = sorted(adjd)
    weight = {v: 0 for v in verts}
    visited = []
    unseen = set(verts)
    while unseen:
        v = max(sorted(unseen), key=lambda u: weight[u])
        visited.append(v)
        unseen.discard(v)
        for u in adjd[v]:
            if u in unseen:
                weight[u] += 1
    peo = tuple(reversed(visited))
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in adjd[v] if pos[u] > pos[v]]
        if not later:
            continue
        w = min(later, key=pos.__getitem__)
        for u in later:
            if u != w and u not in adjd[w]:
                return None
    return peo


def is_chordal(adjd: Dict[int, Set[int]]) -> bool:
    return _mcs_peo(adjd) is not None


def minimize_triangulation(t: Triangulation,
                           verify_exhaustive: bool = False) -> Triangulation:
    """Drop fill edges until none can go: repeatedly remove the smallest
    fill edge whose removal keeps the graph chordal.  The survivors form a
    minimal triangulation of the base graph.

    Single-edge checking suffices (chordal fills have the sandwich
    property); ``verify_exhaustive`` re-certifies the result against every
    nonempty fill subset — exponential, for distrustful small-graph runs.
    """
    adjd = t.adjacency()
    fill = set(t.fill)
    while True:
        removed = None
        for u, v in sorted(fill):
            adjd[u].discard(v)
            adjd[v].discard(u)
            if is_chordal(adjd):
                removed = (u, v)
                break
            adjd[u].add(v)
            adjd[v].add(u)
        if removed is None:
            break
        fill.discard(removed)
    peo = _mcs_peo(adjd)
    assert peo is not None  # chordality is preserved throughout
    result = Triangulation(t.graph, t.order, frozenset(fill), peo)
    if verify_exhaustive and not fill_is_minimal_exhaustive(result):
        raise AssertionError(
            "single-edge minimization left a removable fill subset"
        )
    return result


def maximal_cliques_chordal(adjd: Dict[int, Set[int]],
                            peo: Tuple[int, ...]) -> FrozenSet[int]:
    """Maximal cliques of a chordal graph from a PEO, as set masks: take
    each vertex with its later neighbors, keep the inclusion-maximal ones."""
    pos = {v: i for i, v in enumerate(peo)}
    cands = []
    for v in peo:
        c = vset([v] + [u for u in adjd[v] if pos[u] > pos[v]])
        cands.append(c)
    cands.sort(key=lambda m: -m.bit_count())
    kept = []
    for c in cands:
        if not any(c & ~k == 0 for k in kept):
            kept.append(c)
    return frozenset(kept)


def fill_is_minimal_exhaustive(t: Triangulation) -> bool:
    """Certify minimality the slow way: no nonempty subset of the fill can
    be removed without breaking chordality.  Exponential in the fill size —
    for tiny test graphs only."""
    fill = sorted(t.fill)
    base = t.adjacency()
    for r in range(1, len(fill) + 1):
        for drop in combinations(fill, r):
            adjd = {v: set(nb) for v, nb in base.items()}
            for u, v in drop:
                adjd[u].discard(v)
                adjd[v].discard(u)
            if is_chordal(adjd):
                return False
    return True


# ---------------------------------------------------------------------------
# the two oracles
# ---------------------------------------------------------------------------

def pmc_oracle_scan(g: Graph, max_n: int = 15, metrics=None) -> FrozenSet[int]:
    """Every nonempty subset through the PMC test."""
    verts = list(g.vertices())
    n = len(verts)
    if n > max_n:
        raise OracleBudgetError(
            f"subset-scan oracle is limited to {max_n} vertices, got {n}"
        )
    out = set()
    for r in range(1, n + 1):
        for sub in combinations(verts, r):
            k = vset(sub)
            if is_pmc(g, k, metrics):
                out.add(k)
    return frozenset(out)


def pmc_oracle_triangulation(g: Graph, max_n: int = 7,
                             verify: bool = False) -> FrozenSet[int]:
    """Maximal cliques of minimal triangulations over all vertex orders.

    With ``verify`` each collected clique is additionally pushed through
    the direct PMC test and a failure raises AssertionError — a
    consistency diagnostic between the two routes, off by default to keep
    the routes independent.
    """
    verts = list(g.vertices())
    n = len(verts)
    if n > max_n:
        raise OracleBudgetError(
            f"triangulation oracle is limited to {max_n} vertices "
            f"(factorial orderings), got {n}"
        )
    out = set()
    for perm in permutations(verts):
        mt = minimize_triangulation(elimination_game(g, perm))
        out |= maximal_cliques_chordal(mt.adjacency(), mt.peo)
    if verify:
        for k in out:
            assert is_pmc(g, k), f"triangulation route produced a non-PMC {k:b}"
    return frozenset(out)
