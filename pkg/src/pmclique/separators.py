"""Minimal separator enumeration.

`separators` streams every minimal separator of a graph exactly once, in
ascending set order (smallest member first, ties broken by comparing the
sorted member tuples), in polynomial space.  Underneath sits a generation
machine that groups separators by an owner pair of nonadjacent vertices
(the smallest vertices of the first two full components) and walks a
binary-partition tree per pair; the stream finds each successor by
re-walking that machine, so ordering costs one extra machine pass per
yield but never a stored family.

`separators_oracle` is an independent brute-force check: it scans every
subset and applies the definition directly (separates some pair a, b and
no proper subset does).  It exists to validate the stream and is kept free
of the bitmask kernels on purpose.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from . import _kernels as _k
from .graph import Graph, members, vset


class OracleBudgetError(ValueError):
    """Brute-force oracle asked to handle a graph beyond its size budget."""


class SeparatorStream:
    """Single-use iterator over the minimal separators of a graph view.

    Yields vertex-set masks in ascending set order: smallest member first,
    then lexicographic on the sorted member tuple, so the empty separator
    (present exactly when the view is disconnected) leads.  Each step
    re-walks the generation machine to find the successor of the last
    yield, keeping retained space polynomial regardless of how many
    separators exist.  `close()` releases the retained-set accounting for
    an abandoned stream; exhausting it does so automatically.
    """

    def __init__(self, g: Graph, metrics=None):
        self._adj = g._adj_arr
        self._vmask = g.vertex_mask
        if metrics is None:
            self._counters = np.zeros(_k.N_COUNTERS, dtype=np.int64)
        else:
            self._counters = metrics._counters
        self._last = None  # member tuple of the most recent yield
        self._done = False
        c = self._counters
        c[_k.C_RETAIN] += 1  # the cursor
        if c[_k.C_RETAIN] > c[_k.C_PEAK]:
            c[_k.C_PEAK] = c[_k.C_RETAIN]

    def __iter__(self):
        return self

    def __next__(self):
        if self._done:
            raise StopIteration
        c = self._counters
        yields_before = int(c[_k.C_SEPYIELD])
        st = np.zeros(_k.ST_LEN, dtype=np.int64)
        st[0] = self._vmask
        best = best_key = None
        while True:
            s = _k.sep_advance(self._adj, self._vmask, st, c)
            if s == _k.NO_MORE:
                break
            key = tuple(members(int(s)))
            if self._last is not None and key <= self._last:
                continue
            if best is None or key < best_key:
                best, best_key = int(s), key
        # the machine pass counted every regeneration; the stream yields once
        c[_k.C_SEPYIELD] = yields_before + (0 if best is None else 1)
        if best is None:
            self._done = True
            c[_k.C_RETAIN] -= 1
            raise StopIteration
        self._last = best_key
        return best

    def close(self):
        if not self._done:
            self._done = True
            self._counters[_k.C_RETAIN] -= 1


def _machine_yields(g: Graph, counters=None):
    """One pass of the generation machine in its native order."""
    if counters is None:
        counters = np.zeros(_k.N_COUNTERS, dtype=np.int64)
    st = np.zeros(_k.ST_LEN, dtype=np.int64)
    st[0] = g.vertex_mask
    while True:
        s = _k.sep_advance(g._adj_arr, g.vertex_mask, st, counters)
        if s == _k.NO_MORE:
            return
        yield int(s)


def separators(g: Graph, metrics=None) -> SeparatorStream:
    """Stream the minimal separators of g exactly once each."""
    return SeparatorStream(g, metrics)


def separators_list(g: Graph, metrics=None) -> list:
    """Materialize the stream (order preserved)."""
    return list(separators(g, metrics))


def separators_oracle(g: Graph, max_n: int = 15) -> frozenset:
    """All minimal separators by definition, as a frozenset of masks.

    A set S is a minimal (a,b)-separator when a and b fall in different
    components of G - S and rejoin once any single vertex of S is put
    back; S is a minimal separator when it is a minimal (a,b)-separator
    for some pair.  Subset scan, so the graph must have at most max_n
    vertices.
    """
    verts = list(g.vertices())
    n = len(verts)
    if n > max_n:
        raise OracleBudgetError(
            f"separator oracle is limited to {max_n} vertices, got {n}"
        )
    adjd = {v: set(members(g.adj(v))) for v in verts}

    def labels(removed):
        lab = {}
        nxt = 0
        for v in verts:
            if v in removed or v in lab:
                continue
            nxt += 1
            lab[v] = nxt
            stack = [v]
            while stack:
                u = stack.pop()
                for w in adjd[u]:
                    if w not in removed and w not in lab:
                        lab[w] = nxt
                        stack.append(w)
        return lab

    out = set()
    for r in range(0, max(0, n - 1)):
        for sub in combinations(verts, r):
            s = set(sub)
            lab = labels(s)
            if len(set(lab.values())) < 2:
                continue
            relabel = {x: labels(s - {x}) for x in sub}
            is_min = False
            outside = [v for v in verts if v not in s]
            for a, b in combinations(outside, 2):
                if lab[a] == lab[b]:
                    continue
                if all(relabel[x][a] == relabel[x][b] for x in sub):
                    is_min = True
                    break
            if is_min:
                out.add(vset(sub))
    return frozenset(out)
