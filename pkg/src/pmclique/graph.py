"""Undirected graphs on vertex sets {1..n} with bitmask adjacency.

A vertex set is represented as a plain Python int: vertex v corresponds to
bit (v - 1).  This keeps set algebra (union, intersection, difference,
subset tests) down to single integer ops and lets the numeric kernels work
on the same representation.  Capacity is capped at 62 vertices so every
mask fits in a signed 64-bit integer.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

MAX_VERTICES = 62


class GraphFormatError(ValueError):
    """Raised for malformed graph files or invalid graph construction."""


# ---------------------------------------------------------------------------
# vertex-set helpers
# ---------------------------------------------------------------------------

def bit(v: int) -> int:
    """Mask containing only vertex v."""
    return 1 << (v - 1)


def vset(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def members(mask: int) -> tuple:
    """Vertices of a mask in ascending order."""
    out = []
    while mask:
        lsb = mask & -mask
        out.append(lsb.bit_length())
        mask ^= lsb
    return tuple(out)


def set_size(mask: int) -> int:
    return mask.bit_count()


def format_set(mask: int) -> str:
    return " ".join(str(v) for v in members(mask))


def parse_set(text: str) -> int:
    """Parse a vertex set from '1,2,3' or '1 2 3' style input."""
    tokens = [t for t in re.split(r"[\s,]+", text.strip()) if t]
    if not tokens:
        raise GraphFormatError("empty vertex set")
    m = 0
    for t in tokens:
        try:
            v = int(t)
        except ValueError:
            raise GraphFormatError(f"bad vertex {t!r}") from None
        if v < 1:
            raise GraphFormatError(f"vertices are 1-indexed, got {v}")
        m |= bit(v)
    return m


def identity_ordering(n: int) -> tuple:
    return tuple(range(1, n + 1))


def seeded_ordering(n: int, seed: int) -> tuple:
    import random

    order = list(range(1, n + 1))
    random.Random(seed).shuffle(order)
    return tuple(order)


def _check_ordering(n: int, ordering: Sequence[int]) -> tuple:
    order = tuple(int(v) for v in ordering)
    if sorted(order) != list(range(1, n + 1)):
        raise GraphFormatError(
            f"ordering must be a permutation of 1..{n}, got {order}"
        )
    return order


# ---------------------------------------------------------------------------
# components
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComponentReport:
    """Connected components of G - S together with fullness flags.

    A component C is *full* when N(C) equals S exactly (every vertex of S
    has a neighbor inside C).  With S empty, every component is trivially
    full.  Components are listed in ascending order of their smallest
    vertex.
    """

    separator: int
    components: tuple
    full: tuple

    def full_components(self) -> tuple:
        return tuple(c for c, f in zip(self.components, self.full) if f)


class Graph:
    """Immutable undirected graph view with an attached vertex ordering.

    ``vertex_mask`` selects which vertices of the underlying adjacency are
    part of this view; ``prefix(i)`` returns the subgraph induced by the
    first i vertices of the ordering.  Adjacency queries are always
    restricted to the view.
    """

    __slots__ = ("n", "_adj", "ordering", "vertex_mask", "_adj_arr")

    def __init__(self, n, adj, ordering, vertex_mask, adj_arr):
        self.n = n
        self._adj = adj
        self.ordering = ordering
        self.vertex_mask = vertex_mask
        self._adj_arr = adj_arr

    # -- construction --------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple], ordering=None) -> "Graph":
        if n < 1:
            raise GraphFormatError(f"graph needs at least one vertex, got n={n}")
        if n > MAX_VERTICES:
            raise GraphFormatError(
                f"n={n} exceeds the {MAX_VERTICES}-vertex capacity of this build"
            )
        adj = [0] * (n + 1)
        seen = set()
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"edge ({u},{v}) out of range 1..{n}")
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphFormatError(f"duplicate edge ({u},{v})")
            seen.add(key)
            adj[u] |= 1 << (v - 1)
            adj[v] |= 1 << (u - 1)
        order = identity_ordering(n) if ordering is None else _check_ordering(n, ordering)
        adj_arr = np.array(adj, dtype=np.int64)
        return cls(n, tuple(adj), order, (1 << n) - 1, adj_arr)

    def with_ordering(self, ordering) -> "Graph":
        order = _check_ordering(self.n, ordering)
        return Graph(self.n, self._adj, order, (1 << self.n) - 1, self._adj_arr)

    # -- basic queries ---------------------------------------------------

    @property
    def level(self) -> int:
        """Number of vertices in this view."""
        return self.vertex_mask.bit_count()

    def vertices(self) -> tuple:
        return members(self.vertex_mask)

    def adj(self, v: int) -> int:
        """Neighbor mask of v within this view."""
        if not (1 <= v <= self.n) or not (self.vertex_mask >> (v - 1)) & 1:
            raise GraphFormatError(f"vertex {v} not in graph view")
        return self._adj[v] & self.vertex_mask

    def edges(self) -> Iterator[tuple]:
        for u in self.vertices():
            m = self._adj[u] & self.vertex_mask & ~((1 << u) - 1)
            while m:
                lsb = m & -m
                yield (u, lsb.bit_length())
                m ^= lsb

    @property
    def edge_count(self) -> int:
        return sum(1 for _ in self.edges())

    def neighbors_of_set(self, x: int) -> int:
        """N(X): union of neighborhoods of X within the view, minus X."""
        acc = 0
        m = x & self.vertex_mask
        while m:
            lsb = m & -m
            acc |= self._adj[lsb.bit_length()]
            m ^= lsb
        return acc & self.vertex_mask & ~x

    # -- views -----------------------------------------------------------

    def prefix(self, i: int) -> "Graph":
        """Subgraph induced by the first i vertices of the ordering."""
        if not (1 <= i <= self.n):
            raise GraphFormatError(f"prefix index {i} out of range 1..{self.n}")
        mask = vset(self.ordering[:i])
        if mask & ~self.vertex_mask:
            raise GraphFormatError(
                "prefix extends beyond this view; take prefixes of the full graph"
            )
        return Graph(self.n, self._adj, self.ordering, mask, self._adj_arr)

    # -- misc --------------------------------------------------------------

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count}, level={self.level})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self._adj == other._adj
            and self.ordering == other.ordering
            and self.vertex_mask == other.vertex_mask
        )

    def __hash__(self):
        return hash((self.n, self._adj, self.ordering, self.vertex_mask))


def components_of(g: Graph, s: int) -> ComponentReport:
    """Connected components of g - s with fullness flags."""
    if s & ~g.vertex_mask:
        raise GraphFormatError("separator is not a subset of the graph view")
    region = g.vertex_mask & ~s
    comps = []
    full = []
    rest = region
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            m = frontier
            while m:
                lsb = m & -m
                nxt |= g._adj[lsb.bit_length()]
                m ^= lsb
            frontier = nxt & region & ~comp
            comp |= frontier
        comps.append(comp)
        full.append(g.neighbors_of_set(comp) == s)
        rest &= ~comp
    return ComponentReport(separator=s, components=tuple(comps), full=tuple(full))


# ---------------------------------------------------------------------------
# file formats
# ---------------------------------------------------------------------------

def _scan_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_edgelist(text: str, n: Optional[int]):
    rows = []
    for lineno, line in _scan_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(
                f"line {lineno}: expected two integers, got {line!r}"
            )
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(
                f"line {lineno}: expected two integers, got {line!r}"
            ) from None
        rows.append((lineno, a, b))

    edges = rows
    header = None
    # A leading "n m" header is recognized when the second value matches the
    # number of remaining data lines.
    if rows and rows[0][2] == len(rows) - 1:
        header = rows[0]
        edges = rows[1:]

    if header is not None:
        hn = header[1]
        if hn < 1:
            raise GraphFormatError(f"line {header[0]}: header n={hn} must be >= 1")
        if n is not None and n != hn:
            raise GraphFormatError(
                f"line {header[0]}: header says n={hn} but n={n} was requested"
            )
        n = hn

    if n is None:
        if not edges:
            raise GraphFormatError(
                "cannot infer vertex count from an empty edge list; "
                "add an 'n m' header or pass n explicitly"
            )
        n = max(max(a, b) for _, a, b in edges)

    out = []
    for lineno, a, b in edges:
        if not (1 <= a <= n and 1 <= b <= n):
            raise GraphFormatError(f"line {lineno}: vertex out of range 1..{n}")
        out.append((a, b))
    return n, out


def _parse_dimacs(text: str, n: Optional[int]):
    declared = None
    edges = []
    for lineno, line in _scan_lines(text):
        kind = line[0]
        if kind == "c":
            continue
        parts = line.split()
        if kind == "p":
            if declared is not None:
                raise GraphFormatError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphFormatError(
                    f"line {lineno}: expected 'p edge <n> <m>', got {line!r}"
                )
            try:
                declared = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise GraphFormatError(
                    f"line {lineno}: expected 'p edge <n> <m>', got {line!r}"
                ) from None
        elif kind == "e":
            if declared is None:
                raise GraphFormatError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>'")
            try:
                edges.append((lineno, int(parts[1]), int(parts[2])))
            except ValueError:
                raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>'") from None
        else:
            raise GraphFormatError(f"line {lineno}: unknown record {line!r}")
    if declared is None:
        raise GraphFormatError("missing 'p edge <n> <m>' problem line")
    dn, dm = declared
    if dn < 1:
        raise GraphFormatError(f"problem line declares n={dn}, must be >= 1")
    if n is not None and n != dn:
        raise GraphFormatError(f"problem line says n={dn} but n={n} was requested")
    if len(edges) != dm:
        raise GraphFormatError(
            f"problem line declares m={dm} but file has {len(edges)} edge lines"
        )
    out = []
    for lineno, a, b in edges:
        if not (1 <= a <= dn and 1 <= b <= dn):
            raise GraphFormatError(f"line {lineno}: vertex out of range 1..{dn}")
        out.append((a, b))
    return dn, out


def load_graph(text: str, fmt: str = "auto", n: Optional[int] = None) -> Graph:
    """Parse a graph from edge-list or DIMACS text.

    Edge lists are whitespace-separated "u v" pairs, 1-indexed, one per
    line, with '#' comments.  An optional first line "n m" is treated as a
    header exactly when m equals the number of edge lines that follow.
    DIMACS input uses 'c' comments, one 'p edge n m' line, and 'e u v'
    records.  ``n`` forces the vertex count for headerless edge lists
    (and must agree with any declared header).
    """
    if fmt == "auto":
        fmt = "dimacs" if re.search(r"^\s*p\s+edge\b", text, re.M) else "edgelist"
    if fmt == "edgelist":
        nn, edges = _parse_edgelist(text, n)
    elif fmt == "dimacs":
        nn, edges = _parse_dimacs(text, n)
    else:
        raise GraphFormatError(f"unknown format {fmt!r}")
    return Graph.from_edges(nn, edges)


def dump_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def dump_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.edge_count}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
