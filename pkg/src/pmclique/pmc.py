"""Potential-maximal-clique test and the level-extension step.

A vertex set K is a potential maximal clique (PMC) of G when it induces a
maximal clique in some minimal triangulation of G.  That holds exactly when

  (a) no component of G - K sees every vertex of K, and
  (b) for every nonadjacent pair x, y in K some component of G - K is
      adjacent to both.

Both conditions are checked directly on the bitmask representation.
"""

from __future__ import annotations

import numpy as np

from . import _kernels as _k
from .graph import Graph, bit, format_set

# scratch counter block for unmetered calls
_SCRATCH = np.zeros(_k.N_COUNTERS, dtype=np.int64)


class PmcExtensionError(RuntimeError):
    """Extension step found neither K nor K + {v} to be a PMC.

    The theory guarantees exactly one of the two holds whenever K really is
    a PMC of the previous prefix, so seeing this means the input set (or
    the implementation) is wrong.
    """


def _counters(metrics):
    return _SCRATCH if metrics is None else metrics._counters


def is_pmc(g: Graph, k: int, metrics=None) -> bool:
    """Is k a potential maximal clique of g (restricted to g's view)?"""
    if k == 0:
        raise ValueError("the empty set is never a potential maximal clique; "
                         "pass a nonempty vertex set")
    if k & ~g.vertex_mask:
        raise ValueError(f"set {{{format_set(k)}}} is not inside the graph view")
    return bool(_k._is_pmc(g._adj_arr, g.vertex_mask, k, _counters(metrics)))


def is_minimal_separator(g: Graph, s: int) -> bool:
    """Is s a minimal separator of g?

    True exactly when at least two components of g - s see all of s.  The
    empty set qualifies on a disconnected graph.
    """
    if s & ~g.vertex_mask:
        raise ValueError(f"set {{{format_set(s)}}} is not inside the graph view")
    return bool(_k._is_min_sep(g._adj_arr, g.vertex_mask, s))


def extend_pmc(g_next: Graph, k: int, v: int, metrics=None) -> int:
    """One extension step: whichever of k and k + {v} is a PMC of g_next.

    The caller promises k is a PMC of the view one level down (g_next
    without v); exactly one of the two candidates then passes.  Both are
    tested anyway as a cheap self-check, and a neither/both outcome
    raises PmcExtensionError — it always means the promise was broken or
    something upstream is wrong, never a property of a valid input.
    """
    if k == 0:
        raise ValueError("k must be a nonempty vertex set")
    vb = bit(v)
    if not vb & g_next.vertex_mask:
        raise ValueError(f"vertex {v} is not inside the graph view")
    if k & ~g_next.vertex_mask:
        raise ValueError(f"set {{{format_set(k)}}} is not inside the graph view")
    if k & vb:
        raise ValueError(f"vertex {v} is already in {{{format_set(k)}}}")
    cnt = _counters(metrics)
    grown = bool(_k._is_pmc(g_next._adj_arr, g_next.vertex_mask, k | vb, cnt))
    kept = bool(_k._is_pmc(g_next._adj_arr, g_next.vertex_mask, k, cnt))
    if grown == kept:
        word = "both" if grown else "neither"
        raise PmcExtensionError(
            f"{word} of {{{format_set(k)}}} and {{{format_set(k | vb)}}} "
            f"pass the PMC test on this view; k cannot have been a PMC of "
            f"the previous level"
        )
    return k | vb if grown else k


def extend_pmc_chain(g: Graph, k: int, i: int, metrics=None) -> int:
    """Run extend_pmc from level i up through the full view of g.

    k must be a PMC of the i-th prefix (checked); the result is a PMC of
    g itself.  Convenience wrapper over the single-step operation.
    """
    levels = g.level
    if not (1 <= i <= levels):
        raise ValueError(f"level {i} out of range 1..{levels}")
    if not is_pmc(g.prefix(i), k, metrics):
        raise ValueError(
            f"{{{format_set(k)}}} is not a PMC of the level-{i} prefix"
        )
    for j in range(i + 1, levels + 1):
        k = extend_pmc(g.prefix(j), k, g.ordering[j - 1], metrics)
    return k
