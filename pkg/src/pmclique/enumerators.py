"""Three enumerators for the potential maximal cliques of a graph.

All three walk the same ladder of prefix graphs G_1 ⊆ G_2 ⊆ ... ⊆ G_n
induced by the vertex ordering and share the same building blocks — the
PMC test, the minimal-separator stream, and the candidate form
S ∪ (T ∩ C) — but differ in what they remember:

* `enumerate_bt` keeps the full PMC family of the previous level and
  retests every candidate (exponential space, returns a set).
* `enumerate_nondup` adds the duplicate-suppression gates so every PMC is
  appended exactly once per level; it caches each level's separator list
  (still exponential space) and streams the final level.
* `enumerate_dfs` streams everything: a PMC is emitted the moment its
  originating level is processed, extended level by level to the top, and
  nothing proportional to the output is ever stored (polynomial space).
  The not-yet-seen check is answered by restarting the scan from scratch.

Duplicate-freedom of the gated enumerators does not rely on any global
"seen" set; the gates alone guarantee it.
"""

from __future__ import annotations

import time
from typing import Iterable, Iterator, Optional, Union

import numpy as np

from . import _kernels as _k
from .graph import Graph, bit, format_set, members, vset
from .pmc import PmcExtensionError

_GATES = {"i": 1, "ii": 2, "iii": 3, "iv": 4, "v": 5, "iv+v": 45}
GATE_NAMES = tuple(_GATES)


def _gate_code(disable_gate) -> int:
    if disable_gate is None:
        return 0
    if isinstance(disable_gate, str):
        try:
            return _GATES[disable_gate.lower()]
        except KeyError:
            raise ValueError(
                f"unknown gate {disable_gate!r}; expected one of {GATE_NAMES}"
            ) from None
    code = int(disable_gate)
    if code not in (1, 2, 3, 4, 5, 45):
        raise ValueError(f"gate code must be one of 1..5 or 45, got {code}")
    return code


class Metrics:
    """Work and memory counters shared by the enumerators.

    ``peak_retained_sets`` counts vertex sets held at once: stored PMC and
    separator lists, candidate buffers, and three per frame of every live
    separator-stream machine.  ``separator_yields`` accumulates across all
    streams opened during a run, including restarts.
    """

    __slots__ = ("_counters", "pmc_yields", "duplicates_detected", "wall_time_s")

    def __init__(self):
        self._counters = np.zeros(_k.N_COUNTERS, dtype=np.int64)
        self.pmc_yields = 0
        self.duplicates_detected = 0
        self.wall_time_s = 0.0

    @property
    def is_pmc_calls(self) -> int:
        return int(self._counters[_k.C_ISPMC])

    @property
    def separator_yields(self) -> int:
        return int(self._counters[_k.C_SEPYIELD])

    @property
    def retained_sets(self) -> int:
        return int(self._counters[_k.C_RETAIN])

    @property
    def peak_retained_sets(self) -> int:
        return int(self._counters[_k.C_PEAK])

    def retain(self, k: int = 1):
        c = self._counters
        c[_k.C_RETAIN] += k
        if c[_k.C_RETAIN] > c[_k.C_PEAK]:
            c[_k.C_PEAK] = c[_k.C_RETAIN]

    def release(self, k: int = 1):
        self._counters[_k.C_RETAIN] -= k

    def as_dict(self) -> dict:
        return {
            "is_pmc_calls": self.is_pmc_calls,
            "separator_yields": self.separator_yields,
            "pmc_yields": self.pmc_yields,
            "peak_retained_sets": self.peak_retained_sets,
            "duplicates_detected": self.duplicates_detected,
            "wall_time_s": self.wall_time_s,
        }

    def __repr__(self):
        inner = ", ".join(f"{k}={v}" for k, v in self.as_dict().items())
        return f"Metrics({inner})"


class PmcStream:
    """Iterator over enumerated PMCs with the metrics of the producing run."""

    def __init__(self, gen, algo: str, metrics: Metrics):
        self._gen = gen
        self.algo = algo
        self.metrics = metrics

    def __iter__(self):
        return self

    def __next__(self):
        return next(self._gen)

    def close(self):
        self._gen.close()


def _check_view(g: Graph) -> int:
    levels = g.level
    if vset(g.ordering[:levels]) != g.vertex_mask:
        raise ValueError(
            "enumeration needs the full graph or a prefix of its ordering"
        )
    return levels


def _collect_delta(adj, vmask: int, m: Metrics) -> np.ndarray:
    st = np.zeros(_k.ST_LEN, dtype=np.int64)
    st[0] = vmask
    out = []
    while True:
        s = _k.sep_advance(adj, vmask, st, m._counters)
        if s == _k.NO_MORE:
            break
        out.append(int(s))
    return np.array(out, dtype=np.int64)


def _prefix_masks(g: Graph, levels: int) -> list:
    vm = [0] * (levels + 1)
    acc = 0
    for i in range(1, levels + 1):
        acc |= bit(g.ordering[i - 1])
        vm[i] = acc
    return vm


# ---------------------------------------------------------------------------
# classic level-by-level enumerator
# ---------------------------------------------------------------------------

def enumerate_bt(g: Graph, metrics: Optional[Metrics] = None) -> set:
    """All PMCs of g as a set of masks (exponential-space baseline).

    At each level every candidate — previous PMCs with and without the new
    vertex, S ∪ {v_i}, and S ∪ (T ∩ C) — is retested with the PMC check;
    the set container absorbs duplicate hits.
    """
    m = metrics if metrics is not None else Metrics()
    t0 = time.perf_counter()
    levels = _check_view(g)
    adj = g._adj_arr
    vm = _prefix_masks(g, levels)
    cur = {bit(g.ordering[0])}
    m.retain(1)
    buf = np.empty(4096, dtype=np.int64)
    for i in range(2, levels + 1):
        vmi, vmp = vm[i], vm[i - 1]
        vib = bit(g.ordering[i - 1])
        delta = _collect_delta(adj, vmi, m)
        m.retain(len(delta))
        nxt = set()

        def add(d):
            if d not in nxt:
                nxt.add(d)
                m.retain(1)

        for k in cur:
            if _k._is_pmc(adj, vmi, k | vib, m._counters):
                add(k | vib)
            if _k._is_pmc(adj, vmi, k, m._counters):
                add(k)
        for idx in range(len(delta)):
            s = int(delta[idx])
            if _k._is_pmc(adj, vmi, s | vib, m._counters):
                add(s | vib)
        for idx in range(len(delta)):
            s = int(delta[idx])
            if s & vib:
                continue
            while True:
                snap = m._counters.copy()
                cnt = _k.bt_scan_s(adj, vmi, s, delta, buf, m._counters)
                if cnt >= 0:
                    break
                m._counters[:] = snap
                buf = np.empty(buf.shape[0] * 2, dtype=np.int64)
            for j in range(cnt):
                add(int(buf[j]))
        m.release(len(cur))
        m.release(len(delta))
        cur = nxt
    m.pmc_yields = len(cur)
    m.wall_time_s += time.perf_counter() - t0
    return cur


# ---------------------------------------------------------------------------
# duplicate-free level-by-level enumerator
# ---------------------------------------------------------------------------

def enumerate_nondup(
    g: Graph,
    metrics: Optional[Metrics] = None,
    disable_gate=None,
) -> PmcStream:
    """Stream the PMCs of g, each exactly once, in level append order.

    Exponential space: previous-level PMCs and the current separator list
    are kept.  ``disable_gate`` ("i".."v") switches off one suppression
    gate — a validation hook that reintroduces duplicates on purpose.
    """
    m = metrics if metrics is not None else Metrics()
    return PmcStream(_nondup_iter(g, m, _gate_code(disable_gate)), "nondup", m)


def _nondup_iter(g: Graph, m: Metrics, disable: int):
    t0 = time.perf_counter()
    held = 0  # this iterator's share of m.retained_sets, repaid on any exit

    def hold(k):
        nonlocal held
        held += k
        m.retain(k)

    def drop(k):
        nonlocal held
        held -= k
        m.release(k)

    try:
        levels = _check_view(g)
        adj = g._adj_arr
        vm = _prefix_masks(g, levels)
        cur = [bit(g.ordering[0])]
        hold(1)
        if levels == 1:
            m.pmc_yields += 1
            yield cur[0]
            drop(1)
            return
        buf = np.empty(4096, dtype=np.int64)
        for i in range(2, levels + 1):
            emit = i == levels
            vmi, vmp = vm[i], vm[i - 1]
            vib = bit(g.ordering[i - 1])
            delta = _collect_delta(adj, vmi, m)
            hold(len(delta))
            nxt = []
            for k in cur:
                if _k._is_pmc(adj, vmi, k | vib, m._counters):
                    nxt.append(k | vib)
                    hold(1)
                    if emit:
                        m.pmc_yields += 1
                        yield k | vib
                if _k._is_pmc(adj, vmi, k, m._counters):
                    nxt.append(k)
                    hold(1)
                    if emit:
                        m.pmc_yields += 1
                        yield k
            for s_idx in range(len(delta)):
                s = int(delta[s_idx])
                # clique branch: S ∪ {v_i} is new exactly when S was not
                # already a PMC one level down
                if _k._is_pmc(adj, vmi, s | vib, m._counters):
                    fresh = True
                    if disable != 2 and (s & ~vmp) == 0:
                        fresh = not _k._is_pmc(adj, vmp, s, m._counters)
                    if fresh:
                        nxt.append(s | vib)
                        hold(1)
                        if emit:
                            m.pmc_yields += 1
                            yield s | vib
                # combination branch
                if s & vib:
                    continue
                if _k._is_min_sep(adj, vmp, s):
                    continue
                while True:
                    snap = m._counters.copy()
                    cnt = _k.nondup_scan_s(
                        adj, vmi, vmp, vib, s_idx, delta, disable, buf, m._counters
                    )
                    if cnt >= 0:
                        break
                    m._counters[:] = snap
                    buf = np.empty(buf.shape[0] * 2, dtype=np.int64)
                for j in range(cnt):
                    d = int(buf[j])
                    nxt.append(d)
                    hold(1)
                    if emit:
                        m.pmc_yields += 1
                        yield d
            drop(len(cur))
            drop(len(delta))
            cur = nxt
        drop(len(cur))
    finally:
        if held:
            m.release(held)  # abandoned mid-stream: storage is gone with us
        m.wall_time_s += time.perf_counter() - t0


# ---------------------------------------------------------------------------
# depth-first polynomial-space enumerator
# ---------------------------------------------------------------------------

def enumerate_dfs(
    g: Graph,
    metrics: Optional[Metrics] = None,
    disable_gate=None,
    trace: bool = False,
) -> PmcStream:
    """Stream the PMCs of g in polynomial space, each exactly once.

    Every PMC is generated at the unique level where it first appears and
    extended upward through the remaining levels.  With ``trace`` each item
    is ``(origin_level, generated_set, final_pmc)`` instead of the bare
    final mask.
    """
    m = metrics if metrics is not None else Metrics()
    return PmcStream(_dfs_iter(g, m, _gate_code(disable_gate), trace), "dfs", m)


def _dfs_iter(g: Graph, m: Metrics, disable: int, trace: bool):
    t0 = time.perf_counter()
    try:
        levels = _check_view(g)
        adj = g._adj_arr
        vm = _prefix_masks(g, levels)
        buf = np.empty(4096, dtype=np.int64)

        def deliver(i, d):
            final = _ext(adj, g, vm, d, i, levels, m)
            m.pmc_yields += 1
            return (i, d, final) if trace else final

        yield deliver(1, bit(g.ordering[0]))
        for i in range(2, levels + 1):
            vmi, vmp = vm[i], vm[i - 1]
            vib = bit(g.ordering[i - 1])
            st = np.zeros(_k.ST_LEN, dtype=np.int64)
            st[0] = vmi
            try:
                while True:
                    s = _k.sep_advance(adj, vmi, st, m._counters)
                    if s == _k.NO_MORE:
                        break
                    s = int(s)
                    # clique branch (previous-level check first, then the test)
                    fresh = True
                    if disable != 2 and (s & ~vmp) == 0:
                        fresh = not _k._is_pmc(adj, vmp, s, m._counters)
                    if fresh and _k._is_pmc(adj, vmi, s | vib, m._counters):
                        m.retain(1)
                        try:
                            yield deliver(i, s | vib)
                        finally:
                            m.release(1)
                    # combination branch
                    if s & vib:
                        continue
                    if _k._is_min_sep(adj, vmp, s):
                        continue
                    while True:
                        snap = m._counters.copy()
                        cnt = _k.gen_scan_s(
                            adj, vmi, vmp, vib, s, disable, buf, m._counters
                        )
                        if cnt >= 0:
                            break
                        m._counters[:] = snap
                        buf = np.empty(buf.shape[0] * 2, dtype=np.int64)
                    m.retain(cnt)
                    try:
                        for j in range(cnt):
                            yield deliver(i, int(buf[j]))
                    finally:
                        m.release(cnt)
            finally:
                _k._release_machine(st, m._counters)
    finally:
        m.wall_time_s += time.perf_counter() - t0


def _ext(adj, g: Graph, vm, k: int, i: int, levels: int, m: Metrics) -> int:
    for j in range(i + 1, levels + 1):
        vjb = bit(g.ordering[j - 1])
        if _k._is_pmc(adj, vm[j], k | vjb, m._counters):
            k |= vjb
        elif _k._is_pmc(adj, vm[j], k, m._counters):
            pass
        else:
            raise PmcExtensionError(
                f"extension of {{{format_set(k)}}} failed at level {j}"
            )
    return k


# ---------------------------------------------------------------------------
# diagnostics
# ---------------------------------------------------------------------------

def not_yet_seen(g: Graph, i: int, d: int, s: int, t: int, c: int,
                 metrics: Optional[Metrics] = None) -> bool:
    """Would the scan at level i meet candidate d for the first time at the
    triple (s, t, c)?  Restarts the triple scan from scratch to decide.
    """
    levels = _check_view(g)
    if not (2 <= i <= levels):
        raise ValueError(f"level {i} out of range 2..{levels}")
    m = metrics if metrics is not None else Metrics()
    vm = _prefix_masks(g, levels)
    vib = bit(g.ordering[i - 1])
    if d != (s | (t & c)):
        raise ValueError("candidate must equal s | (t & c)")
    return bool(
        _k.nys(g._adj_arr, vm[i], vm[i - 1], vib, d, s, t, c, m._counters)
    )


def collect_sorted(stream: Iterable[int]) -> list:
    """Drain an enumerator into a canonical sorted list of masks."""
    return sorted(stream, key=members)
