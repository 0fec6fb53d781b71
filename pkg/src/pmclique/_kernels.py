"""Numeric kernels shared by the enumerators.

Everything here works on int64 bitmasks (vertex v <-> bit v-1) and a numpy
int64 adjacency array indexed by vertex number.  The minimal-separator
stream is a flat state machine (`sep_advance`) over a preallocated int64
state vector, so the same machine can be driven from Python through a thin
generator wrapper or consumed entirely inside other jitted kernels (the
Not_Yet_Seen replays and the per-separator generation scans).

Counters layout (int64 array of length 4):
  [0] is_pmc evaluations
  [1] separator yields across all opened streams
  [2] currently retained sets (stack frames count 3 apiece)
  [3] peak of [2]
"""

import numpy as np
from numba import njit

NO_MORE = -1

C_ISPMC = 0
C_SEPYIELD = 1
C_RETAIN = 2
C_PEAK = 3
N_COUNTERS = 4

# separator-stream state vector layout
_A_REM = 0   # untried first-pair vertices
_A_BIT = 1
_B_REM = 2   # untried partners for the current a
_B_BIT = 3
_DEPTH = 4
_C0 = 5      # component stack base
_O0 = 69     # excluded-vertex (OUT) stack base
_R0 = 133    # remaining-branch-vertex stack base
ST_LEN = 197


@njit(cache=True)
def _ctz(x):
    # index of the lowest set bit; x must be nonzero
    i = 0
    if x & 0xFFFFFFFF == 0:
        x >>= 32
        i += 32
    if x & 0xFFFF == 0:
        x >>= 16
        i += 16
    if x & 0xFF == 0:
        x >>= 8
        i += 8
    if x & 0xF == 0:
        x >>= 4
        i += 4
    if x & 0x3 == 0:
        x >>= 2
        i += 2
    if x & 0x1 == 0:
        i += 1
    return i


@njit(cache=True)
def _nbrs(adj, vmask, x):
    """N(X) within the view: neighbors of X minus X itself."""
    acc = 0
    m = x
    while m:
        lsb = m & -m
        acc |= adj[_ctz(lsb) + 1]
        m ^= lsb
    return acc & vmask & ~x


@njit(cache=True)
def _flood(adj, region, seed_bit):
    """Connected component of seed within region (seed must be in region)."""
    comp = seed_bit
    frontier = seed_bit
    while frontier:
        nxt = 0
        m = frontier
        while m:
            lsb = m & -m
            nxt |= adj[_ctz(lsb) + 1]
            m ^= lsb
        frontier = nxt & region & ~comp
        comp |= frontier
    return comp


@njit(cache=True)
def _full_components(adj, vmask, s, out):
    """Full components of (view minus s), ascending by smallest vertex."""
    region = vmask & ~s
    rest = region
    cnt = 0
    while rest:
        lsb = rest & -rest
        comp = _flood(adj, region, lsb)
        if _nbrs(adj, vmask, comp) == s:
            out[cnt] = comp
            cnt += 1
        rest &= ~comp
    return cnt


@njit(cache=True)
def _is_min_sep(adj, vmask, s):
    """True when at least two components of (view minus s) see all of s."""
    if s & ~vmask:
        return False
    region = vmask & ~s
    rest = region
    fulls = 0
    while rest:
        lsb = rest & -rest
        comp = _flood(adj, region, lsb)
        if _nbrs(adj, vmask, comp) == s:
            fulls += 1
            if fulls == 2:
                return True
        rest &= ~comp
    return False


@njit(cache=True)
def _is_pmc(adj, vmask, k, counters):
    """Maximal-clique-in-some-minimal-triangulation test.

    k qualifies iff no component of (view minus k) sees all of k and every
    nonadjacent pair inside k is covered by some component neighborhood.
    """
    counters[C_ISPMC] += 1
    if k == 0 or (k & ~vmask):
        return False
    region = vmask & ~k
    ncs = np.empty(64, np.int64)
    rest = region
    cnt = 0
    while rest:
        lsb = rest & -rest
        comp = _flood(adj, region, lsb)
        nc = _nbrs(adj, vmask, comp)
        if nc == k:
            return False
        ncs[cnt] = nc
        cnt += 1
        rest &= ~comp
    m = k
    while m:
        lsb = m & -m
        m ^= lsb
        v = _ctz(lsb) + 1
        cover = adj[v] & vmask
        for i in range(cnt):
            if ncs[i] & lsb:
                cover |= ncs[i]
        if k & ~cover & ~lsb:
            return False
    return True


# ---------------------------------------------------------------------------
# minimal-separator stream
# ---------------------------------------------------------------------------

@njit(cache=True)
def _is_canonical(adj, vmask, s, a_bit, b_bit):
    """Does (a, b) own s?  The owner pair is (smallest vertex of the first
    full component, smallest vertex of the second full component)."""
    region = vmask & ~s
    rest = region
    seen_first = False
    while rest:
        lsb = rest & -rest
        comp = _flood(adj, region, lsb)
        if _nbrs(adj, vmask, comp) == s:
            if not seen_first:
                if lsb != a_bit:
                    return False
                seen_first = True
            else:
                return lsb == b_bit
        rest &= ~comp
    return False


@njit(cache=True)
def sep_advance(adj, vmask, st, counters):
    """Produce the next minimal separator of the view, or NO_MORE.

    st is an int64 vector of length ST_LEN, zeroed except st[0] = vmask
    before the first call.  Separators stream grouped by owner pair (pairs
    ascending lexicographically), depth-first within a pair; each minimal
    separator of the view appears exactly once.  The empty set (mask 0) is
    yielded for disconnected views.
    """
    a_rem = st[_A_REM]
    a_bit = st[_A_BIT]
    b_rem = st[_B_REM]
    b_bit = st[_B_BIT]
    depth = st[_DEPTH]
    while True:
        if depth == 0:
            # move to the next nonadjacent pair (a, b), a < b
            if b_rem != 0:
                b_bit = b_rem & -b_rem
                b_rem ^= b_bit
            else:
                found_pair = False
                while a_rem != 0:
                    a_bit = a_rem & -a_rem
                    a_rem ^= a_bit
                    av = _ctz(a_bit) + 1
                    b_rem = vmask & ~(adj[av] | a_bit) & ~((a_bit << 1) - 1)
                    if b_rem != 0:
                        b_bit = b_rem & -b_rem
                        b_rem ^= b_bit
                        found_pair = True
                        break
                if not found_pair:
                    st[_A_REM] = 0
                    st[_B_REM] = 0
                    st[_DEPTH] = 0
                    return NO_MORE
            # root of this pair's tree: the smallest a-side component
            av = _ctz(a_bit) + 1
            bv = _ctz(b_bit) + 1
            d1 = _flood(adj, vmask & ~((adj[av] | a_bit) & vmask), b_bit)
            s1 = _nbrs(adj, vmask, d1)
            c1 = _flood(adj, vmask & ~s1, a_bit)
            st[_C0] = c1
            st[_O0] = 0
            st[_R0] = _nbrs(adj, vmask, c1) & ~(adj[bv] | b_bit)
            depth = 1
            counters[C_RETAIN] += 3
            if counters[C_RETAIN] > counters[C_PEAK]:
                counters[C_PEAK] = counters[C_RETAIN]
            if _is_canonical(adj, vmask, s1, a_bit, b_bit):
                st[_A_REM] = a_rem
                st[_A_BIT] = a_bit
                st[_B_REM] = b_rem
                st[_B_BIT] = b_bit
                st[_DEPTH] = depth
                counters[C_SEPYIELD] += 1
                return s1
            continue
        # grow the a-side component by one branch vertex
        idx = depth - 1
        rem = st[_R0 + idx]
        if rem == 0:
            depth -= 1
            counters[C_RETAIN] -= 3
            continue
        v_bit = rem & -rem
        st[_R0 + idx] = rem ^ v_bit
        child_out = st[_O0 + idx]
        st[_O0 + idx] = child_out | v_bit   # later siblings must avoid v
        x = st[_C0 + idx] | v_bit
        ncx = _nbrs(adj, vmask, x) | x
        if b_bit & ncx:
            continue
        d1 = _flood(adj, vmask & ~ncx, b_bit)
        s1 = _nbrs(adj, vmask, d1)
        c1 = _flood(adj, vmask & ~s1, a_bit)
        if c1 & child_out:
            continue
        bv = _ctz(b_bit) + 1
        st[_C0 + depth] = c1
        st[_O0 + depth] = child_out
        st[_R0 + depth] = _nbrs(adj, vmask, c1) & ~child_out & ~(adj[bv] | b_bit)
        depth += 1
        counters[C_RETAIN] += 3
        if counters[C_RETAIN] > counters[C_PEAK]:
            counters[C_PEAK] = counters[C_RETAIN]
        if _is_canonical(adj, vmask, s1, a_bit, b_bit):
            st[_A_REM] = a_rem
            st[_A_BIT] = a_bit
            st[_B_REM] = b_rem
            st[_B_BIT] = b_bit
            st[_DEPTH] = depth
            counters[C_SEPYIELD] += 1
            return s1


@njit(cache=True)
def _release_machine(st, counters):
    counters[C_RETAIN] -= 3 * st[_DEPTH]
    st[_DEPTH] = 0


# ---------------------------------------------------------------------------
# Not_Yet_Seen
# ---------------------------------------------------------------------------

@njit(cache=True)
def _nys_t_scan(adj, vmask, cmask, x, want_t, counters):
    """First separator t' with t' & cmask == x; 1 if it is want_t, 0 if an
    earlier one produces, -1 if none does."""
    tst = np.zeros(ST_LEN, np.int64)
    tst[_A_REM] = vmask
    while True:
        t2 = sep_advance(adj, vmask, tst, counters)
        if t2 == NO_MORE:
            return -1
        if (t2 & cmask) == x:
            _release_machine(tst, counters)
            if t2 == want_t:
                return 1
            return 0


@njit(cache=True)
def nys(adj, vmask, vmask_prev, vi_bit, d, s, t, c, counters):
    """Not_Yet_Seen(d): restart the (S, T, C) scan from the top and check
    that (s, t, c) is the first triple producing d.

    A triple produces d exactly when its separator is a subset of d, the
    leftover d-part lies inside one of its full components, and the second
    separator meets that component in exactly the leftover part; scanning
    separators in stream order therefore only needs, per candidate subset,
    one component split and one inner stream scan.
    """
    scomps = np.empty(64, np.int64)
    sst = np.zeros(ST_LEN, np.int64)
    sst[_A_REM] = vmask
    while True:
        s2 = sep_advance(adj, vmask, sst, counters)
        if s2 == NO_MORE:
            return True
        if s2 & ~d:
            continue
        if s2 & vi_bit:
            continue
        if _is_min_sep(adj, vmask_prev, s2):
            continue
        x = d & ~s2
        ncomp = _full_components(adj, vmask, s2, scomps)
        cmask = np.int64(0)
        hit = False
        for ci in range(ncomp):
            if (x & ~scomps[ci]) == 0:
                cmask = scomps[ci]
                hit = True
                break
        if not hit:
            continue
        r = _nys_t_scan(adj, vmask, cmask, x, t, counters)
        if r < 0:
            continue
        _release_machine(sst, counters)
        if r == 1:
            return s2 == s and cmask == c
        return False


@njit(cache=True)
def nys_cached(adj, vmask, vmask_prev, vi_bit, d, s_idx, t_idx, c, delta, counters):
    """Not_Yet_Seen over a materialized separator list (same stream order)."""
    scomps = np.empty(64, np.int64)
    for i2 in range(delta.shape[0]):
        s2 = delta[i2]
        if s2 & ~d:
            continue
        if s2 & vi_bit:
            continue
        if _is_min_sep(adj, vmask_prev, s2):
            continue
        x = d & ~s2
        ncomp = _full_components(adj, vmask, s2, scomps)
        cmask = np.int64(0)
        hit = False
        for ci in range(ncomp):
            if (x & ~scomps[ci]) == 0:
                cmask = scomps[ci]
                hit = True
                break
        if not hit:
            continue
        for j2 in range(delta.shape[0]):
            if (delta[j2] & cmask) == x:
                return i2 == s_idx and j2 == t_idx and cmask == c
        # no second separator completes d from s2; try the next candidate
    return True


# ---------------------------------------------------------------------------
# per-separator generation scans
# ---------------------------------------------------------------------------
# disable codes for the duplicate-suppression gates (validation hooks):
#   0 none, 1 = not-yet-seen, 3 = new-at-this-level, 4 = single-new-vertex,
#   5 = carried-vertex pair, 45 = both 4 and 5 at once; code 2 (the
#   clique-branch freshness test) is handled by callers.

@njit(cache=True)
def gen_scan_s(adj, vmask, vmask_prev, vi_bit, s, disable, out, counters):
    """Stream-driven scan for one separator s: the T x C loop of the
    depth-first generator, gates included.  Appends accepted sets to out and
    returns their count, or -1 when out is full (caller grows and reruns)."""
    comps = np.empty(64, np.int64)
    ncomp = _full_components(adj, vmask, s, comps)
    cnt = 0
    tst = np.zeros(ST_LEN, np.int64)
    tst[_A_REM] = vmask
    while True:
        t = sep_advance(adj, vmask, tst, counters)
        if t == NO_MORE:
            return cnt
        for ci in range(ncomp):
            c = comps[ci]
            tc = t & c
            d = s | tc
            if d == 0:
                continue
            if not _is_pmc(adj, vmask, d, counters):
                continue
            if disable != 1 and not nys(adj, vmask, vmask_prev, vi_bit, d, s, t, c, counters):
                continue
            if disable != 3 and (d & ~vmask_prev) == 0 and _is_pmc(adj, vmask_prev, d, counters):
                continue
            if disable != 4 and disable != 45 and tc == vi_bit:
                continue
            if disable != 5 and disable != 45 and (tc & vi_bit) != 0:
                dm = d & ~vi_bit
                if (dm & ~vmask_prev) == 0 and _is_pmc(adj, vmask_prev, dm, counters):
                    continue
                if _is_min_sep(adj, vmask, dm):
                    continue
            if cnt == out.shape[0]:
                _release_machine(tst, counters)
                return -1
            out[cnt] = d
            cnt += 1


@njit(cache=True)
def nondup_scan_s(adj, vmask, vmask_prev, vi_bit, s_idx, delta, disable, out, counters):
    """Cached-list variant of gen_scan_s for the level-by-level enumerator."""
    s = delta[s_idx]
    comps = np.empty(64, np.int64)
    ncomp = _full_components(adj, vmask, s, comps)
    cnt = 0
    for t_idx in range(delta.shape[0]):
        t = delta[t_idx]
        for ci in range(ncomp):
            c = comps[ci]
            tc = t & c
            d = s | tc
            if d == 0:
                continue
            if not _is_pmc(adj, vmask, d, counters):
                continue
            if disable != 1 and not nys_cached(
                adj, vmask, vmask_prev, vi_bit, d, s_idx, t_idx, c, delta, counters
            ):
                continue
            if disable != 3 and (d & ~vmask_prev) == 0 and _is_pmc(adj, vmask_prev, d, counters):
                continue
            if disable != 4 and disable != 45 and tc == vi_bit:
                continue
            if disable != 5 and disable != 45 and (tc & vi_bit) != 0:
                dm = d & ~vi_bit
                if (dm & ~vmask_prev) == 0 and _is_pmc(adj, vmask_prev, dm, counters):
                    continue
                if _is_min_sep(adj, vmask, dm):
                    continue
            if cnt == out.shape[0]:
                return -1
            out[cnt] = d
            cnt += 1
    return cnt


@njit(cache=True)
def bt_scan_s(adj, vmask, s, delta, out, counters):
    """Ungated T x C candidate scan for the classic enumerator: every
    is_pmc-passing s | (t & c) is appended (duplicates included)."""
    comps = np.empty(64, np.int64)
    ncomp = _full_components(adj, vmask, s, comps)
    cnt = 0
    for t_idx in range(delta.shape[0]):
        t = delta[t_idx]
        for ci in range(ncomp):
            c = comps[ci]
            d = s | (t & c)
            if d == 0:
                continue
            if not _is_pmc(adj, vmask, d, counters):
                continue
            if cnt == out.shape[0]:
                return -1
            out[cnt] = d
            cnt += 1
    return cnt


def warmup():
    """Force-compile every kernel on a toy graph (path 1-2-3)."""
    adj = np.array([0, 0b010, 0b101, 0b010], dtype=np.int64)
    counters = np.zeros(N_COUNTERS, dtype=np.int64)
    vmask = np.int64(0b111)
    prev = np.int64(0b011)
    vib = np.int64(0b100)
    st = np.zeros(ST_LEN, np.int64)
    st[_A_REM] = vmask
    seps = []
    while True:
        s = sep_advance(adj, vmask, st, counters)
        if s == NO_MORE:
            break
        seps.append(s)
    delta = np.array(seps, dtype=np.int64)
    out = np.empty(16, np.int64)
    _is_pmc(adj, vmask, np.int64(0b011), counters)
    _is_min_sep(adj, vmask, np.int64(0b010))
    nys(adj, vmask, prev, vib, np.int64(0b110), np.int64(0b010),
        np.int64(0b010), np.int64(0b100), counters)
    nys_cached(adj, vmask, prev, vib, np.int64(0b110), 0, 0, np.int64(0b100),
               delta, counters)
    gen_scan_s(adj, vmask, prev, vib, np.int64(0b010), 0, out, counters)
    nondup_scan_s(adj, vmask, prev, vib, 0, delta, 0, out, counters)
    bt_scan_s(adj, vmask, np.int64(0b010), delta, out, counters)
