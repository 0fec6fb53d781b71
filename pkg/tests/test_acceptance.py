"""Acceptance checks.

One test per criterion; each prints a single `criterion N: PASS/FAIL` line
(use the -rA report or -s to see the lines for passing tests).

Criterion 9 is expected to FAIL and does so deliberately: it demands that
each of the five duplicate-avoidance gates of the level-by-level enumerator
is individually load-bearing, but three of the five are provably inert —
see the notes inside test_criterion_9 for the arguments. The test asserts
what is actually true and then fails with an explanation rather than
pretending the unattainable claim holds.
"""

import random
import time

import pytest

import pmclique as pq
from helpers import all_labeled_graphs, random_corpus


def _verdict(num, problems, note):
    if problems:
        print(f"criterion {num}: FAIL — {problems[0]}" +
              (f" (+{len(problems) - 1} more)" if len(problems) > 1 else ""))
        pytest.fail(f"criterion {num}: " + "; ".join(problems[:5]))
    print(f"criterion {num}: PASS — {note}")


def test_criterion_1_square_reproduction():
    t0 = time.perf_counter()
    g = pq.cycle_graph(4)
    want_pmcs = {pq.vset(s) for s in ([1, 2, 3], [1, 3, 4], [1, 2, 4], [2, 3, 4])}
    want_seps = {pq.vset([1, 3]), pq.vset([2, 4])}
    problems = []
    for name, fam in (
        ("bt", pq.enumerate_bt(g)),
        ("nondup", set(pq.enumerate_nondup(g))),
        ("dfs", set(pq.enumerate_dfs(g))),
        ("scan-oracle", set(pq.pmc_oracle_scan(g))),
        ("triangulation-oracle", set(pq.pmc_oracle_triangulation(g))),
    ):
        if fam != want_pmcs:
            problems.append(f"{name} PMCs wrong: {sorted(map(pq.format_set, fam))}")
    if set(pq.separators_list(g)) != want_seps:
        problems.append("separator set wrong")
    elapsed = time.perf_counter() - t0
    if elapsed >= 1.0:
        problems.append(f"took {elapsed:.2f}s (budget 1s)")
    _verdict(1, problems, f"4 PMCs + 2 separators, 5 methods, {elapsed * 1000:.0f}ms")


def test_criterion_2_exhaustive_5_vertex_equivalence():
    t0 = time.perf_counter()
    problems = []
    checked = 0
    for g in all_labeled_graphs(5):
        ref = pq.enumerate_bt(g)
        if (set(pq.enumerate_nondup(g)) != ref
                or set(pq.enumerate_dfs(g)) != ref
                or set(pq.pmc_oracle_scan(g)) != ref
                or set(pq.pmc_oracle_triangulation(g)) != ref):
            problems.append(f"disagreement on edges {sorted(g.edges())}")
        checked += 1
    elapsed = time.perf_counter() - t0
    assert checked == 1024
    if elapsed >= 120:
        problems.append(f"took {elapsed:.1f}s (budget 120s)")
    _verdict(2, problems, f"1024 graphs, 5-way agreement, {elapsed:.1f}s")


def test_criterion_3_duplicate_free_streams():
    t0 = time.perf_counter()
    problems = []
    total = 0
    for g in random_corpus():
        ref = pq.enumerate_bt(g)
        for fn in (pq.enumerate_nondup, pq.enumerate_dfs):
            out = list(fn(g))  # post-hoc collection: the stream itself keeps
            total += len(out)  # no record of what it already emitted
            if len(out) != len(set(out)):
                problems.append(f"{fn.__name__} duplicated on seed graph")
            if set(out) != ref:
                problems.append(f"{fn.__name__} wrong family on seed graph")
    elapsed = time.perf_counter() - t0
    if elapsed >= 300:
        problems.append(f"took {elapsed:.1f}s (budget 300s)")
    _verdict(3, problems,
             f"200 graphs, {total} emissions, zero repeats, {elapsed:.1f}s")


def test_criterion_4_extension_exclusivity():
    problems = []
    pairs = 0
    for g in random_corpus():
        for i in range(2, g.n + 1):
            gi, gprev = g.prefix(i), g.prefix(i - 1)
            vi = g.ordering[i - 1]
            for k in pq.pmc_oracle_scan(gprev):
                a = pq.is_pmc(gi, k)
                b = pq.is_pmc(gi, k | pq.bit(vi))
                pairs += 1
                if a == b:
                    problems.append(
                        f"exclusivity broken at level {i} for {pq.format_set(k)}")
                try:
                    stepped = pq.extend_pmc(gi, k, vi)
                    full = pq.extend_pmc_chain(g, stepped, i)
                except pq.PmcExtensionError as e:
                    problems.append(f"extend_pmc raised: {e}")
                else:
                    if not pq.is_pmc(g, full):
                        problems.append("extension landed outside the family")
    _verdict(4, problems, f"{pairs} (K, level) pairs, exclusivity + extension hold")


def test_criterion_5_yield_freshness_and_persistence():
    problems = []
    corpus = random_corpus()
    yields = 0
    for g in corpus[:60]:
        for i, d, _final in pq.enumerate_dfs(g, trace=True):
            if i == 1:
                continue  # no previous level exists
            yields += 1
            gp = g.prefix(i - 1)
            if (d & ~gp.vertex_mask) == 0 and pq.is_pmc(gp, d):
                problems.append(
                    f"stale yield {pq.format_set(d)} at level {i}")
    rng = random.Random(99)
    triples = 0
    attempts = 0
    while triples < 50 and attempts < 5000:
        attempts += 1
        g = corpus[rng.randrange(len(corpus))]
        i = rng.randint(2, g.n - 1)
        gone = sorted(pq.enumerate_bt(g.prefix(i)) - pq.enumerate_bt(g.prefix(i + 1)))
        if not gone:
            continue
        k = gone[rng.randrange(len(gone))]
        triples += 1
        for j in range(i + 1, g.n + 1):
            if pq.is_pmc(g.prefix(j), k):
                problems.append(
                    f"{pq.format_set(k)} left the family at level {i} "
                    f"but returned at level {j}")
    if triples < 50:
        problems.append(f"only found {triples} vanishing-PMC triples")
    _verdict(5, problems,
             f"{yields} generator yields fresh; {triples} vanished PMCs stay gone")


def test_criterion_6_theta_space_scaling():
    t0 = time.perf_counter()
    problems = []
    rows = []
    for k in range(2, 11):
        g = pq.theta_graph(k)
        n = g.n
        md = pq.Metrics()
        pmcs = sum(1 for _ in pq.enumerate_dfs(g, metrics=md))
        mb = pq.Metrics()
        n_bt = len(pq.enumerate_bt(g, metrics=mb))
        if n_bt != pmcs:
            problems.append(f"k={k}: bt/dfs count mismatch")
        if md.peak_retained_sets > 8 * n ** 3:
            problems.append(
                f"k={k}: dfs peak {md.peak_retained_sets} > 8n^3 = {8 * n ** 3}")
        if pmcs < 2 ** k / n:
            problems.append(f"k={k}: only {pmcs} PMCs (< 2^{k}/{n})")
        if mb.peak_retained_sets < pmcs:
            problems.append(
                f"k={k}: bt peak {mb.peak_retained_sets} below family size {pmcs}")
        rows.append((k, n, pmcs, md.peak_retained_sets, mb.peak_retained_sets))
    elapsed = time.perf_counter() - t0
    if elapsed >= 600:
        problems.append(f"took {elapsed:.0f}s (budget 600s)")
    k10 = rows[-1]
    _verdict(6, problems,
             f"k=2..10: dfs peak stays cubic (k=10: {k10[3]} sets vs "
             f"{k10[2]} PMCs; bt peak {k10[4]}), {elapsed:.0f}s")


def test_criterion_7_ordering_independence():
    problems = []
    rng = random.Random(1234)
    for gi in range(20):
        g = pq.random_graph(rng.randint(7, 10), rng.choice([0.25, 0.4, 0.55]),
                            seed=50_000 + gi)
        baselines = None
        for seed in range(5):
            h = g.with_ordering(pq.seeded_ordering(g.n, seed=seed))
            outs = (
                sorted(pq.enumerate_bt(h)),
                sorted(set(pq.enumerate_nondup(h))),
                sorted(set(pq.enumerate_dfs(h))),
            )
            if baselines is None:
                baselines = outs
            elif outs != baselines:
                problems.append(f"graph {gi} ordering seed {seed} changed output")
        if baselines[0] != baselines[1] or baselines[1] != baselines[2]:
            problems.append(f"graph {gi}: algorithms disagree")
    _verdict(7, problems, "20 graphs x 5 orderings, identical sorted output")


def test_criterion_8_count_inequality():
    problems = []
    bench_set = (
        [(f"theta-{k}", pq.theta_graph(k)) for k in range(2, 7)]
        + [(f"cycle-{n}", pq.cycle_graph(n)) for n in range(4, 13)]
        + [(f"path-{n}", pq.path_graph(n)) for n in range(4, 13)]
        + [(f"complete-{n}", pq.complete_graph(n)) for n in range(3, 9)]
        + [(f"random-{i}", g) for i, g in enumerate(random_corpus()[:30])]
    )
    for name, g in bench_set:
        pmcs, _ = pq.run_algo(g, "dfs")
        seps = pq.count_separators(g)
        if pmcs < seps / g.n:
            problems.append(f"{name}: {pmcs} PMCs < {seps}/{g.n} separators")
    _verdict(8, problems, f"{len(bench_set)} benchmark graphs satisfy |PMC| >= |SEP|/n")


def test_criterion_9_gate_fault_injection():
    """Each duplicate-avoidance gate of the level-by-level enumerator,
    disabled alone, should break stream duplicate-freeness somewhere on the
    criterion-3 corpus. That holds for gates i (not-yet-seen) and iii
    (new-at-this-level) — but gates ii, iv and v are provably inert alone:

    * ii: a minimal separator S of G_i always keeps a full component that
      avoids v_i, and that component survives in G_{i-1}, so S is never a
      PMC of G_{i-1} and the gate's test is vacuously true.
    * iv: a candidate with T∩C = {v_i} has D\\{v_i} = S, still a minimal
      separator of G_i, so gate v's membership disjunct re-blocks it.
    * v: for T∩C strictly containing v_i (with S newly a separator at this
      level), the pair (u, s°) — u the extra T∩C vertex, s° a separator
      vertex its side cannot see once v_i is removed — is uncoverable, so
      the candidate already fails the PMC test and never reaches the gate.

    Disabling iv and v *together* does duplicate (they shadow each other's
    T∩C = {v_i} case), which we assert as supporting evidence. The criterion
    as stated is unattainable, so this test reports an honest FAIL.
    """
    corpus = random_corpus()
    dupes = {gate: 0 for gate in pq.GATE_NAMES}
    for g in corpus:
        ref = pq.enumerate_bt(g)
        for gate in pq.GATE_NAMES:
            for fn in (pq.enumerate_nondup, pq.enumerate_dfs):
                out = list(fn(g, disable_gate=gate))
                dupes[gate] += len(out) - len(set(out))
                assert set(out) == ref, "a gate changed the emitted family"
    # the two live gates really are load-bearing ...
    assert dupes["i"] > 0, "disabling gate i no longer duplicates"
    assert dupes["iii"] > 0, "disabling gate iii no longer duplicates"
    # ... the pair iv+v is jointly load-bearing ...
    assert dupes["iv+v"] > 0, "disabling gates iv and v together must duplicate"
    # ... and the other three singles are inert, exactly as the arguments say
    assert dupes["ii"] == dupes["iv"] == dupes["v"] == 0
    print("criterion 9: FAIL — gates i, iii load-bearing "
          f"({dupes['i']}/{dupes['iii']} duplicate emissions when disabled) "
          "but gates ii, iv, v are provably inert alone (0 duplicates; "
          f"iv+v disabled together: {dupes['iv+v']}), so 'each gate is "
          "load-bearing' is unattainable")
    pytest.fail(
        "criterion 9 cannot be satisfied as stated: gates ii, iv and v are "
        "individually redundant by the arguments in this test's docstring "
        "(empirically: zero duplicates across the corpus with any one of "
        "them disabled, while i and iii duplicate freely and the iv+v pair "
        "duplicates when disabled together). Honest red, not a regression."
    )
