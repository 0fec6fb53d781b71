import pytest

import pmclique as pq
from helpers import all_labeled_graphs, pmc_family


C4 = pq.cycle_graph(4)


def test_is_pmc_on_c4():
    # the four triangles of the two possible chord choices
    for s in ([1, 2, 3], [1, 3, 4], [1, 2, 4], [2, 3, 4]):
        assert pq.is_pmc(C4, pq.vset(s))
    for s in ([1, 2], [1, 3], [1, 2, 3, 4], [1]):
        assert not pq.is_pmc(C4, pq.vset(s))


def test_is_pmc_validates_input():
    with pytest.raises(ValueError):
        pq.is_pmc(C4, 0)
    with pytest.raises(ValueError):
        pq.is_pmc(C4, pq.bit(5))  # outside the graph
    with pytest.raises(ValueError):
        pq.is_pmc(C4.prefix(2), pq.vset([1, 3]))  # outside the view


def test_is_pmc_easy_families():
    # a complete graph has exactly one PMC: everything
    k5 = pq.complete_graph(5)
    assert pq.is_pmc(k5, k5.vertex_mask)
    assert not pq.is_pmc(k5, pq.vset([1, 2, 3]))
    # a path's PMCs are its edges
    p4 = pq.path_graph(4)
    assert pmc_family(p4) == {pq.vset([1, 2]), pq.vset([2, 3]), pq.vset([3, 4])}


def test_is_minimal_separator():
    assert pq.is_minimal_separator(C4, pq.vset([1, 3]))
    assert pq.is_minimal_separator(C4, pq.vset([2, 4]))
    assert not pq.is_minimal_separator(C4, pq.bit(1))
    assert not pq.is_minimal_separator(C4, pq.vset([1, 2]))
    assert not pq.is_minimal_separator(C4, 0)
    # the empty set separates a disconnected graph
    g = pq.Graph.from_edges(4, [(1, 2), (3, 4)])
    assert pq.is_minimal_separator(g, 0)


def test_metrics_counts_is_pmc_calls():
    m = pq.Metrics()
    pq.is_pmc(C4, pq.vset([1, 2, 3]), metrics=m)
    pq.is_pmc(C4, pq.vset([1, 3, 4]), metrics=m)
    assert m.is_pmc_calls == 2


def test_extend_pmc_single_step():
    # {1,2} is the sole PMC of the edge 1-2; after vertex 3 arrives (path
    # 1-2-3) it is still one, while {1,2,3} is not: the step keeps k as is
    g3 = C4.prefix(3)
    assert pq.extend_pmc(g3, pq.vset([1, 2]), 3) == pq.vset([1, 2])
    # growth case: {1} is the PMC of K1, and on the edge 1-2 only {1,2} is
    g2 = C4.prefix(2)
    assert pq.extend_pmc(g2, pq.vset([1]), 2) == pq.vset([1, 2])
    # isolated arrival: on two isolated vertices {1} stays a PMC, {1,2} never
    assert pq.extend_pmc(pq.Graph.from_edges(2, []), pq.vset([1]), 2) == pq.vset([1])
    # a violated precondition surfaces as the inconsistency error: {1} is
    # not a PMC of C4 minus vertex 3, and neither candidate passes on C4
    with pytest.raises(pq.PmcExtensionError):
        pq.extend_pmc(C4, pq.vset([1]), 3)


def test_extend_pmc_input_validation():
    with pytest.raises(ValueError):
        pq.extend_pmc(C4, 0, 4)                     # empty k
    with pytest.raises(ValueError):
        pq.extend_pmc(C4.prefix(3), pq.vset([1, 2]), 4)  # v outside view
    with pytest.raises(ValueError):
        pq.extend_pmc(C4, pq.vset([1, 2, 4]), 4)    # v already in k


def test_extend_pmc_chain_from_prefix():
    g = C4  # ordering 1,2,3,4
    # {1,2} is a PMC of the 2-vertex prefix; it must extend to a PMC of C4
    full = pq.extend_pmc_chain(g, pq.vset([1, 2]), 2)
    assert pq.is_pmc(g, full)
    # extension only ever grows the set
    assert full & pq.vset([1, 2]) == pq.vset([1, 2])
    # chain input is checked against the named prefix
    with pytest.raises(ValueError):
        pq.extend_pmc_chain(g, pq.vset([1, 3]), 4)
    with pytest.raises(ValueError):
        pq.extend_pmc_chain(g, pq.vset([1, 2]), 9)


def test_extension_exclusivity_exhaustive():
    """For every graph on <=4 vertices, every level i and every PMC K of the
    (i-1)-prefix: exactly one of K, K+{v_i} is a PMC of the i-prefix (so the
    single step never raises), and chaining steps lands in the full family."""
    for g in all_labeled_graphs(4):
        fam = pmc_family(g)
        for i in range(2, g.n + 1):
            gi = g.prefix(i)
            vi = g.ordering[i - 1]
            for k in pmc_family(g.prefix(i - 1)):
                a = pq.is_pmc(gi, k)
                b = pq.is_pmc(gi, k | pq.bit(vi))
                assert a != b, (g, i, k)
                assert pq.extend_pmc(gi, k, vi) in (k, k | pq.bit(vi))
                assert pq.extend_pmc_chain(g, k, i - 1) in fam
