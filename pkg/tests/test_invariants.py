import pytest

from turanlab.constructions import (
    extremal_graph,
    groetzsch_graph,
    k4free_5chromatic,
)
from turanlab.enumeration import enumerate_graphs
from turanlab.graph import (
    complete_graph,
    complete_multipartite,
    cycle_graph,
    empty_graph,
)
from turanlab.invariants import (
    CliquePresentError,
    SearchBudgetExceeded,
    aes_peel,
    chromatic_number,
    clique_number,
    find_clique,
    is_clique_free,
    is_r_colorable,
    max_clique,
)


def _is_clique(g, vs):
    return all(g.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])


def test_clique_number_examples():
    assert clique_number(complete_graph(5))[0] == 5
    assert clique_number(groetzsch_graph())[0] == 2
    assert clique_number(complete_multipartite([4, 3, 3]))[0] == 3


def test_clique_witness_is_clique():
    for g in (complete_graph(5), cycle_graph(7), groetzsch_graph(),
              k4free_5chromatic(), complete_multipartite([2, 3, 4])):
        w = max_clique(g)
        assert _is_clique(g, w)


def test_find_clique_early_exit():
    g = complete_multipartite([2, 2, 2])
    assert find_clique(g, 3) is not None
    assert find_clique(g, 4) is None
    assert is_clique_free(g, 4)
    assert not is_clique_free(g, 3)


def test_chromatic_examples():
    assert chromatic_number(cycle_graph(5))[0] == 3
    assert chromatic_number(groetzsch_graph())[0] == 4
    assert chromatic_number(k4free_5chromatic())[0] == 5


def test_chromatic_witness_proper():
    for g in (cycle_graph(7), groetzsch_graph(), complete_multipartite([3, 2, 1])):
        chi, col = chromatic_number(g)
        assert col.is_proper(g)
        assert col.palette == chi == max(col.colors) + 1


def test_r_colorable_examples():
    assert not is_r_colorable(cycle_graph(5), 2)[0]
    ok, col = is_r_colorable(complete_multipartite([3, 3, 3]), 3)
    assert ok and col.is_proper(complete_multipartite([3, 3, 3]))
    assert not is_r_colorable(extremal_graph(7, 2), 2)[0]
    assert is_r_colorable(empty_graph(5), 1)[0]
    assert not is_r_colorable(complete_graph(2), 1)[0]
    assert is_r_colorable(empty_graph(0), 0)[0]


def test_chi_at_least_omega_small_orders():
    # equality on complete multipartite instances, inequality in general
    for n in range(1, 9):
        for g in enumerate_graphs(n):
            assert chromatic_number(g)[0] >= clique_number(g)[0]
    for sizes in ([2, 2, 2], [3, 1], [4, 2, 1], [2, 2, 1, 1]):
        g = complete_multipartite(sizes)
        assert chromatic_number(g)[0] == clique_number(g)[0] == len(sizes)


def test_budget_abort_is_distinct():
    g = k4free_5chromatic()
    with pytest.raises(SearchBudgetExceeded) as err:
        chromatic_number(g, node_budget=1)
    assert err.value.lower is not None and err.value.upper is not None
    assert err.value.lower <= 5 <= err.value.upper


def test_aes_peel_balanced_bipartite():
    res = aes_peel(complete_multipartite([4, 4]), 2)
    assert res.removed == ()
    assert sorted(len(p) for p in res.parts) == [4, 4]


def test_aes_peel_c5():
    res = aes_peel(cycle_graph(5), 2)
    assert len(res.removed) == 1
    rest = [v for v in range(5) if v not in res.removed]
    assert is_r_colorable(cycle_graph(5).induced(rest), 2)[0]


def test_aes_peel_groetzsch():
    g = groetzsch_graph()
    res = aes_peel(g, 2)
    # frozen from the first run of the specified procedure (min degree,
    # lowest index on ties); every removal stayed within 2n/5
    assert res.removed == (5, 1, 7, 0, 4, 3)
    cur = g
    alive = list(range(g.n))
    for v in res.removed:
        i = alive.index(v)
        assert cur.degree(i) * 5 <= 2 * cur.n
        assert cur.degree(i) == min(cur.degrees())
        alive.pop(i)
        cur = cur.induced([u for u in range(cur.n) if u != i])
    ok, _ = is_r_colorable(cur, 2)
    assert ok
    # parts cover the remainder and are independent
    covered = sorted(v for p in res.parts for v in p)
    assert covered == sorted(alive)
    for p in res.parts:
        for i, a in enumerate(p):
            for b in p[i + 1:]:
                assert not g.has_edge(a, b)


def test_aes_peel_rejects_forbidden_clique():
    with pytest.raises(CliquePresentError) as err:
        aes_peel(complete_graph(4), 3)
    assert len(err.value.witness) == 4
