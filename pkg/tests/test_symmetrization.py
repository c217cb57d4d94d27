import pytest

from turanlab.enumeration import enumerate_graphs
from turanlab.graph import (
    Graph,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    path_graph,
    twin_classes,
)
from turanlab.invariants import (
    chromatic_number,
    clique_number,
    is_clique_free,
)
from turanlab.symmetrization import (
    SymmetrizationTrace,
    TraceStep,
    is_increasing,
    replay,
    switch_edge,
    zykov,
    zykov_reduce,
)


def test_zykov_twins_already():
    p3 = path_graph(3)
    assert zykov(p3, 0, 2) == p3


def test_zykov_adjacent_variant():
    z = zykov(complete_graph(2), 0, 1)
    assert z.n == 2 and z.edge_count == 0
    assert chromatic_number(z)[0] == 1


def test_zykov_c5():
    c5 = cycle_graph(5)
    z = zykov(c5, 0, 2)
    assert z.edge_count == 5
    assert chromatic_number(z)[0] == 2
    assert chromatic_number(c5.induced([1, 2, 3, 4]))[0] == 2


def test_zykov_rejects_same_vertex():
    with pytest.raises(ValueError):
        zykov(cycle_graph(5), 1, 1)


def test_deletion_identities_exhaustive_small():
    # omega/chi of the symmetrized graph equal those of the graph minus
    # the replaced vertex, for every graph on up to 5 vertices and every
    # ordered pair (adjacent pairs use the extended operation)
    for n in range(2, 6):
        for g in enumerate_graphs(n):
            for u in range(n):
                rest = [x for x in range(n) if x != u]
                sub = g.induced(rest)
                w_del = clique_number(sub)[0]
                chi_del = chromatic_number(sub)[0]
                for v in range(n):
                    if u == v:
                        continue
                    z = zykov(g, u, v)
                    assert clique_number(z)[0] == w_del
                    assert chromatic_number(z)[0] == chi_del


def test_is_increasing():
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert is_increasing(star, 1, 2)
    assert is_increasing(cycle_graph(5), 0, 2)
    with pytest.raises(ValueError):
        is_increasing(star, 1, 0)  # adjacent pair
    with pytest.raises(ValueError):
        is_increasing(star, 2, 2)


def test_increasing_never_loses_edges():
    for n in range(2, 6):
        for g in enumerate_graphs(n):
            for u in range(n):
                for v in range(n):
                    if u == v or g.has_edge(u, v):
                        continue
                    if g.degree(u) <= g.degree(v):
                        assert zykov(g, u, v).edge_count >= g.edge_count


def test_zykov_reduce_fixed_point():
    t63 = complete_multipartite([2, 2, 2])
    out, trace = zykov_reduce(t63)
    assert out == t63 and trace.steps == ()


def test_zykov_reduce_c5():
    out, trace = zykov_reduce(cycle_graph(5))
    assert out.edge_count >= 5
    blocks = twin_classes(out).blocks
    assert len(blocks) <= 2
    assert replay(cycle_graph(5), trace) == out


def test_zykov_reduce_postconditions_exhaustive():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            out, trace = zykov_reduce(g)
            assert out.edge_count >= g.edge_count
            w = clique_number(g)[0]
            blocks = twin_classes(out).blocks
            assert len(blocks) <= max(w, 1)
            for i in range(len(blocks)):
                for j in range(i + 1, len(blocks)):
                    assert out.has_edge(blocks[i][0], blocks[j][0])
            assert replay(g, trace) == out


def test_switch_preserves_count_and_cliquefreeness():
    base = (complete_multipartite([2, 2])
            .without_edge(0, 2).without_edge(1, 2)
            .add_vertex(0b0111))
    assert is_clique_free(base, 3)
    out = switch_edge(base, 4, 1, 2, 0)
    assert out.edge_count == base.edge_count
    assert out.degree(4) == base.degree(4) - 1
    assert is_clique_free(out, 3)


def test_switch_rejects_offending_configurations():
    from itertools import permutations

    g52 = cycle_graph(5)  # the order-5 extremal graph
    for quad in permutations(range(5), 4):
        with pytest.raises(ValueError):
            switch_edge(g52, *quad)


def test_replay_mixed_trace():
    base = (complete_multipartite([2, 2])
            .without_edge(0, 2).without_edge(1, 2)
            .add_vertex(0b0111))
    switched = switch_edge(base, 4, 1, 2, 0)
    final = zykov(switched, 3, 2)
    trace = SymmetrizationTrace((
        TraceStep("switch", (4, 1, 2), False, 0),
        TraceStep("zykov", (3, 2), False,
                  final.edge_count - switched.edge_count),
    ))
    assert replay(base, trace) == final
