from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minsep.families import melon
from minsep.graph import (
    GraphError,
    bfs_reachable,
    build_graph,
    connected_components,
    contract_edge,
    cycle_graph,
    graph_from_edge_mask,
    neighborhood,
    path_graph,
    remove_vertices,
)
from minsep.io import format_graph, parse_graph


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


def test_build_path():
    G = build_graph(3, [(0, 1), (1, 2)])
    assert G.degrees() == [1, 2, 1]
    assert G.edges() == [(0, 1), (1, 2)]


def test_build_edgeless():
    G = build_graph(2, [])
    assert G.degrees() == [0, 0]
    assert G.m == 0


def test_duplicate_edges_collapse():
    G = build_graph(4, [(0, 1), (1, 0)])
    assert G.m == 1


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
def test_build_rejects(edges):
    with pytest.raises(GraphError):
        build_graph(3, edges)


def test_neighborhood_examples():
    P = path_graph(3)
    assert neighborhood(P, {1}) == {0, 2}
    assert neighborhood(P, {0, 1}) == {2}
    with pytest.raises(GraphError):
        neighborhood(P, {3})


def test_neighborhood_melon_root():
    G = melon(2)
    a = G.vertex("a")
    expected = {G.vertex("v_1_1"), G.vertex("v_1_2")}
    assert neighborhood(G, {a}) == expected
    assert all(G.has_edge(a, v) for v in expected)


def test_remove_vertices_examples():
    H, mapping = remove_vertices(path_graph(3), {1})
    assert H.n == 2 and H.m == 0
    assert mapping == {0: 0, 2: 1}

    C = cycle_graph(4)
    H, mapping = remove_vertices(C, set())
    assert H == C and mapping == {v: v for v in range(4)}

    H, _ = remove_vertices(C, {0})
    assert H == path_graph(3)


def test_contract_examples():
    # a-u-x, contract a u
    H = contract_edge(path_graph(3), 0, 1)
    assert H.n == 2 and H.edges() == [(0, 1)]
    H = contract_edge(cycle_graph(3), 1, 2)
    assert H.n == 2 and H.edges() == [(0, 1)]
    H = contract_edge(cycle_graph(4), 0, 1)
    assert H == cycle_graph(3)
    with pytest.raises(GraphError):
        contract_edge(path_graph(3), 0, 2)


def test_contract_neighborhood_of_pair():
    G = build_graph(6, [(0, 1), (0, 2), (1, 3), (1, 4), (4, 5)])
    H = contract_edge(G, 0, 1)
    # u keeps id 0; ids above 1 shift down by one
    expected = {w - 1 for w in neighborhood(G, {0, 1})}
    assert H.neighbors(0) == expected


def test_components_examples():
    assert connected_components(build_graph(3, [])) == [{0}, {1}, {2}]
    assert connected_components(path_graph(3)) == [{0, 1, 2}]


def test_components_melon_against_bfs():
    G = melon(2)
    removed = {G.vertex("v_1_1"), G.vertex("v_2_2")}
    H, mapping = remove_vertices(G, removed)
    back = {new: old for old, new in mapping.items()}
    comps = [{back[v] for v in c} for c in connected_components(H)]
    oracle = set()
    for v in set(range(G.n)) - removed:
        oracle.add(bfs_reachable(G, v, removed))
    assert {frozenset(c) for c in comps} == oracle
    assert len(comps) == 2


@given(graphs(), st.data())
def test_neighborhood_disjoint(G, data):
    X = data.draw(st.sets(st.integers(0, max(G.n - 1, 0)))) if G.n else set()
    assert not neighborhood(G, X) & X


@given(graphs(), st.data())
def test_components_after_removal(G, data):
    X = data.draw(st.sets(st.integers(0, G.n - 1))) if G.n else set()
    H, _ = remove_vertices(G, X)
    comps = connected_components(H)
    assert set().union(*comps) == set(range(H.n))
    for c in comps:
        start = min(c)
        assert bfs_reachable(H, start) == c
    for c1, c2 in combinations(comps, 2):
        assert not any((u, v) in H.edges() or (v, u) in H.edges() for u in c1 for v in c2)


@given(graphs(max_n=9))
@settings(max_examples=60)
def test_contract_invariants(G):
    for u, v in G.edges()[:4]:
        H = contract_edge(G, u, v)
        assert H.n == G.n - 1
        H.check_invariants()


@given(graphs())
def test_text_round_trip(G):
    H = parse_graph(format_graph(G))
    assert H.adj == G.adj and H.n == G.n


def test_edge_mask_enumeration_covers_pairs():
    G = graph_from_edge_mask(4, 0b111111)
    assert G.m == 6
