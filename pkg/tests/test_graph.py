import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from cliquecycle.bounds import build_X
from cliquecycle.graph import (
    Graph,
    GraphError,
    build_graph,
    complete_graph,
    components,
    contract,
    cut_vertices,
    cycle_graph,
    edge_switch,
    from_graph6,
    has_adjacent_two_cut,
    is_connected,
    is_two_connected,
    is_vertex_cut,
    path_graph,
    to_graph6,
)
from cliquecycle.cliques import clique_profile
from cliquecycle.harness import enumerate_graphs, graph_from_counter

from oracles import brute_cut_vertices, brute_two_connected, components_without, edge_set, rand_graph


def assert_invariants(g: Graph) -> None:
    for i in range(g.n):
        assert not g.adj[i] >> i & 1
        assert g.adj[i] >> g.n == 0
        for j in range(g.n):
            assert (g.adj[i] >> j & 1) == (g.adj[j] >> i & 1)


@st.composite
def graphs(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [p for p, keep in zip(pairs, chosen) if keep])


# construction ----------------------------------------------------------------

def test_build_path():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert g.degrees() == (1, 2, 1)
    assert g.edges() == [(0, 1), (1, 2)]


def test_build_k4():
    g = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert g.degrees() == (3, 3, 3, 3)
    assert g == complete_graph(4)


def test_build_collapses_duplicates():
    g = build_graph(3, [(0, 1), (1, 0)])
    assert g.edges() == [(0, 1)]
    assert g.num_edges() == 1


@pytest.mark.parametrize("n, edges", [
    (3, [(0, 3)]),
    (3, [(-1, 2)]),
    (3, [(1, 1)]),
    (63, []),
    (0, []),
])
def test_build_rejects(n, edges):
    with pytest.raises(GraphError):
        build_graph(n, edges)


def test_graph_rejects_bad_rows():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))      # asymmetric
    with pytest.raises(GraphError):
        Graph(2, (0b01, 0b00))      # self-loop
    with pytest.raises(GraphError):
        Graph(2, (0b110, 0b001))    # out-of-range bit


# graph6 ---------------------------------------------------------------------

def test_graph6_decode_by_hand():
    # 'D' -> n = 5; '?' = 000000, '{' = 111100 over pairs
    # (0,1) (0,2) (1,2) (0,3) (1,3) (2,3) | (0,4) (1,4) (2,4) (3,4)
    g = from_graph6("D?{")
    assert g.n == 5
    assert g.edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]
    assert to_graph6(g) == "D?{"


def test_graph6_k1():
    assert to_graph6(build_graph(1, [])) == "@"
    assert from_graph6("@").n == 1


def test_graph6_header_and_whitespace():
    assert from_graph6(">>graph6<<D?{\n") == from_graph6("D?{")


@pytest.mark.parametrize("text", ["", "D?", "D?{?", "~?@", "D?\x10", ">>graph6<<"])
def test_graph6_malformed(text):
    with pytest.raises(GraphError):
        from_graph6(text)


def test_graph6_round_trip_random():
    rng = random.Random(2024)
    for _ in range(1000):
        n = rng.randint(1, 62)
        g = rand_graph(rng, n, rng.random())
        text = to_graph6(g)
        assert from_graph6(text) == g


def test_graph6_matches_networkx():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 62)
        g = rand_graph(rng, n, rng.random())
        ref = nx.Graph()
        ref.add_nodes_from(range(n))
        ref.add_edges_from(g.edges())
        assert to_graph6(g) == nx.to_graph6_bytes(ref, header=False).decode().strip()


def test_counter_order_is_graph6_column_order():
    # counter bit j(j-1)/2 + i is pair (i, j)
    assert graph_from_counter(4, 0b000100).edges() == [(1, 2)]
    assert graph_from_counter(4, 0b001000).edges() == [(0, 3)]
    assert graph_from_counter(4, 0b100000).edges() == [(2, 3)]


# connectivity ---------------------------------------------------------------

def test_is_connected_examples():
    assert is_connected(cycle_graph(5))
    assert not is_connected(build_graph(4, [(0, 1), (2, 3)]))
    assert is_connected(build_graph(1, []))


def test_bowtie():
    bowtie = build_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert cut_vertices(bowtie) == {2}
    assert not is_two_connected(bowtie)


def test_c4_and_k2():
    assert cut_vertices(cycle_graph(4)) == set()
    assert is_two_connected(cycle_graph(4))
    assert not is_two_connected(build_graph(2, [(0, 1)]))


def test_cut_vertices_match_brute_force_exhaustive():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            assert cut_vertices(g) == brute_cut_vertices(g)
            assert is_two_connected(g) == brute_two_connected(g)


def test_cut_vertices_match_brute_force_n7_sample():
    rng = random.Random(77)
    for _ in range(5000):
        g = graph_from_counter(7, rng.getrandbits(21))
        assert cut_vertices(g) == brute_cut_vertices(g)


def test_cut_vertices_larger_random():
    rng = random.Random(8)
    for _ in range(300):
        g = rand_graph(rng, rng.randint(8, 30), rng.choice([0.05, 0.1, 0.2, 0.4]))
        assert cut_vertices(g) == brute_cut_vertices(g)


def test_components_and_vertex_cut():
    g = build_graph(6, [(0, 1), (2, 3), (3, 4)])
    assert components(g) == [0b11, 0b11100, 0b100000]
    assert is_vertex_cut(path_graph(3), [1])
    assert not is_vertex_cut(complete_graph(4), [0, 1])


def test_adjacent_two_cut_examples():
    x, _ = build_X(9, 6)
    cut = has_adjacent_two_cut(x)
    assert cut == (0, 1)
    assert components_without(x, set(cut)) == 3
    assert has_adjacent_two_cut(complete_graph(4)) is None
    assert has_adjacent_two_cut(cycle_graph(5)) is None


def test_adjacent_two_cut_requires_two_connected():
    with pytest.raises(GraphError):
        has_adjacent_two_cut(path_graph(4))


# contraction ----------------------------------------------------------------

def test_contract_path():
    h, vmap = contract(path_graph(3), 0, 1)
    assert h.n == 2 and h.edges() == [(0, 1)]
    assert vmap.mapping == (0, 0, 1)


def test_contract_triangle_collapses_parallel_edge():
    h, _ = contract(cycle_graph(3), 0, 1)
    assert h.n == 2 and h.edges() == [(0, 1)]


def test_contract_k4():
    h, _ = contract(complete_graph(4), 1, 3)
    assert h == complete_graph(3)


def test_contract_keeps_u_identity():
    h, vmap = contract(cycle_graph(5), 2, 1)
    assert vmap.mapping == (0, 1, 1, 2, 3)
    assert sorted(h.degrees()) == [2, 2, 2, 2]
    assert h.has_edge(vmap[0], vmap[1]) and h.has_edge(vmap[2], vmap[3])


def test_contract_requires_edge():
    with pytest.raises(GraphError):
        contract(path_graph(3), 0, 2)


# edge switching -------------------------------------------------------------

def test_switch_moves_one_edge():
    # u = 0, v = 1, x = 2
    g = build_graph(3, [(0, 1), (1, 2)])
    assert edge_set(edge_switch(g, 1, 0)) == {frozenset((0, 1)), frozenset((0, 2))}


def test_switch_triangle_with_pendant():
    # u = 0, v = 1, x = 2, y = 3 pendant on v
    g = build_graph(4, [(0, 1), (0, 2), (1, 2), (1, 3)])
    h = edge_switch(g, 1, 0)
    assert edge_set(h) == {frozenset(p) for p in [(0, 1), (0, 2), (1, 2), (0, 3)]}
    assert clique_profile(h)[3] == 1 and clique_profile(h)[2] == 4


def test_switch_k4_fixed_point():
    k4 = complete_graph(4)
    assert edge_switch(k4, 2, 0) == k4


def test_switch_requires_edge():
    with pytest.raises(GraphError):
        edge_switch(path_graph(3), 2, 0)


# properties -----------------------------------------------------------------

@settings(max_examples=300, deadline=None)
@given(graphs(min_n=2), st.data())
def test_transformations_preserve_invariants(g, data):
    edges = g.edges()
    if not edges:
        return
    u, v = data.draw(st.sampled_from(edges))
    if data.draw(st.booleans()):
        u, v = v, u
    h = edge_switch(g, v, u)
    assert_invariants(h)
    assert h.n == g.n
    assert h.num_edges() == g.num_edges()
    for a, b in edge_set(g) ^ edge_set(h):
        assert v in (a, b) or u in (a, b)
    for e in edge_set(g):
        if v not in e:
            assert e in edge_set(h)
    assert h.degree(v) == bin(g.adj[v] & (g.adj[u] | (1 << u))).count("1")
    c, vmap = contract(g, u, v)
    assert_invariants(c)
    assert c.n == g.n - 1
    assert vmap[v] == vmap[u]


def _two_connected_edge_cases(seed, count):
    rng = random.Random(seed)
    found = 0
    while found < count:
        n = rng.randint(4, 12)
        g = rand_graph(rng, n, rng.choice([0.3, 0.45, 0.6]))
        if not brute_two_connected(g):
            continue
        found += 1
        yield g, rng.choice(g.edges())


def test_lemma_b_i_contrapositive_random():
    checked = 0
    for g, (u, v) in _two_connected_edge_cases(31, 1500):
        if g.adj[u] & g.adj[v] or is_vertex_cut(g, (u, v)):
            continue
        h, _ = contract(g, u, v)
        assert brute_two_connected(h)
        checked += 1
    assert checked > 100


def test_lemma_b_ii_contrapositive_random():
    checked = 0
    for g, (u, v) in _two_connected_edge_cases(32, 1500):
        if not g.adj[u] & g.adj[v] or is_vertex_cut(g, (u, v)):
            continue
        assert brute_two_connected(edge_switch(g, v, u))
        assert brute_two_connected(edge_switch(g, u, v))
        checked += 1
    assert checked > 100
