import random
from itertools import combinations

import pytest

from cliquecycle.bounds import (
    ParameterError,
    binom,
    build_H,
    build_Q,
    build_X,
    check_inequality_1,
    check_inequality_3,
    check_proposition,
    conjecture_bound,
    decompose,
    f_s,
    g_s,
    inequality_1_sides,
    inequality_3_sides,
    kopylov_bound,
    predicted_profile,
    psi_s,
)
from cliquecycle.cliques import clique_profile
from cliquecycle.graph import build_graph, complete_graph, is_two_connected

from oracles import brute_cliques, components_without, rand_two_connected


# binomials and decompositions ---------------------------------------------------

def test_binom():
    assert binom(5, 2) == 10
    assert binom(3, 5) == 0
    assert binom(6, 0) == 1
    assert binom(-1, 2) == 0 and binom(4, -1) == 0


@pytest.mark.parametrize("n, k, mode, r, t", [
    (9, 6, "g", 2, 1),
    (7, 5, "psi", 2, 0),
    (5, 4, "g", 3, 0),
])
def test_decompose(n, k, mode, r, t):
    d = decompose(n, k, mode)
    assert (d.r, d.t) == (r, t)


def test_decompose_rejects():
    with pytest.raises(ParameterError):
        decompose(9, 3)
    with pytest.raises(ParameterError):
        decompose(9, 6, "h")


# closed forms -----------------------------------------------------------------

def test_f_s_examples():
    assert f_s(10, 8, 2, 2) == 23
    assert f_s(9, 6, 2, 3) == 9
    assert f_s(12, 7, 2, 6) == 0          # s > k - a and s - 1 > a
    assert f_s(7, 5, 2, 2) == 11          # C(3,2) + 4 C(2,1)


def test_f_s_rejects():
    with pytest.raises(ParameterError):
        f_s(8, 6, 3, 2)                   # 2a = k
    with pytest.raises(ParameterError):
        f_s(5, 6, 1, 2)                   # n < k
    with pytest.raises(ParameterError):
        f_s(8, 6, 1, 1)


def test_g_s_examples():
    assert g_s(5, 4, 3) == 3
    assert g_s(6, 5, 2) == 11
    assert g_s(9, 6, 3) == 21


def test_conjecture_bound_examples():
    assert conjecture_bound(6, 5, 2) == 13 >= g_s(6, 5, 2)
    assert conjecture_bound(9, 6, 3) == 21 == g_s(9, 6, 3)
    assert conjecture_bound(5, 4, 2) == 10


def test_psi_s_examples():
    assert psi_s(7, 5, 3) == 8
    assert psi_s(4, 9, 2) == 6
    assert psi_s(9, 6, 3) == 20           # n - 1 = 2*4 + 0, C(1,3) = 0


def test_kopylov_bound():
    assert kopylov_bound(9, 6) == max(f_s(9, 6, 2, 2), f_s(9, 6, 2, 2))
    assert kopylov_bound(10, 9) == max(f_s(10, 9, 2, 2), f_s(10, 9, 4, 2))
    with pytest.raises(ParameterError):
        kopylov_bound(4, 4)


def test_g_s_matches_conjecture_bound_above_two():
    for n in range(3, 40):
        for k in range(4, 30):
            for s in range(3, 12):
                assert g_s(n, k, s) == conjecture_bound(n, k, s)


def test_g2_never_exceeds_conjecture_bound():
    for n in range(3, 40):
        for k in range(4, 30):
            assert g_s(n, k, 2) <= conjecture_bound(n, k, 2)


def test_g2_versus_conjecture_bound_when_k_exceeds_n():
    # X_{n,k} is K_n once k > n; the conjecture form over-counts only at k = n + 1
    for n in range(3, 30):
        assert g_s(n, n + 1, 2) == binom(n, 2)
        assert conjecture_bound(n, n + 1, 2) == binom(n, 2) + 1
        for k in range(n + 2, n + 10):
            assert conjecture_bound(n, k, 2) == g_s(n, k, 2) == binom(n, 2)


def test_clique_identities_when_k_exceeds_n():
    for n in range(3, 20):
        for k in range(n + 1, n + 6):
            for s in range(2, n + 1):
                assert g_s(n, k, s) == binom(n, s)
                assert psi_s(n, k, s) == binom(n, s)
            x, _ = build_X(n, k)
            q, _ = build_Q(n, k)
            assert x == complete_graph(n) and q == complete_graph(n)


# constructions ----------------------------------------------------------------

def test_build_X_5_4_is_a_book():
    x, spec = build_X(5, 4)
    assert brute_cliques(x)[2] == 3
    assert all(x.has_edge(0, w) and x.has_edge(1, w) for w in range(2, 5))
    assert x.num_edges() == 7


def test_build_Q_7_5_two_k4_at_hub():
    q, spec = build_Q(7, 5)
    assert spec.hub == 0
    assert spec.parts["B"] == [[1, 2, 3], [4, 5, 6]]
    assert components_without(q, {0}) == 2
    assert q.num_edges() == 12


def test_build_H_10_8_2():
    h, spec = build_H(10, 8, 2)
    assert [len(spec.parts[p]) for p in "ABC"] == [2, 4, 4]
    assert h.num_edges() == 23 == f_s(10, 8, 2, 2)


def test_build_X_parts():
    x, spec = build_X(9, 6)
    assert spec.parts == {"A": [0, 1], "B": [[2, 3, 4], [5, 6, 7]], "C": [8]}
    assert spec.edge == (0, 1)
    assert is_two_connected(x)


def test_q_is_x_contracted():
    from cliquecycle.graph import contract
    for n in range(3, 12):
        for k in range(4, 10):
            x, _ = build_X(n + 1, k + 1)
            contracted, _ = contract(x, 0, 1)
            q, _ = build_Q(n, k)
            assert clique_profile(contracted) == clique_profile(q)


def test_sharpness_grid():
    for n in range(4, 15):
        for k in range(4, n + 1):
            x, sx = build_X(n, k)
            q, sq = build_Q(n, k)
            px, pq = clique_profile(x), clique_profile(q)
            assert all(px[s] == v for s, v in predicted_profile(sx).items())
            assert all(pq[s] == v for s, v in predicted_profile(sq).items())
            for a in range(1, (k + 1) // 2):
                if 2 * a >= k:
                    continue
                h, sh = build_H(n, k, a)
                ph = clique_profile(h)
                assert all(ph[s] == v for s, v in predicted_profile(sh).items())


def test_construction_rejects():
    with pytest.raises(ParameterError):
        build_X(2, 5)
    with pytest.raises(ParameterError):
        build_Q(5, 3)
    with pytest.raises(ParameterError):
        build_H(6, 6, 3)


# inequalities -----------------------------------------------------------------

def test_inequality_examples():
    assert inequality_1_sides(6, 3, 1, 1) == (0, 1)
    assert inequality_3_sides(7, 3, 3, 3) == (20, 24)
    for s in range(3, 8):
        for t2 in range(0, 4):
            assert check_inequality_3(7, s, 0, t2)


def test_inequality_ranges():
    with pytest.raises(ParameterError):
        inequality_1_sides(6, 3, 4, 0)
    with pytest.raises(ParameterError):
        inequality_3_sides(7, 2, 0, 0)
    with pytest.raises(ParameterError):
        inequality_3_sides(4, 3, 0, 0)


def test_inequalities_small_grid():
    for k in range(5, 16):
        for s in range(2, 10):
            for t1 in range(k - 2):
                for t2 in range(k - 2):
                    assert check_inequality_1(k, s, t1, t2)
            if s >= 3:
                for t1 in range(k - 3):
                    for t2 in range(k - 3):
                        assert check_inequality_3(k, s, t1, t2)


def test_proposition_examples():
    assert check_proposition(9, 6, 3)
    assert kopylov_bound(9, 6, 3) == 9 and psi_s(9, 6, 3) == 20
    assert check_proposition(7, 5, 2)
    assert kopylov_bound(7, 5, 2) == 11 and psi_s(7, 5, 2) == 12
    for k in range(5, 30):
        for s in range(2, 10):
            assert check_proposition(k, k, s)


def _glue_on_edge(g1, g2):
    """Identify vertices 0, 1 of g2 with vertices 0, 1 of g1 (both must hold edge 01)."""
    shift = g1.n - 2
    relabel = lambda x: x if x < 2 else x + shift
    edges = g1.edges() + [(relabel(x), relabel(y)) for x, y in g2.edges()]
    return build_graph(g1.n + g2.n - 2, edges)


def test_split_along_adjacent_cut_recombines():
    rng = random.Random(60)
    for _ in range(150):
        g1 = rand_two_connected(rng, rng.randint(3, 8), 0.55)
        g2 = rand_two_connected(rng, rng.randint(3, 8), 0.55)
        # move some edge onto 01 in each piece
        g1 = _relabel_edge_to_01(g1, rng.choice(g1.edges()))
        g2 = _relabel_edge_to_01(g2, rng.choice(g2.edges()))
        g = _glue_on_edge(g1, g2)
        assert is_two_connected(g)
        assert components_without(g, {0, 1}) >= 2
        p, p1, p2 = clique_profile(g), clique_profile(g1), clique_profile(g2)
        for s in range(3, g.n + 1):
            assert p[s] == p1[s] + p2[s]
        for k in range(5, 12):
            for s in range(3, 9):
                assert g_s(g1.n, k, s) + g_s(g2.n, k, s) <= g_s(g.n, k, s)


def _relabel_edge_to_01(g, edge):
    u, v = edge
    order = [u, v] + [x for x in range(g.n) if x not in (u, v)]
    pos = {old: new for new, old in enumerate(order)}
    return build_graph(g.n, [(pos[a], pos[b]) for a, b in g.edges()])


def test_brute_force_tiny_h():
    h, _ = build_H(9, 6, 2)
    tri = sum(1 for c in combinations(range(9), 3) if all(h.has_edge(a, b) for a, b in combinations(c, 2)))
    assert tri == 9
