import json

import networkx as nx
import pytest

from mpx.digraph import (
    all_digraphs, alternating_word, cartesian_product, caterpillar, complete, complete_bipartite,
    cone, dandelion, disjoint_union, family, from_json, incomplete_tournament, linear_alternating,
    linear_coherent, linear_from_word, make_digraph, polygon_coherent, polygon_from_word, reverse,
    reversed_tournament, suspension, tournament,
)


def test_make_digraph_sorts_and_dedupes():
    g = make_digraph(3, [(2, 1), (0, 1), (0, 1)])
    assert g.edges == ((0, 1), (2, 1))
    assert g.edge_index(2, 1) == 1 and g.has_edge(0, 1) and not g.has_edge(1, 0)


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 0)]])
def test_make_digraph_rejects(edges):
    with pytest.raises(ValueError):
        make_digraph(3, edges)


def test_json_round_trip():
    g = tournament(4)
    assert from_json(g.to_json()) == g
    with pytest.raises(ValueError):
        from_json(json.dumps([1, 2]))


def test_dot_export():
    dot = linear_coherent(2).to_dot()
    assert "0 -> 1;" in dot and dot.startswith("digraph")


def test_tournament_and_complete_sizes():
    for n in range(1, 7):
        t = tournament(n)
        assert t.num_edges == n * (n - 1) // 2
        assert nx.is_directed_acyclic_graph(t.to_networkx())
        assert complete(n).num_edges == n * (n - 1)
    assert tournament(4).num_edges == 6


def test_reversed_tournament_differs_by_one_edge():
    for n in range(3, 7):
        r, t = set(reversed_tournament(n).edges), set(tournament(n).edges)
        assert len(r - t) == 1 and len(t - r) == 1


def test_linear_and_polygon_words():
    assert linear_from_word("fb").edges == ((0, 1), (2, 1))
    assert polygon_from_word("fff").num_edges == 3
    assert polygon_coherent(4) == polygon_from_word("ffff")
    assert linear_alternating(4) == linear_from_word(alternating_word(4))
    with pytest.raises(ValueError):
        linear_from_word("fx")


def test_dandelion_degrees():
    g = dandelion(2, 3)
    assert g.in_degree(0) == 2 and g.out_degree(0) == 3 and g.num_edges == 5


def test_bipartite_and_incomplete_tournament():
    assert complete_bipartite(2, 3).num_edges == 6
    g = incomplete_tournament(3, [])
    assert g == tournament(4)
    # vertices 1 and 2 lose their out-edges (2 and 1 of them)
    assert incomplete_tournament(3, [1, 2]).num_edges == 6 - 3
    with pytest.raises(ValueError):
        incomplete_tournament(3, [2, 1])


def test_caterpillar_is_alternating_tree():
    g = caterpillar([1, 0, 2])
    assert g.num_edges == 2 + 3
    assert nx.is_tree(g.to_networkx().to_undirected())
    assert all(g.in_degree(v) == 0 or g.out_degree(v) == 0 for v in range(g.n))


def test_constructions():
    g = linear_coherent(1)
    c = cone(g)
    assert c.n == 3 and c.num_edges == 3
    s = suspension(g)
    assert s.n == 4 and s.num_edges == 1 + 4
    p = cartesian_product(linear_coherent(1), linear_coherent(1))
    assert p.n == 4 and p.num_edges == 4
    u = disjoint_union(g, g)
    assert u.n == 4 and u.num_edges == 2
    assert reverse(g).edges == ((1, 0),)


def test_all_digraphs_count():
    assert sum(1 for _ in all_digraphs(3)) == 2 ** 6


def test_family_dispatch():
    assert family("tournament", n=5) == tournament(5)
    with pytest.raises(ValueError):
        family("dandelion", n=1)
    with pytest.raises(ValueError):
        family("nope")
