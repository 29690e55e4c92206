import random

import pytest

from conftest import random_graph
from mpx.digraph import (
    cartesian_product, complete, dandelion, linear_alternating, linear_coherent, make_digraph,
    polygon_coherent, tournament,
)
from mpx.dynamics import (
    all_regions, connected_components, decompose, intersection_components, is_dynamical_region,
    is_minimal_region, is_minimal_region_bruteforce, join_euler_check, module_of_edge,
    region_view, stable_module_is_matching, vertex_stability,
)


def ladder():
    """Two rows t0..t5 (0..5) and b0..b5 (6..11) joined by rungs."""
    t = lambda i: i
    b = lambda i: 6 + i
    edges = [(t(0), t(1)), (t(2), t(1)), (t(4), t(3)), (t(5), t(4)), (b(0), b(1)), (b(2), b(1)),
             (b(2), b(3)), (b(3), b(4)), (b(5), b(4)), (t(0), b(0)), (t(2), b(2)), (t(3), b(3)),
             (b(4), t(4)), (t(5), b(5))]
    return make_digraph(12, edges)


def test_ladder_regions():
    g = ladder()
    left = [g.edge_index(*e) for e in [(0, 1), (2, 1), (0, 6), (2, 8)]]
    assert is_dynamical_region(g, left)
    assert is_minimal_region(g, left) and is_minimal_region_bruteforce(g, left)
    bad = is_dynamical_region(g, [g.edge_index(4, 3)])
    assert not bad and bad.reason.startswith("(b)")
    cyc = bad.witness
    assert cyc[0] == cyc[-1] and (4, 3) in zip(cyc, cyc[1:])


def test_clause_a_failure():
    # one in-edge of a dandelion: the centre stays unstable in the complement
    g = dandelion(2, 2)
    res = is_dynamical_region(g, [0])
    assert not res and res.reason.startswith("(a)")


def test_region_errors():
    g = linear_coherent(3)
    with pytest.raises(ValueError):
        is_dynamical_region(g, [])
    with pytest.raises(ValueError):
        is_dynamical_region(g, [0, 2])
    with pytest.raises(IndexError):
        is_dynamical_region(g, [7])


def test_stability_and_view():
    g = linear_coherent(2)
    assert vertex_stability(g, 0) == "stable" and vertex_stability(g, 1) == "unstable"
    v = region_view(g, [0])
    assert v.boundary == {1} and v.size == 1


def test_known_decompositions():
    assert decompose(linear_coherent(3)) == [frozenset({0}), frozenset({1}), frozenset({2})]
    assert len(decompose(dandelion(2, 2))) == 2
    assert len(decompose(tournament(5))) == 1
    assert len(decompose(polygon_coherent(3))) == 1
    sizes = [len(m) for m in decompose(cartesian_product(linear_coherent(3), linear_coherent(1)))]
    assert sizes == [2, 3, 3, 2]


def test_closure_is_least_region():
    rng = random.Random(1)
    for _ in range(150):
        g = random_graph(rng, max_vertices=5, max_edges=8)
        regions = all_regions(g)
        for e in range(g.num_edges):
            containing = [r for r in regions if e in r]
            least = min(containing, key=len)
            assert all(least <= r for r in containing)
            assert least == module_of_edge(g, e)


def test_modules_pairwise_disjoint_regions():
    rng = random.Random(2)
    for _ in range(100):
        g = random_graph(rng)
        mods = decompose(g)
        assert sorted(i for m in mods for i in m) == list(range(g.num_edges))
        assert all(is_dynamical_region(g, m) for m in mods)


def test_join_check_random():
    rng = random.Random(3)
    for _ in range(80):
        assert join_euler_check(random_graph(rng))


def test_intersection_of_regions_is_union_of_regions():
    rng = random.Random(4)
    checked = 0
    for _ in range(60):
        g = random_graph(rng, max_vertices=5, max_edges=7)
        regions = all_regions(g)
        for a in regions[:6]:
            for b in regions[:6]:
                for comp in intersection_components(g, a, b):
                    assert is_dynamical_region(g, comp)
                    checked += 1
    assert checked > 0


def test_components():
    g = linear_coherent(3)
    assert connected_components(g, [0, 2]) == [frozenset({0}), frozenset({2})]


def test_stable_module_matching():
    g = linear_alternating(4)
    assert stable_module_is_matching(g, range(4)) is True
    assert stable_module_is_matching(complete(3), range(6)) is None
