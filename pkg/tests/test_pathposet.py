from hypothesis import given, settings

from mpx.digraph import complete, dandelion, linear_coherent, tournament
from mpx.pathposet import (
    build_path_poset, chi_fvector, chi_mobius, mobius_from_bottom, reduced_euler_characteristic,
)
from test_multipath import digraphs


def test_known_values():
    assert reduced_euler_characteristic(linear_coherent(3)) == 0
    assert reduced_euler_characteristic(complete(3)) == -1
    assert reduced_euler_characteristic(dandelion(3, 2)) == -2
    assert reduced_euler_characteristic(tournament(7)) == -9


def test_mobius_on_boolean_intervals():
    # every interval of the poset is boolean, so mu(0, S) = (-1)^|S|
    g = tournament(6)
    p = build_path_poset(g)
    for i, mask in enumerate(p._masks):
        assert mobius_from_bottom(p, i) == (-1) ** bin(mask).count("1")


def test_poset_order():
    p = build_path_poset(linear_coherent(2))
    bottom = p.index(())
    top = p.index((0, 1))
    assert p.leq(bottom, top) and not p.leq(top, bottom)
    assert len(p.below(top)) == 3  # strictly below


@settings(max_examples=150, deadline=None)
@given(digraphs())
def test_two_methods_agree(g):
    assert chi_mobius(g) == chi_fvector(g)
