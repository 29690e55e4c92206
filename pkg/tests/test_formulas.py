import pytest

from mpx import formulas as F
from mpx.digraph import complete, complete_bipartite, reversed_tournament, tournament
from mpx.multipath import count_multipaths
from mpx.pathposet import chi_fvector


def test_number_tables():
    assert [F.bell(n) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]
    assert [F.stirling2(5, k) for k in range(6)] == [0, 1, 15, 25, 10, 1]
    assert [F.lah(4, k) for k in range(1, 5)] == [24, 36, 12, 1]


@pytest.mark.parametrize("n", range(1, 7))
def test_complete(n):
    assert F.chi_complete(n) == chi_fvector(complete(n))


@pytest.mark.parametrize("n", range(1, 9))
def test_tournament(n):
    assert F.chi_tournament(n) == chi_fvector(tournament(n))


@pytest.mark.parametrize("n", range(3, 9))
def test_reversed(n):
    assert F.chi_reversed_tournament(n) == chi_fvector(reversed_tournament(n))


@pytest.mark.parametrize("n,m", [(n, m) for n in range(1, 6) for m in range(1, 6)])
def test_bipartite(n, m):
    g = complete_bipartite(n, m)
    assert F.chi_bipartite(n, m) == chi_fvector(g)
    if n + m <= 7:
        assert F.bipartite_multipath_count(n, m) == count_multipaths(g)


def test_bipartite_recurrence():
    assert all(F.chi_bipartite_recurrence_check(n, m) for n in range(1, 9) for m in range(1, 9))


def test_values_are_ints():
    assert all(type(F.chi_complete(n)) is int for n in range(1, 8))


def test_evaluate():
    assert F.evaluate("bell", [5]) == 52
    with pytest.raises(ValueError):
        F.evaluate("bell", [1, 2])
    with pytest.raises(ValueError):
        F.evaluate("nope", [])
