from fractions import Fraction
from math import factorial

import pytest

from mpx import formulas as F
from mpx import series as S
from mpx.digraph import complete_bipartite, reversed_tournament, tournament
from mpx.multipath import count_multipaths
from mpx.pathposet import chi_fvector


def test_arithmetic():
    x = S.TruncatedSeries.var(0, 1, 5)
    inv = S.reciprocal(1 - x)
    assert inv.univariate() == [1] * 6
    assert (inv * (1 - x)).univariate() == [1, 0, 0, 0, 0, 0]
    e = S.exp(x)
    assert e.univariate() == [Fraction(1, factorial(k)) for k in range(6)]
    assert (S.exp(-x) * e).univariate()[1:] == [0] * 5
    assert ((1 + x) ** 2).univariate()[:3] == [1, 2, 1]
    with pytest.raises(ZeroDivisionError):
        S.reciprocal(x)
    with pytest.raises(ValueError):
        S.exp(1 + x)


def test_compose():
    x = S.TruncatedSeries.var(0, 1, 6)
    # exp(log-free check): exp composed with x equals exp(x)
    expo = S.exp(x)
    assert S.compose(expo, x) == expo


def test_complete_sign_relation():
    c = S.egf_complete(8)
    for n in range(1, 9):
        assert c[n] == (-1) ** (n - 1) * F.chi_complete(n)


def test_tournament_relation():
    t = S.egf_tournament(8)
    for n in range(1, 9):
        assert t[n] == chi_fvector(tournament(n))


def test_reversed_relation():
    r = S.egf_reversed(8)
    for n in range(1, 8):
        assert r[n] == -chi_fvector(reversed_tournament(n + 2))


def test_bipartite_tables():
    fb = S.gf_bipartite(7)
    fc = S.gf_bipartite_count(7)
    for (n, m), v in fb.items():
        assert v == -F.chi_bipartite(n, m)
        if n and m and n + m <= 6:
            assert v == -chi_fvector(complete_bipartite(n, m))
            assert fc[(n, m)] == count_multipaths(complete_bipartite(n, m))
    assert fc[(2, 2)] == 7


def test_column_recurrence():
    for m in range(7):
        assert S.column_series(10, m) == S.column_recurrence(10 - m, m)


def test_prodser():
    assert S.prodser_check([1, 2, 3], [4, 5, 6], 4)


def test_fixtures():
    off, vals = S.load_fixture_with_offset("A101851")
    assert off == 1 and vals[:4] == [1, 1, -2, -1]
    assert S.load_fixture("A000587")[:5] == [1, -1, 0, 1, 1]
    assert S.antidiagonals(S.gf_bipartite_count(6), 6) == S.load_fixture("A088699")[:21]


def test_fixture_by_path(tmp_path):
    p = tmp_path / "seq.txt"
    p.write_text("# offset: 2\n5\n\n-3\n")
    assert S.load_fixture_with_offset(str(p)) == (2, [5, -3])
