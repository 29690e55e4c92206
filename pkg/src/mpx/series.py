"""Exact truncated power series in one or two variables, and the generating functions built from them.

Coefficients are Fractions; a series in k variables keeps every monomial
of total degree at most ``order``. Exponent tuples index the coefficients,
so ``(i,)`` is x^i in one variable and ``(i, j)`` is x^i y^j in two.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from pathlib import Path
from typing import Mapping


class TruncatedSeries:
    def __init__(self, nvars: int, order: int, coeffs: Mapping[tuple[int, ...], object] | None = None):
        if nvars < 1 or order < 0:
            raise ValueError("need at least one variable and a non-negative order")
        self.nvars = nvars
        self.order = order
        self.coeffs: dict[tuple[int, ...], Fraction] = {}
        for k, v in (coeffs or {}).items():
            k = tuple(k)
            if len(k) != nvars:
                raise ValueError(f"exponent {k} does not have {nvars} entries")
            v = Fraction(v)
            if v and sum(k) <= order:
                self.coeffs[k] = v

    # constructors
    @classmethod
    def constant(cls, c, nvars: int, order: int) -> "TruncatedSeries":
        return cls(nvars, order, {(0,) * nvars: c})

    @classmethod
    def var(cls, i: int, nvars: int, order: int) -> "TruncatedSeries":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, order, {tuple(e): 1})

    def _same(self, other: "TruncatedSeries"):
        if (self.nvars, self.order) != (other.nvars, other.order):
            raise ValueError("series must share variable count and order")

    def _lift(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            self._same(other)
            return other
        return TruncatedSeries.constant(other, self.nvars, self.order)

    def __getitem__(self, k) -> Fraction:
        if isinstance(k, int):
            k = (k,)
        return self.coeffs.get(tuple(k), Fraction(0))

    def constant_term(self) -> Fraction:
        return self[(0,) * self.nvars]

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return TruncatedSeries(self.nvars, self.order, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.nvars, self.order, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            return TruncatedSeries(self.nvars, self.order, {k: v * c for k, v in self.coeffs.items()})
        self._same(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for ka, va in self.coeffs.items():
            da = sum(ka)
            for kb, vb in other.coeffs.items():
                if da + sum(kb) > self.order:
                    continue
                k = tuple(a + b for a, b in zip(ka, kb))
                out[k] = out.get(k, 0) + va * vb
        return TruncatedSeries(self.nvars, self.order, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return reciprocal(self) ** (-n)
        out = TruncatedSeries.constant(1, self.nvars, self.order)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.nvars, self.order, self.coeffs) == (other.nvars, other.order, other.coeffs)

    def __repr__(self):
        return f"TruncatedSeries(nvars={self.nvars}, order={self.order}, coeffs={self.coeffs})"

    def univariate(self) -> list[Fraction]:
        if self.nvars != 1:
            raise ValueError("not a univariate series")
        return [self[i] for i in range(self.order + 1)]


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def reciprocal(f: TruncatedSeries) -> TruncatedSeries:
    """1/f via the geometric series; needs a nonzero constant term."""
    c = f.constant_term()
    if c == 0:
        raise ZeroDivisionError("reciprocal needs a nonzero constant term")
    g = 1 - f * (1 / c)  # f = c (1 - g) with g(0) = 0
    out = TruncatedSeries.constant(1, f.nvars, f.order)
    term = out
    for _ in range(f.order):
        term = term * g
        out = out + term
    return out * (1 / c)


def exp(f: TruncatedSeries) -> TruncatedSeries:
    """exp(f) for f with zero constant term."""
    if f.constant_term() != 0:
        raise ValueError("exp needs a zero constant term to stay exact")
    out = TruncatedSeries.constant(1, f.nvars, f.order)
    term = out
    for k in range(1, f.order + 1):
        term = term * f * Fraction(1, k)
        out = out + term
    return out


def compose(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """f(g) for univariate f and any g with g(0) = 0 (result lives where g lives)."""
    if f.nvars != 1:
        raise ValueError("the outer series must be univariate")
    if g.constant_term() != 0:
        raise ValueError("composition needs g(0) = 0")
    out = TruncatedSeries(g.nvars, g.order)
    power = TruncatedSeries.constant(1, g.nvars, g.order)
    for i in range(min(f.order, g.order) + 1):
        if f[i]:
            out = out + power * f[i]
        power = power * g
    return out


def egf_coefficients(f: TruncatedSeries) -> list[int]:
    """n! [x^n] f as integers (raises if a value is not integral)."""
    out = []
    for n, c in enumerate(f.univariate()):
        v = c * factorial(n)
        if v.denominator != 1:
            raise ValueError(f"coefficient {n} is not an integer after scaling: {v}")
        out.append(int(v))
    return out


def _x(order: int) -> TruncatedSeries:
    return TruncatedSeries.var(0, 1, order)


def series_complete(order: int) -> TruncatedSeries:
    """e^{x/(x-1)}."""
    x = _x(order)
    return exp(x * reciprocal(x - 1))


def series_tournament(order: int) -> TruncatedSeries:
    """-e^{1-e^{-x}}."""
    u = 1 - exp(-_x(order))
    return -exp(u)


def series_reversed(order: int) -> TruncatedSeries:
    """(1-e^{-x}) e^{1-e^{-x}}."""
    u = 1 - exp(-_x(order))
    return u * exp(u)


def egf_complete(order: int) -> list[int]:
    """n! [x^n] e^{x/(x-1)}. Equals (-1)^(n-1) chi(X(K_n)) for n >= 1."""
    return egf_coefficients(series_complete(order))


def egf_tournament(order: int) -> list[int]:
    """n! [x^n] -e^{1-e^{-x}}. Equals chi(X(T_n)) for n >= 1."""
    return egf_coefficients(series_tournament(order))


def egf_reversed(order: int) -> list[int]:
    """n! [x^n] (1-e^{-x}) e^{1-e^{-x}}. Equals -chi(X(R_{n+2})) for n >= 1."""
    return egf_coefficients(series_reversed(order))


def _bivariate(order: int, sign: int) -> TruncatedSeries:
    """e^x / (1 - y + sign*x*y) with x the first variable."""
    x = TruncatedSeries.var(0, 2, order)
    y = TruncatedSeries.var(1, 2, order)
    ex = TruncatedSeries(2, order, {(i, 0): Fraction(1, factorial(i)) for i in range(order + 1)})
    return ex * reciprocal(1 - y + x * y * sign)


def _mixed_coefficients(f: TruncatedSeries) -> dict[tuple[int, int], int]:
    """(n, m) -> m! [y^n x^m] f for n + m <= order."""
    out = {}
    for n in range(f.order + 1):
        for m in range(f.order + 1 - n):
            v = f[(m, n)] * factorial(m)
            if v.denominator != 1:
                raise ValueError(f"coefficient ({n}, {m}) is not an integer: {v}")
            out[(n, m)] = int(v)
    return out


def gf_bipartite(order: int) -> dict[tuple[int, int], int]:
    """m! [y^n x^m] e^x/(1-y+xy). Equals -chi(X(K_{n,m})) (with 1 when n or m is 0)."""
    return _mixed_coefficients(_bivariate(order, +1))


def gf_bipartite_count(order: int) -> dict[tuple[int, int], int]:
    """m! [y^n x^m] e^x/(1-y-xy): the number of multipaths of K_{n,m}."""
    return _mixed_coefficients(_bivariate(order, -1))


def column_series(order: int, m: int) -> list[int]:
    """F_m(y) read off gf_bipartite: coefficients of y^n for n + m <= order."""
    table = gf_bipartite(order)
    return [table[(n, m)] for n in range(order + 1 - m)]


def column_recurrence(order: int, m: int) -> list[int]:
    """Solve (1-y) F_m = 1 - m y F_{m-1}, F_0 = 1/(1-y), coefficientwise up to y^order."""
    col = [1] * (order + 1)
    for j in range(1, m + 1):
        new = []
        prev = 0
        for n in range(order + 1):
            # F_j[n] - F_j[n-1] = [n == 0] - j F_{j-1}[n-1]
            val = (1 if n == 0 else 0) - (j * col[n - 1] if n else 0) + prev
            new.append(val)
            prev = val
        col = new
    return col


def prodser_check(a: list[int], b: list[int], order: int) -> bool:
    """Degree-m part of A(t)B(z) equals sum_i a_i b_{m-i}/(m-i)! t^i z^{m-i} for m <= order."""
    A = TruncatedSeries(2, order, {(i, 0): v for i, v in enumerate(a)})
    B = TruncatedSeries(2, order, {(0, i): Fraction(v, factorial(i)) for i, v in enumerate(b)})
    prod_ = A * B
    for m in range(order + 1):
        for i in range(m + 1):
            ai = a[i] if i < len(a) else 0
            bj = b[m - i] if m - i < len(b) else 0
            if prod_[(i, m - i)] != Fraction(ai * bj, factorial(m - i)):
                return False
    return True


# -- OEIS prefix fixtures ------------------------------------------------------

FIXTURE_DIR = Path(__file__).with_name("fixtures")


def _fixture_path(name_or_path: str) -> Path:
    p = Path(name_or_path)
    return p if p.exists() else FIXTURE_DIR / f"{name_or_path}.txt"


def load_fixture_with_offset(name_or_path: str) -> tuple[int, list[int]]:
    """Read a fixture by OEIS id (e.g. 'A000587') or by file path.

    Format: one integer per line; blank lines and '#' lines are skipped,
    except that '# offset: k' sets the index of the first value (default 0).
    """
    offset = 0
    vals = []
    for line in _fixture_path(name_or_path).read_text().splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, rest = line[1:].partition(":")
            if key.strip() == "offset":
                offset = int(rest)
            continue
        vals.append(int(line))
    return offset, vals


def load_fixture(name_or_path: str) -> list[int]:
    return load_fixture_with_offset(name_or_path)[1]


def antidiagonals(table: Mapping[tuple[int, int], int], rows: int) -> list[int]:
    """Flatten T(n, m) by antidiagonals n + m = 0, 1, ..., rows-1, n descending within each."""
    out = []
    for s in range(rows):
        for n in range(s, -1, -1):
            out.append(table[(n, s - n)])
    return out


SERIES = {
    "complete": egf_complete,
    "tournament": egf_tournament,
    "reversed": egf_reversed,
    "bipartite": gf_bipartite,
    "bipartite-count": gf_bipartite_count,
}
