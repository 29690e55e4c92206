"""Closed forms for reduced Euler characteristics and the counting numbers behind them."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb, factorial, prod


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling numbers of the second kind, S(n, k)."""
    if n < 0 or k < 0:
        raise ValueError("arguments must be non-negative")
    if k > n:
        return 0
    if n == k:
        return 1
    if k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def lah(n: int, k: int) -> int:
    """Unsigned Lah numbers: ways to split an n-set into k nonempty ordered lists."""
    if n < 0 or k < 0:
        raise ValueError("arguments must be non-negative")
    if k > n:
        return 0
    if n == 0:
        return 1
    if k == 0:
        return 0
    return comb(n - 1, k - 1) * factorial(n) // factorial(k)


def bell(n: int) -> int:
    return sum(stirling2(n, k) for k in range(n + 1))


def chi_complete(n: int) -> int:
    """chi-tilde of X(K_n): sum_{k=1}^n (-1)^(n-k-1) L(n, k)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return sum(_sign(n - k - 1) * lah(n, k) for k in range(1, n + 1))


def chi_tournament(n: int) -> int:
    """chi-tilde of X(T_n): sum_{k=1}^n (-1)^(n-k-1) S(n, k)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return sum(_sign(n - k - 1) * stirling2(n, k) for k in range(1, n + 1))


def chi_reversed_tournament(n: int) -> int:
    """chi-tilde of X(R_n): sum_{k=1}^{n-2} (-1)^(n-k-1) k S(n-2, k)."""
    if n < 3:
        raise ValueError("n must be at least 3")
    return sum(_sign(n - k - 1) * k * stirling2(n - 2, k) for k in range(1, n - 1))


def chi_bipartite(n: int, m: int) -> int:
    """chi-tilde of X(K_{n,m}): sum_k (-1)^(k+1) C(n,k) C(m,k) k!.

    The k = 0 term is the empty face, so a side of size zero gives -1,
    the value of the empty complex.
    """
    if n < 0 or m < 0:
        raise ValueError("arguments must be non-negative")
    return sum(_sign(k + 1) * comb(n, k) * comb(m, k) * factorial(k) for k in range(min(n, m) + 1))


def chi_bipartite_recurrence_check(n: int, m: int) -> bool:
    """chi_{n,m} == chi_{n-1,m} - m chi_{n-1,m-1} for n, m >= 1."""
    if n < 1 or m < 1:
        raise ValueError("the recurrence needs n, m >= 1")
    return chi_bipartite(n, m) == chi_bipartite(n - 1, m) - m * chi_bipartite(n - 1, m - 1)


def bipartite_multipath_count(n: int, m: int) -> int:
    return sum(comb(n, k) * comb(m, k) * factorial(k) for k in range(min(n, m) + 1))


def L_poly(a) -> int:
    """L_k(a_1..a_k): sum over nonempty index sets i_1<..<i_l of the gap product times a_{i_1}..a_{i_l}.

    A singleton contributes a_i alone (empty gap product).
    """
    a = list(a)
    if not a:
        raise ValueError("need at least one argument")
    if any(x < 0 for x in a):
        raise ValueError("arguments must be non-negative")
    k = len(a)
    total = 0
    support = [i for i in range(k) if a[i]]
    for size in range(1, len(support) + 1):
        for idx in combinations(support, size):
            gaps = prod(idx[j + 1] - idx[j] for j in range(size - 1))
            total += gaps * prod(a[i] for i in idx)
    return total


def q_count(m: int) -> int:
    if m < 0 or m % 2:
        raise ValueError("q(m) is defined for even m >= 0")
    return 2 ** ((m + 2) // 2)


def s_count(m: int) -> int:
    if m < 0:
        raise ValueError("m must be non-negative")
    return 2 ** ((m + 3) // 2)


def wedge_counts_qs(m: int) -> tuple[int, int]:
    """(sphere count, s(m)); for odd m the count is ((m+3)/2) q(m+1)."""
    if m < 0:
        raise ValueError("m must be non-negative")
    count = q_count(m) if m % 2 == 0 else (m + 3) // 2 * q_count(m + 1)
    return count, s_count(m)


NAMED = {
    "stirling2": (stirling2, 2),
    "lah": (lah, 2),
    "bell": (bell, 1),
    "chi-complete": (chi_complete, 1),
    "chi-tournament": (chi_tournament, 1),
    "chi-reversed": (chi_reversed_tournament, 1),
    "chi-bipartite": (chi_bipartite, 2),
    "bipartite-count": (bipartite_multipath_count, 2),
    "L": (None, -1),
    "qs": (wedge_counts_qs, 1),
}


def evaluate(name: str, args: list[int]):
    """Evaluate a named formula; used by the CLI ``formula`` command."""
    if name not in NAMED:
        raise ValueError(f"unknown formula {name!r}; choose from {', '.join(NAMED)}")
    fn, arity = NAMED[name]
    if name == "L":
        return L_poly(args)
    if len(args) != arity:
        raise ValueError(f"{name} takes {arity} argument(s), got {len(args)}")
    return fn(*args)
