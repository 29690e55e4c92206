"""Multipaths: edge sets in which every component is a vertex or a simple directed path."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .digraph import Digraph

DEFAULT_CAP = 10**7


class TooManyMultipaths(RuntimeError):
    pass


@dataclass(frozen=True)
class Multipath:
    parent: Digraph
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def length(self) -> int:
        return len(self.edges)

    def pairs(self) -> list[tuple[int, int]]:
        return [self.parent.edges[i] for i in self.edges]

    def paths(self) -> list[list[int]]:
        """Vertex sequences of the nontrivial path components, in order of first vertex."""
        succ = dict(self.pairs())
        heads = set(succ) - set(succ.values())
        out = []
        for h in sorted(heads):
            seq = [h]
            while seq[-1] in succ:
                seq.append(succ[seq[-1]])
            out.append(seq)
        return out

    def components(self) -> int:
        """k(g): number of connected components of the spanning subgraph."""
        return self.parent.n - len(self.edges)


def is_multipath(g: Digraph, s: Iterable[int]) -> bool:
    s = list(s)
    m = g.num_edges
    for i in s:
        if not (isinstance(i, int) and 0 <= i < m):
            raise IndexError(f"edge index {i!r} out of range 0..{m - 1}")
    if len(set(s)) != len(s):
        raise ValueError("edge indices must be distinct")
    succ: dict[int, int] = {}
    targets = set()
    for i in s:
        u, v = g.edges[i]
        if u in succ or v in targets:
            return False
        succ[u] = v
        targets.add(v)
    # degrees are fine, so components are paths or cycles; walk each one
    seen = set()
    for start in succ:
        if start in seen:
            continue
        x = start
        while x in succ and x not in seen:
            seen.add(x)
            x = succ[x]
        if x == start:
            return False
    return True


def iter_multipath_sets(g: Digraph, cap: int | None = None):
    """Yield every multipath as a sorted tuple of edge indices, DFS lex order.

    Backtracking keeps per-vertex in/out flags and, for every current path,
    its endpoints: ``first[t]`` is the start of the path ending at t and
    ``last[s]`` the end of the path starting at s. An edge (u, v) closes a
    cycle exactly when v is the start of the path that ends at u.
    """
    n, edges = g.n, g.edges
    m = len(edges)
    has_out = [False] * n
    has_in = [False] * n
    first = list(range(n))
    last = list(range(n))
    chosen: list[int] = []
    count = 0

    def rec(start: int):
        nonlocal count
        count += 1
        if cap is not None and count > cap:
            raise TooManyMultipaths(f"more than {cap} multipaths; raise the cap to continue")
        yield tuple(chosen)
        for i in range(start, m):
            u, v = edges[i]
            if has_out[u] or has_in[v] or first[u] == v:
                continue
            s, t = first[u], last[v]
            old_last_s, old_first_t = last[s], first[t]
            has_out[u] = has_in[v] = True
            last[s], first[t] = t, s
            chosen.append(i)
            yield from rec(i + 1)
            chosen.pop()
            last[s], first[t] = old_last_s, old_first_t
            has_out[u] = has_in[v] = False

    yield from rec(0)


def multipath_sets(g: Digraph, cap: int | None = None) -> list[tuple[int, ...]]:
    """All multipaths (empty one included) as index tuples, ordered by size then lex."""
    out = list(iter_multipath_sets(g, cap))
    out.sort(key=lambda t: (len(t), t))
    return out


def enumerate_multipaths(g: Digraph, cap: int | None = None) -> list[Multipath]:
    return [Multipath(g, s) for s in multipath_sets(g, cap)]


def count_multipaths(g: Digraph, cap: int | None = None) -> int:
    return sum(1 for _ in iter_multipath_sets(g, cap))


def count_by_length(g: Digraph, cap: int | None = None) -> list[int]:
    counts = [0]
    for s in iter_multipath_sets(g, cap):
        k = len(s)
        while len(counts) <= k:
            counts.append(0)
        counts[k] += 1
    return counts


def maximal_multipaths(g: Digraph, cap: int | None = None) -> list[Multipath]:
    """Facets: multipaths to which no further edge can be added."""
    sets = multipath_sets(g, cap)
    facets = []
    for s in sets:
        present = set(s)
        extendable = any(
            i not in present and is_multipath(g, s + (i,)) for i in range(g.num_edges)
        )
        if not extendable:
            facets.append(Multipath(g, s))
    return facets
