"""Simple directed graphs and the families they come in.

Vertices are the integers ``0..n-1``. Edges are ordered pairs of distinct
vertices, kept sorted, so an edge index is a position in ``Digraph.edges``.
Every generator below returns a fresh immutable :class:`Digraph`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

Edge = tuple[int, int]


@dataclass(frozen=True)
class Digraph:
    """A finite simple digraph on vertices ``0..n-1``.

    Build instances with :func:`make_digraph`, which validates and sorts the
    edge list; the constructor itself trusts its input.
    """

    n: int
    edges: tuple[Edge, ...]

    @cached_property
    def _index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def _in_deg(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for _, v in self.edges:
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def _out_deg(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, _ in self.edges:
            deg[u] += 1
        return tuple(deg)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_index(self, u: int, v: int) -> int:
        try:
            return self._index[(u, v)]
        except KeyError:
            raise KeyError(f"({u}, {v}) is not an edge") from None

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._index

    def in_degree(self, v: int) -> int:
        return self._in_deg[v]

    def out_degree(self, v: int) -> int:
        return self._out_deg[v]

    def edge_subgraph(self, indices: Iterable[int]) -> Digraph:
        """Spanning subgraph keeping only the given edges (same vertex set)."""
        return make_digraph(self.n, [self.edges[i] for i in indices])

    def to_networkx(self):
        import networkx as nx

        g = nx.DiGraph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": [list(e) for e in self.edges]})

    def to_dot(self, name: str = "G") -> str:
        lines = [f"digraph {name} {{"]
        lines += [f"  {v};" for v in range(self.n)]
        lines += [f"  {u} -> {v};" for u, v in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, edges={list(self.edges)})"


def make_digraph(n: int, edges: Iterable[Sequence[int]]) -> Digraph:
    """Validate and canonicalize: sorted edges, duplicates dropped."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    seen = set()
    for e in edges:
        u, v = (int(x) for x in e)
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) leaves the vertex range 0..{n - 1}")
        seen.add((u, v))
    return Digraph(n, tuple(sorted(seen)))


def from_json(text: str) -> Digraph:
    data = json.loads(text)
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ValueError('graph JSON must look like {"n": <int>, "edges": [[u, v], ...]}')
    return make_digraph(data["n"], data["edges"])


# -- orientation words ------------------------------------------------------

def _check_word(word: str) -> str:
    word = "".join(word)
    if not word or set(word) - {"f", "b"}:
        raise ValueError(f"orientation word must be a non-empty string over 'f'/'b', got {word!r}")
    return word


def linear_from_word(word: str) -> Digraph:
    """Path 0-1-...-k whose i-th edge points forward ('f') or backward ('b')."""
    word = _check_word(word)
    edges = [(i, i + 1) if c == "f" else (i + 1, i) for i, c in enumerate(word)]
    return make_digraph(len(word) + 1, edges)


def polygon_from_word(word: str) -> Digraph:
    """Cycle on ``len(word)`` vertices; edge i joins i and i+1 (mod n)."""
    word = _check_word(word)
    n = len(word)
    if n < 3:
        raise ValueError("a polygon needs at least 3 edges")
    edges = [(i, (i + 1) % n) if c == "f" else ((i + 1) % n, i) for i, c in enumerate(word)]
    return make_digraph(n, edges)


def alternating_word(n: int, first: str = "f") -> str:
    other = "b" if first == "f" else "f"
    return "".join(first if i % 2 == 0 else other for i in range(n))


# -- families ---------------------------------------------------------------

def linear_coherent(n: int) -> Digraph:
    """I_n: n edges (i, i+1)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return make_digraph(n + 1, [(i, i + 1) for i in range(n)])


def linear_alternating(n: int) -> Digraph:
    """A_n: n edges on n+1 vertices, edge 0 is (0, 1), directions alternate."""
    if n < 1:
        raise ValueError("A_n needs at least one edge")
    return linear_from_word(alternating_word(n))


def polygon_coherent(n: int) -> Digraph:
    """P_n: the directed n-cycle."""
    if n < 3:
        raise ValueError("a polygon needs at least 3 edges")
    return polygon_from_word("f" * n)


def dandelion(n: int, m: int) -> Digraph:
    """D_{n,m}: center 0, in-leaves 1..n, out-leaves n+1..n+m."""
    if n < 0 or m < 0:
        raise ValueError("leaf counts must be non-negative")
    if n + m == 0:
        raise ValueError("D_{0,0} has no edges")
    edges = [(w, 0) for w in range(1, n + 1)]
    edges += [(0, x) for x in range(n + 1, n + m + 1)]
    return make_digraph(n + m + 1, edges)


def complete(n: int) -> Digraph:
    """K_n: both (i, j) and (j, i) for every pair."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return make_digraph(n, [(i, j) for i in range(n) for j in range(n) if i != j])


def tournament(n: int) -> Digraph:
    """T_n on n vertices, edges (i, j) for i < j."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return make_digraph(n, combinations(range(n), 2))


def reversed_tournament(n: int) -> Digraph:
    """R_n: T_n with the edge from the first to the last vertex turned around."""
    if n < 3:
        raise ValueError("R_n is defined for n >= 3")
    edges = [e for e in combinations(range(n), 2) if e != (0, n - 1)]
    return make_digraph(n, edges + [(n - 1, 0)])


def complete_bipartite(n: int, m: int) -> Digraph:
    """K_{n,m}: sources 0..n-1, sinks n..n+m-1, every source to every sink."""
    if n < 1 or m < 1:
        raise ValueError("both sides need at least one vertex")
    return make_digraph(n + m, [(i, n + j) for i in range(n) for j in range(m)])


def incomplete_tournament(n: int, removed: Sequence[int]) -> Digraph:
    """T_n^{(i_1..i_k)}: transitive tournament on 0..n minus the out-edges of each i_j.

    Vertex count is n + 1 here, unlike :func:`tournament`.
    """
    removed = list(removed)
    if any(b <= a for a, b in zip(removed, removed[1:])):
        raise ValueError("removed indices must be strictly increasing")
    if removed and not (0 <= removed[0] and removed[-1] <= n):
        raise ValueError(f"removed indices must lie in 0..{n}")
    gone = set(removed)
    return make_digraph(n + 1, [(i, j) for i, j in combinations(range(n + 1), 2) if i not in gone])


def caterpillar(legs: Sequence[int]) -> Digraph:
    """G_s(m_1..m_s) with the alternating orientation, spine vertex 0 a source.

    Spine vertices are 0..s-1; the legs of spine vertex i follow in order.
    """
    legs = list(legs)
    if not legs or any(m < 0 for m in legs):
        raise ValueError("need at least one spine vertex and non-negative leg counts")
    s = len(legs)
    undirected = [(i, i + 1) for i in range(s - 1)]
    nxt = s
    for i, m in enumerate(legs):
        for _ in range(m):
            undirected.append((i, nxt))
            nxt += 1
    # spine vertex i has parity i; a leg has the opposite parity of its spine vertex
    parity = {i: i % 2 for i in range(s)}
    for a, b in undirected[s - 1:]:
        parity[b] = 1 - parity[a]
    edges = [(a, b) if parity[a] == 0 else (b, a) for a, b in undirected]
    return make_digraph(nxt, edges)


# -- constructions ----------------------------------------------------------

def cone(g: Digraph) -> Digraph:
    """Add a vertex n and an edge from every old vertex into it."""
    return make_digraph(g.n + 1, list(g.edges) + [(v, g.n) for v in range(g.n)])


def suspension(g: Digraph) -> Digraph:
    """Add vertices p = n, q = n+1 and edges (v, p), (v, q) for every old v."""
    p, q = g.n, g.n + 1
    extra = [(v, t) for v in range(g.n) for t in (p, q)]
    return make_digraph(g.n + 2, list(g.edges) + extra)


def cartesian_product(g: Digraph, h: Digraph) -> Digraph:
    """Box product. Vertex (u, a) gets index ``u * h.n + a``."""
    def idx(u: int, a: int) -> int:
        return u * h.n + a

    edges = [(idx(u, a), idx(v, a)) for u, v in g.edges for a in range(h.n)]
    edges += [(idx(u, a), idx(u, b)) for a, b in h.edges for u in range(g.n)]
    return make_digraph(g.n * h.n, edges)


def disjoint_union(g: Digraph, h: Digraph) -> Digraph:
    shift = g.n
    return make_digraph(g.n + h.n, list(g.edges) + [(u + shift, v + shift) for u, v in h.edges])


def reverse(g: Digraph) -> Digraph:
    return make_digraph(g.n, [(v, u) for u, v in g.edges])


def all_digraphs(n: int):
    """Every digraph on n labelled vertices (2^(n(n-1)) of them)."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for mask in range(1 << len(pairs)):
        yield make_digraph(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


def random_digraph(rng, n: int, p: float = 0.5, max_edges: int | None = None) -> Digraph:
    """Erdos-Renyi style digraph; ``rng`` is a :class:`random.Random`."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    edges = [e for e in pairs if rng.random() < p]
    if max_edges is not None and len(edges) > max_edges:
        edges = rng.sample(edges, max_edges)
    return make_digraph(n, edges)


FAMILIES = {
    "linear": ("n",),
    "alternating": ("n",),
    "polygon": ("n",),
    "linear-word": ("word",),
    "polygon-word": ("word",),
    "dandelion": ("n", "m"),
    "complete": ("n",),
    "tournament": ("n",),
    "reversed-tournament": ("n",),
    "bipartite": ("n", "m"),
    "incomplete-tournament": ("n", "removed"),
    "caterpillar": ("legs",),
}


def family(name: str, **params) -> Digraph:
    """Dispatch by family name; used by the CLI ``gen`` command."""
    builders = {
        "linear": lambda p: linear_coherent(p["n"]),
        "alternating": lambda p: linear_alternating(p["n"]),
        "polygon": lambda p: polygon_coherent(p["n"]),
        "linear-word": lambda p: linear_from_word(p["word"]),
        "polygon-word": lambda p: polygon_from_word(p["word"]),
        "dandelion": lambda p: dandelion(p["n"], p["m"]),
        "complete": lambda p: complete(p["n"]),
        "tournament": lambda p: tournament(p["n"]),
        "reversed-tournament": lambda p: reversed_tournament(p["n"]),
        "bipartite": lambda p: complete_bipartite(p["n"], p["m"]),
        "incomplete-tournament": lambda p: incomplete_tournament(p["n"], p["removed"]),
        "caterpillar": lambda p: caterpillar(p["legs"]),
    }
    if name not in builders:
        raise ValueError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
    missing = [k for k in FAMILIES[name] if params.get(k) is None]
    if missing:
        raise ValueError(f"family {name!r} needs {', '.join('--' + k for k in missing)}")
    return builders[name](params)
