"""Stable vertices, dynamical regions, and the decomposition of a digraph into modules.

A region is an edge subset, given as edge indices into the parent digraph.
Its vertex support is the set of endpoints of its edges, and the same goes
for the complement, so a subgraph here is always spanned by its edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import Iterable

import networkx as nx

from .digraph import Digraph
from .pathposet import chi_fvector
from .simplicial import (
    HomologySummary,
    graph_homology,
    join_homology,
    matching_complex,
    multipath_complex,
)


def vertex_stability(g: Digraph, v: int) -> str:
    """'stable' if v has indegree 0 or outdegree 0 in g, else 'unstable'."""
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} not in graph")
    return "stable" if g.in_degree(v) == 0 or g.out_degree(v) == 0 else "unstable"


def _support(g: Digraph, edges: Iterable[int]) -> set[int]:
    out = set()
    for i in edges:
        out.update(g.edges[i])
    return out


def _degrees(g: Digraph, edges: Iterable[int]) -> tuple[dict[int, int], dict[int, int]]:
    indeg: dict[int, int] = {}
    outdeg: dict[int, int] = {}
    for i in edges:
        u, v = g.edges[i]
        outdeg[u] = outdeg.get(u, 0) + 1
        indeg[v] = indeg.get(v, 0) + 1
    return indeg, outdeg


def is_connected_edge_set(g: Digraph, edges: Iterable[int]) -> bool:
    """Weak connectivity of the subgraph spanned by the edges."""
    edges = list(edges)
    if not edges:
        return False
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in edges:
        u, v = g.edges[i]
        parent[find(u)] = find(v)
    return len({find(x) for x in list(parent)}) == 1


def connected_components(g: Digraph, edges: Iterable[int]) -> list[frozenset[int]]:
    """Split an edge set into its weakly connected pieces."""
    edges = sorted(set(edges))
    h = nx.Graph()
    for i in edges:
        u, v = g.edges[i]
        h.add_edge(u, v)
    comps = []
    for vs in nx.connected_components(h):
        comps.append(frozenset(i for i in edges if g.edges[i][0] in vs))
    return sorted(comps, key=min)


@dataclass(frozen=True)
class RegionView:
    graph: Digraph
    edges: frozenset[int]

    @property
    def complement(self) -> frozenset[int]:
        return frozenset(range(self.graph.num_edges)) - self.edges

    @property
    def vertices(self) -> set[int]:
        return _support(self.graph, self.edges)

    @property
    def boundary(self) -> set[int]:
        return self.vertices & _support(self.graph, self.complement)

    @property
    def size(self) -> int:
        return len(self.vertices - self.boundary)


def region_view(g: Digraph, edges: Iterable[int]) -> RegionView:
    return RegionView(g, frozenset(edges))


@dataclass(frozen=True)
class RegionCheck:
    ok: bool
    reason: str
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


def _scc_ids(g: Digraph) -> list[int]:
    ids = [0] * g.n
    for k, comp in enumerate(nx.strongly_connected_components(g.to_networkx())):
        for v in comp:
            ids[v] = k
    return ids


def _cycle_witness(g: Digraph, region: frozenset[int]):
    """A directed cycle (vertex list) through an edge of the region that leaves the region."""
    gx = g.to_networkx()
    inside = {g.edges[i] for i in region}
    for cyc in nx.simple_cycles(gx):
        es = [(cyc[j], cyc[(j + 1) % len(cyc)]) for j in range(len(cyc))]
        if any(e in inside for e in es) and any(e not in inside for e in es):
            return cyc + [cyc[0]]
    return None


def is_dynamical_region(g: Digraph, region: Iterable[int]) -> RegionCheck:
    """Check the two region clauses for a nonempty connected edge set.

    (a) every boundary vertex is unstable in g but stable in the region and
        in its complement;
    (b) no directed cycle of g through a region edge leaves the region.
    """
    r = frozenset(region)
    for i in r:
        if not (isinstance(i, int) and 0 <= i < g.num_edges):
            raise IndexError(f"edge index {i!r} out of range")
    if not r:
        raise ValueError("a region needs at least one edge")
    if not is_connected_edge_set(g, r):
        raise ValueError("a region must span a connected subgraph")
    view = RegionView(g, r)
    r_in, r_out = _degrees(g, r)
    c_in, c_out = _degrees(g, view.complement)
    for v in sorted(view.boundary):
        if vertex_stability(g, v) == "stable":
            return RegionCheck(False, f"(a) boundary vertex {v} is stable in the whole graph", v)
        if r_in.get(v, 0) and r_out.get(v, 0):
            return RegionCheck(False, f"(a) boundary vertex {v} is unstable in the region", v)
        if c_in.get(v, 0) and c_out.get(v, 0):
            return RegionCheck(False, f"(a) boundary vertex {v} is unstable in the complement", v)
    scc = _scc_ids(g)
    internal = [i for i in range(g.num_edges) if scc[g.edges[i][0]] == scc[g.edges[i][1]]]
    internal_set = set(internal)
    touched = {scc[g.edges[i][0]] for i in r if i in internal_set}
    for i in internal:
        if i not in r and scc[g.edges[i][0]] in touched:
            return RegionCheck(False, "(b) a region edge lies on a directed cycle that leaves the region",
                               _cycle_witness(g, r))
    return RegionCheck(True, "dynamical region")


def module_closure(g: Digraph, seed: Iterable[int]) -> frozenset[int]:
    """Least edge set containing the seed, closed under the two rules.

    (1) edges sharing a source or a target with a member join it;
    (2) an edge on a directed cycle pulls in every edge of its strongly
        connected component that lies on a directed cycle.
    """
    seed = set(seed)
    if not seed:
        raise ValueError("need at least one seed edge")
    for i in seed:
        if not (0 <= i < g.num_edges):
            raise IndexError(f"edge index {i} out of range")
    by_source: dict[int, list[int]] = {}
    by_target: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(g.edges):
        by_source.setdefault(u, []).append(i)
        by_target.setdefault(v, []).append(i)
    scc = _scc_ids(g)
    scc_edges: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(g.edges):
        if scc[u] == scc[v]:
            scc_edges.setdefault(scc[u], []).append(i)
    out = set(seed)
    todo = list(seed)
    while todo:
        i = todo.pop()
        u, v = g.edges[i]
        nbrs = by_source[u] + by_target[v]
        if scc[u] == scc[v]:
            nbrs = nbrs + scc_edges[scc[u]]
        for j in nbrs:
            if j not in out:
                out.add(j)
                todo.append(j)
    return frozenset(out)


def module_of_edge(g: Digraph, e: int) -> frozenset[int]:
    """The unique module containing edge e."""
    return module_closure(g, [e])


def decompose(g: Digraph) -> list[frozenset[int]]:
    """Modules partitioning E(g), ordered by their smallest edge index."""
    assigned: set[int] = set()
    modules = []
    for e in range(g.num_edges):
        if e in assigned:
            continue
        m = module_of_edge(g, e)
        assigned |= m
        modules.append(m)
    return modules


def module_subgraph(g: Digraph, module: Iterable[int]) -> Digraph:
    """The module as a digraph on the same vertex set (isolated vertices do not matter)."""
    return g.edge_subgraph(sorted(module))


def is_minimal_region(g: Digraph, region: Iterable[int]) -> bool:
    """A region is a module iff every one of its edges generates all of it."""
    r = frozenset(region)
    if not is_dynamical_region(g, r):
        return False
    return all(module_of_edge(g, e) == r for e in r)


def is_minimal_region_bruteforce(g: Digraph, region: Iterable[int]) -> bool:
    """Minimality by trying every proper connected sub-region (small regions only)."""
    r = sorted(region)
    if not is_dynamical_region(g, r):
        return False
    for k in range(1, len(r)):
        for sub in combinations(r, k):
            if is_connected_edge_set(g, sub) and is_dynamical_region(g, sub):
                return False
    return True


def all_regions(g: Digraph) -> list[frozenset[int]]:
    """Every dynamical region of g, by brute force over connected edge subsets."""
    out = []
    m = g.num_edges
    for mask in range(1, 1 << m):
        s = [i for i in range(m) if mask >> i & 1]
        if is_connected_edge_set(g, s) and is_dynamical_region(g, s):
            out.append(frozenset(s))
    return out


def stable_module_is_matching(g: Digraph, module: Iterable[int]) -> bool | None:
    """For a module whose vertices are all stable, compare X(module) with the matching complex.

    Returns None when the module has an unstable vertex.
    """
    sub = module_subgraph(g, module)
    if any(sub.in_degree(v) and sub.out_degree(v) for v in range(sub.n)):
        return None
    return multipath_complex(sub).all_faces() == matching_complex(sub.n, sub.edges).all_faces()


@dataclass(frozen=True)
class JoinCheck:
    ok: bool
    chi_graph: int
    chi_modules: tuple[int, ...]
    homology_graph: HomologySummary | None = None
    homology_join: HomologySummary | None = None

    def __bool__(self) -> bool:
        return self.ok


def join_euler_check(g: Digraph, homology: bool = True) -> JoinCheck:
    """chi(X(G)) = (-1)^(k-1) prod chi(X(M_i)), and (optionally) Kuenneth agreement of homology."""
    mods = decompose(g)
    chis = tuple(chi_fvector(module_subgraph(g, m)) for m in mods)
    chi_g = chi_fvector(g)
    k = len(mods)
    sign = -1 if (k - 1) % 2 else 1
    ok = chi_g == sign * prod(chis)
    hg = hj = None
    if homology:
        hg = graph_homology(g)
        hj = HomologySummary((), (), empty=True)
        for m in mods:
            hj = join_homology(hj, graph_homology(module_subgraph(g, m)))
        ok = ok and hg == hj
    return JoinCheck(ok, chi_g, chis, hg, hj)


def decomposed_homology(g: Digraph, cap: int | None = None) -> HomologySummary:
    """Homology of X(G) assembled from its modules by the Kuenneth join formula."""
    h = HomologySummary((), (), empty=True)
    for m in decompose(g):
        h = join_homology(h, graph_homology(module_subgraph(g, m), cap))
    return h


def intersection_components(g: Digraph, a: Iterable[int], b: Iterable[int]) -> list[frozenset[int]]:
    common = set(a) & set(b)
    return connected_components(g, common) if common else []
