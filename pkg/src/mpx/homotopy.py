"""Symbolic homotopy types and the family classifiers built on them.

A type is one of: the empty complex (S^-1), a contractible space, a wedge
of spheres (a sorted tuple of dimensions), or Unknown carrying the integer
homology that was computed instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import networkx as nx

from .digraph import (
    Digraph,
    alternating_word,
    cartesian_product,
    caterpillar,
    dandelion,
    linear_coherent,
    linear_from_word,
    polygon_from_word,
    suspension,
    tournament,
)
from .dynamics import decompose, is_connected_edge_set, module_subgraph
from .formulas import L_poly, chi_tournament, wedge_counts_qs
from .simplicial import (
    HomologySummary,
    graph_homology,
    join_homology,
    shift_homology,
    summary_from_groups,
)

EMPTY, CONTRACTIBLE, WEDGE, UNKNOWN = "empty", "contractible", "wedge", "unknown"


@dataclass(frozen=True)
class HomotopyType:
    kind: str
    spheres: tuple[int, ...] = ()
    homology_data: HomologySummary | None = None

    def __str__(self) -> str:
        if self.kind == EMPTY:
            return "empty (S^-1)"
        if self.kind == CONTRACTIBLE:
            return "contractible"
        if self.kind == UNKNOWN:
            return "unknown [" + "; ".join(self.homology_data.format_lines()) + "]"
        parts = []
        for d in sorted(set(self.spheres)):
            c = self.spheres.count(d)
            parts.append(f"S^{d}" if c == 1 else f"⋁^{c} S^{d}")
        return " ∨ ".join(parts)

    def homology(self) -> HomologySummary:
        if self.kind == EMPTY:
            return HomologySummary((), (), empty=True)
        if self.kind == UNKNOWN:
            return self.homology_data
        groups = {}
        for d in self.spheres:
            groups[d] = (groups.get(d, (0, ()))[0] + 1, ())
        return summary_from_groups(groups)

    def euler(self) -> int:
        return self.homology().euler()

    def matches(self, h: HomologySummary) -> bool:
        """Same reduced integer homology as h."""
        return self.homology() == h


def Empty() -> HomotopyType:
    return HomotopyType(EMPTY)


def Contractible() -> HomotopyType:
    return HomotopyType(CONTRACTIBLE)


def Sphere(d: int) -> HomotopyType:
    if d < -1:
        raise ValueError("sphere dimension must be at least -1")
    return Empty() if d == -1 else HomotopyType(WEDGE, (d,))


def WedgeOfSpheres(dims: Iterable[int]) -> HomotopyType:
    dims = tuple(sorted(dims))
    if any(d < 0 for d in dims):
        raise ValueError("wedge summands must have dimension >= 0")
    return HomotopyType(WEDGE, dims) if dims else Contractible()


def Unknown(h: HomologySummary) -> HomotopyType:
    return HomotopyType(UNKNOWN, (), h)


def from_homology(h: HomologySummary) -> HomotopyType:
    """Wrap computed homology; never claims more than Unknown except for the empty complex."""
    return Empty() if h.empty else Unknown(h)


def join(a: HomotopyType, b: HomotopyType) -> HomotopyType:
    if a.kind == CONTRACTIBLE or b.kind == CONTRACTIBLE:
        return Contractible()
    if a.kind == EMPTY:
        return b
    if b.kind == EMPTY:
        return a
    if a.kind == UNKNOWN and b.kind == UNKNOWN:
        raise ValueError("cannot join two unknown types symbolically")
    if UNKNOWN in (a.kind, b.kind):
        return Unknown(join_homology(a.homology(), b.homology()))
    return WedgeOfSpheres(x + y + 1 for x in a.spheres for y in b.spheres)


def join_all(types: Iterable[HomotopyType]) -> HomotopyType:
    out = Empty()
    for t in types:
        out = join(out, t)
    return out


def wedge(types: Sequence[HomotopyType]) -> HomotopyType:
    types = [t for t in types if t.kind != CONTRACTIBLE]
    if any(t.kind == EMPTY for t in types):
        raise ValueError("a wedge needs based (nonempty) spaces")
    if not types:
        return Contractible()
    if any(t.kind == UNKNOWN for t in types):
        groups: dict[int, tuple[int, tuple]] = {}
        for t in types:
            for d, (r, tor) in t.homology().groups().items():
                r0, t0 = groups.get(d, (0, ()))
                groups[d] = (r0 + r, t0 + tuple(tor))
        return Unknown(summary_from_groups(groups))
    return WedgeOfSpheres(d for t in types for d in t.spheres)


def suspend(a: HomotopyType) -> HomotopyType:
    if a.kind == EMPTY:
        return Sphere(0)
    if a.kind == CONTRACTIBLE:
        return a
    if a.kind == UNKNOWN:
        return Unknown(shift_homology(a.homology_data))
    return WedgeOfSpheres(d + 1 for d in a.spheres)


def oracle(g: Digraph, cap: int | None = None) -> HomologySummary:
    return graph_homology(g, cap)


# -- linear graphs and polygons -----------------------------------------------

def classify_alternating_path(v: int) -> HomotopyType:
    """X of the alternating path on v vertices (v-1 edges)."""
    if v < 1:
        raise ValueError("need at least one vertex")
    if v == 1:
        return Empty()
    if v % 3 == 2:
        return Contractible()
    return Sphere(-(-(v - 4) // 3))


def _runs(word: str) -> list[int]:
    """Edge counts of the maximal alternating runs of a linear orientation word."""
    runs = [1]
    for a, b in zip(word, word[1:]):
        if a != b:
            runs[-1] += 1
        else:
            runs.append(1)
    return runs


def classify_linear(word: str) -> HomotopyType:
    """Join of the alternating paths the linear graph splits into."""
    g = linear_from_word(word)
    mods = decompose(g)
    return join_all(classify_alternating_path(len(m) + 1) for m in mods)


def _polygon_stability(word: str) -> list[bool]:
    """stable[i] for vertex i, which sits between edge i-1 and edge i."""
    n = len(word)
    # vertex i is the head of edge i-1 if that edge is 'f'; the tail of edge i if that edge is 'f'
    return [word[i - 1] != word[i] for i in range(n)]


def classify_polygon(word: str) -> HomotopyType:
    n = len(word)
    if n < 3 or set(word) - {"f", "b"}:
        raise ValueError("polygon word needs at least 3 letters from 'f'/'b'")
    stable = _polygon_stability(word)
    if not any(stable):
        return Sphere(n - 2)
    if all(stable):
        k, r = divmod(n, 3)
        if r == 0:
            return WedgeOfSpheres([k - 1, k - 1])
        return Sphere(k - 1) if r == 1 else Sphere(k)
    unstable = [i for i in range(n) if not stable[i]]
    if any(not stable[(i + 1) % n] for i in unstable):
        return Contractible()
    stretches = []
    for a, b in zip(unstable, unstable[1:] + [unstable[0] + n]):
        stretches.append(b - a - 1)
    return join_all(classify_alternating_path(ell + 2) for ell in stretches)


# -- grids, dandelions, tournaments -----------------------------------------

def classify_grid_II(n: int, m: int) -> HomotopyType:
    """X(I_n x I_m)."""
    if n < 0 or m < 0:
        raise ValueError("arguments must be non-negative")
    if n == 0 and m == 0:
        return Empty()
    if n == 0 or m == 0:
        return Contractible()
    if m == 1:
        return Sphere(n)
    if n == 1:
        return Sphere(m)
    return Contractible()


def classify_grid_AI(n: int, m: int) -> HomotopyType:
    """X(A_n x I_m)."""
    if n < 1 or m < 1:
        raise ValueError("arguments must be positive")
    if n % 2 == 0:
        return Contractible()
    return Sphere((m - 1) * (n + 1) // 2 + n)


def classify_dandelion(n: int, m: int) -> HomotopyType:
    if n < 0 or m < 0 or n + m == 0:
        raise ValueError("need n, m >= 0 with n + m >= 1")
    if n == 1 or m == 1:
        return Contractible()
    if n == 0 or m == 0:
        return WedgeOfSpheres([0] * (n + m - 1))
    return WedgeOfSpheres([1] * ((n - 1) * (m - 1)))


class TorsionFound(AssertionError):
    pass


def tournament_homotopy(n: int) -> HomotopyType:
    """Wedge read off the homology of X(T_n); torsion would be a hard failure."""
    if n < 1:
        raise ValueError("n must be at least 1")
    h = graph_homology(tournament(n))
    if h.empty:
        return Empty()
    if not h.is_torsion_free():
        raise TorsionFound(f"X(T_{n}) has torsion {h.torsion}")
    if h.euler() != chi_tournament(n):
        raise AssertionError("homology disagrees with the closed-form Euler characteristic")
    return WedgeOfSpheres(d for d, b in enumerate(h.betti) for _ in range(b))


# -- caterpillars ---------------------------------------------------------------

def canonical_legs(legs: Sequence[int]) -> list[int]:
    """Fold spine ends without legs into a leg of their neighbour."""
    legs = list(legs)
    while len(legs) > 1 and legs[-1] == 0:
        legs.pop()
        legs[-1] += 1
    while len(legs) > 1 and legs[0] == 0:
        legs.pop(0)
        legs[0] += 1
    return legs


def caterpillar_shape(legs: Sequence[int]) -> list[int] | None:
    """The m_1..m_k of a covered shape G_{2k-1}(m_1,0,m_2,...,0,m_k), all m_i > 0, else None."""
    legs = canonical_legs(legs)
    if len(legs) % 2 == 0:
        return None
    odd = legs[0::2]
    even = legs[1::2]
    if any(x != 0 for x in even) or any(x <= 0 for x in odd):
        return None
    return odd


def classify_caterpillar(legs: Sequence[int]) -> HomotopyType:
    """X of the alternating caterpillar G_s(m_1..m_s), equal to its matching complex."""
    legs = list(legs)
    if not legs or any(x < 0 for x in legs):
        raise ValueError("need a non-empty list of non-negative leg counts")
    if len(legs) == 1 and legs[0] == 0:
        return Empty()
    shape = caterpillar_shape(legs)
    if shape is None:
        return from_homology(graph_homology(caterpillar(legs)))
    k = len(shape)
    return WedgeOfSpheres([k - 1] * L_poly([x - 1 for x in shape]))


def caterpillar_legs_of_tree(g: Digraph) -> list[int] | None:
    """Leg counts along the spine if the edge-spanned graph is a caterpillar tree, else None."""
    und = nx.Graph()
    und.add_edges_from(g.edges)
    if und.number_of_edges() == 0 or not nx.is_tree(und):
        return None
    if und.number_of_edges() == 1:
        return [1]
    leaves = {v for v in und if und.degree(v) == 1}
    core = und.subgraph([v for v in und if v not in leaves])
    if core.number_of_nodes() == 1:
        (c,) = core.nodes
        return [und.degree(c)]
    if any(d > 2 for _, d in core.degree()) or not nx.is_connected(core):
        return None
    ends = [v for v, d in core.degree() if d == 1]
    path = nx.shortest_path(core, ends[0], ends[1])
    legs = [sum(1 for w in und[v] if w in leaves) for v in path]
    return min(legs, legs[::-1])


def _is_alternating(g: Digraph) -> bool:
    return all(g.in_degree(v) == 0 or g.out_degree(v) == 0 for v in range(g.n))


def classify_module(g: Digraph) -> HomotopyType:
    """Caterpillar formula for alternating caterpillar modules, oracle otherwise."""
    legs = caterpillar_legs_of_tree(g) if _is_alternating(g) else None
    if legs is not None:
        return classify_caterpillar(legs)
    return from_homology(graph_homology(g))


def _join_modules(types: list[HomotopyType]) -> HomotopyType:
    """Join module types; several unknowns are combined at the homology level."""
    if any(t.kind == CONTRACTIBLE for t in types):
        return Contractible()
    if sum(t.kind == UNKNOWN for t in types) <= 1:
        return join_all(types)
    h = HomologySummary((), (), empty=True)
    for t in types:
        h = join_homology(h, t.homology())
    return Unknown(h)


def classify_LxI1(word: str) -> HomotopyType:
    """X(L x I_1) for a linear orientation word, module by module."""
    g = cartesian_product(linear_from_word(word), linear_coherent(1))
    return _join_modules([classify_module(module_subgraph(g, m)) for m in decompose(g)])


def In_Am_word(n: int, m: int) -> str:
    """I_n followed by A_m: n forward edges, then m alternating edges starting backward."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1, m >= 0")
    return "f" * n + (alternating_word(m, "b") if m else "")


def In_Am_formula(n: int, m: int) -> HomotopyType:
    """The stated wedge: q(m) (or ((m+3)/2) q(m+1)) spheres of dimension n + m + 3."""
    count, _ = wedge_counts_qs(m)
    return WedgeOfSpheres([n + m + 3] * count)


def classify_In_Am_xI1(n: int, m: int) -> HomotopyType:
    """Formula type when it agrees with the module-wise homology, Unknown otherwise."""
    g = cartesian_product(linear_from_word(In_Am_word(n, m)), linear_coherent(1))
    from .dynamics import decomposed_homology

    h = decomposed_homology(g)
    f = In_Am_formula(n, m)
    return f if f.matches(h) else Unknown(h)


# -- suspension ------------------------------------------------------------------

def suspension_hypothesis(g: Digraph) -> bool:
    """Connected (no isolated vertices) with a vertex of outdegree 0 and positive indegree."""
    if g.num_edges == 0 or not is_connected_edge_set(g, range(g.num_edges)):
        return False
    if any(g.in_degree(v) == 0 and g.out_degree(v) == 0 for v in range(g.n)):
        return False
    return any(g.out_degree(v) == 0 and g.in_degree(v) > 0 for v in range(g.n))


def suspension_law_check(g: Digraph) -> bool | None:
    """Is H(X(Sigma G)) the one-step shift of H(X(G))? None when the hypothesis fails."""
    if not suspension_hypothesis(g):
        return None
    return graph_homology(suspension(g)) == shift_homology(graph_homology(g))


def single_vertex_suspension(g: Digraph, v: int) -> Digraph:
    """G plus two new sinks p, q fed only by v."""
    from .digraph import make_digraph

    return make_digraph(g.n + 2, list(g.edges) + [(v, g.n), (v, g.n + 1)])


def single_vertex_suspension_check(g: Digraph, v: int) -> bool:
    """For a vertex of outdegree 0, X(G + (v,p) + (v,q)) is the suspension of X(G)."""
    if g.out_degree(v) != 0:
        raise ValueError("v must have outdegree 0")
    return graph_homology(single_vertex_suspension(g, v)) == shift_homology(graph_homology(g))


# -- dispatch for the CLI ------------------------------------------------------

def classify_family(family: str, **p) -> tuple[HomotopyType, Digraph | None]:
    """Classifier result and the digraph it describes (None if not materialized)."""
    if family == "alternating-path":
        v = p["n"]
        return classify_alternating_path(v), (linear_from_word(alternating_word(v - 1)) if v > 1 else None)
    if family == "linear":
        return classify_linear(p["word"]), linear_from_word(p["word"])
    if family == "polygon":
        return classify_polygon(p["word"]), polygon_from_word(p["word"])
    if family == "grid-II":
        n, m = p["n"], p["m"]
        g = cartesian_product(linear_coherent(n), linear_coherent(m))
        return classify_grid_II(n, m), g
    if family == "grid-AI":
        from .digraph import linear_alternating

        n, m = p["n"], p["m"]
        return classify_grid_AI(n, m), cartesian_product(linear_alternating(n), linear_coherent(m))
    if family == "dandelion":
        return classify_dandelion(p["n"], p["m"]), dandelion(p["n"], p["m"])
    if family == "tournament":
        return tournament_homotopy(p["n"]), tournament(p["n"])
    if family == "caterpillar":
        return classify_caterpillar(p["legs"]), caterpillar(p["legs"])
    if family == "LxI1":
        g = cartesian_product(linear_from_word(p["word"]), linear_coherent(1))
        return classify_LxI1(p["word"]), g
    if family == "In-Am-x-I1":
        n, m = p["n"], p["m"]
        g = cartesian_product(linear_from_word(In_Am_word(n, m)), linear_coherent(1))
        return classify_In_Am_xI1(n, m), g
    raise ValueError(f"unknown family {family!r}")


CLASSIFY_FAMILIES = (
    "alternating-path", "linear", "polygon", "grid-II", "grid-AI", "dandelion",
    "tournament", "caterpillar", "LxI1", "In-Am-x-I1",
)
