"""Multipath and matching complexes, boundary matrices, Smith normal form, integer homology.

Homology is reduced throughout. The empty complex is legal and has
H_{-1} = Z, which is how it enters joins and suspensions.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .digraph import Digraph
from .multipath import multipath_sets

Face = tuple[int, ...]


@dataclass
class SimplicialComplex:
    """Faces are sorted label tuples, grouped by dimension (``faces[d]`` has size d+1)."""

    labels: tuple[int, ...]
    faces: list[list[Face]]
    _index: list[dict[Face, int]] = field(default_factory=list, repr=False)

    def __post_init__(self):
        self._index = [{f: i for i, f in enumerate(fs)} for fs in self.faces]

    @property
    def dim(self) -> int:
        return len(self.faces) - 1

    @property
    def f_vector(self) -> list[int]:
        return [len(fs) for fs in self.faces]

    def is_empty(self) -> bool:
        return not self.faces

    def all_faces(self) -> set[Face]:
        return {f for fs in self.faces for f in fs}

    def face_index(self, f: Face) -> int:
        return self._index[len(f) - 1][f]

    def euler(self) -> int:
        """Reduced Euler characteristic, the empty face counted in degree -1."""
        return -1 + sum((-1) ** d * len(fs) for d, fs in enumerate(self.faces))

    def is_downward_closed(self) -> bool:
        for d in range(1, len(self.faces)):
            lower = self._index[d - 1]
            for f in self.faces[d]:
                for i in range(len(f)):
                    if f[:i] + f[i + 1:] not in lower:
                        return False
        return True


def complex_from_faces(faces: Iterable[Sequence[int]], labels: Sequence[int] | None = None) -> SimplicialComplex:
    """Build from an explicit (downward closed) face list; the empty face is ignored."""
    by_dim: dict[int, set[Face]] = {}
    for f in faces:
        t = tuple(sorted(f))
        if t:
            by_dim.setdefault(len(t) - 1, set()).add(t)
    top = max(by_dim, default=-1)
    grouped = [sorted(by_dim.get(d, ())) for d in range(top + 1)]
    if labels is None:
        labels = sorted({v for fs in grouped for f in fs for v in f})
    return SimplicialComplex(tuple(labels), grouped)


def multipath_complex(g: Digraph, cap: int | None = None) -> SimplicialComplex:
    """X(G): nonempty multipaths as faces, labelled by edge index."""
    return complex_from_faces(multipath_sets(g, cap), range(g.num_edges))


def _check_undirected(n: int, edges: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    seen = set()
    out = []
    for e in edges:
        u, v = (int(x) for x in e)
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) leaves the vertex range")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError(f"duplicate edge {key}")
        seen.add(key)
        out.append(key)
    return out


def matching_complex(n: int, edges: Sequence[Sequence[int]]) -> SimplicialComplex:
    """M(G) for the undirected graph on 0..n-1; labels are positions in ``edges``."""
    es = _check_undirected(n, edges)
    used = [False] * n
    chosen: list[int] = []
    faces: list[Face] = []

    def rec(start: int):
        if chosen:
            faces.append(tuple(chosen))
        for i in range(start, len(es)):
            u, v = es[i]
            if used[u] or used[v]:
                continue
            used[u] = used[v] = True
            chosen.append(i)
            rec(i + 1)
            chosen.pop()
            used[u] = used[v] = False

    rec(0)
    return complex_from_faces(faces, range(len(es)))


def complete_graph_edges(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def is_alternating(g: Digraph) -> bool:
    """Every vertex is a source or a sink (indegree 0 or outdegree 0)."""
    return all(g.in_degree(v) == 0 or g.out_degree(v) == 0 for v in range(g.n))


def complexes_isomorphic_alternating_check(g: Digraph) -> bool:
    """Whether the orientation is alternating; if so, X(G) must equal M(underlying graph)."""
    if not is_alternating(g):
        return False
    x = multipath_complex(g).all_faces()
    m = matching_complex(g.n, g.edges).all_faces()
    if x != m:
        raise AssertionError("alternating digraph whose multipath complex is not its matching complex")
    return True


# -- boundary matrices --------------------------------------------------------

def boundary_rows(x: SimplicialComplex, d: int) -> list[dict[int, int]]:
    """Sparse transpose of the boundary map: one dict per d-face, keyed by (d-1)-face index.

    For d = 0 every vertex maps to the single augmentation coordinate 0.
    """
    if not (0 <= d <= x.dim):
        raise ValueError(f"degree {d} outside 0..{x.dim}")
    if d == 0:
        return [{0: 1} for _ in x.faces[0]]
    lower = x._index[d - 1]
    rows = []
    for f in x.faces[d]:
        row = {}
        for i in range(len(f)):
            row[lower[f[:i] + f[i + 1:]]] = -1 if i % 2 else 1
        rows.append(row)
    return rows


def boundary_matrix(x: SimplicialComplex, d: int) -> list[list[int]]:
    """Dense matrix of the boundary from d-faces (columns) to (d-1)-faces (rows).

    Degree 0 gives the 1 x f_0 augmentation row.
    """
    rows_t = boundary_rows(x, d)
    height = 1 if d == 0 else len(x.faces[d - 1])
    mat = [[0] * len(rows_t) for _ in range(height)]
    for j, col in enumerate(rows_t):
        for i, v in col.items():
            mat[i][j] = v
    return mat


# -- Smith normal form -------------------------------------------------------

def _normalize_divisors(diag: list[int]) -> list[int]:
    """Turn a diagonal of nonzero entries into the invariant-factor chain d1 | d2 | ..."""
    a = sorted(abs(x) for x in diag if x)
    ones = sum(1 for x in a if x == 1)
    rest = a[ones:]
    for i in range(len(rest)):
        for j in range(i + 1, len(rest)):
            g = gcd(rest[i], rest[j])
            if g != rest[i]:
                rest[i], rest[j] = g, rest[i] * rest[j] // g
    rest.sort()
    return [1] * ones + rest


def _dense_diagonalize(mat: list[list[int]]) -> list[int]:
    """Diagonal (not yet a divisor chain) of an integer matrix by unimodular moves."""
    a = [row[:] for row in mat if any(row)]
    diag = []
    while a:
        ncols = len(a[0])
        # pivot: smallest nonzero absolute value
        best = None
        for i, row in enumerate(a):
            for j, v in enumerate(row):
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        while True:
            p = a[pi][pj]
            done = True
            for i, row in enumerate(a):
                if i != pi and row[pj]:
                    q = row[pj] // p
                    if q:
                        prow = a[pi]
                        for j in range(ncols):
                            if prow[j]:
                                row[j] -= q * prow[j]
                    if row[pj]:
                        done = False
            prow = a[pi]
            for j in range(ncols):
                if j != pj and prow[j]:
                    q = prow[j] // p
                    if q:
                        for row in a:
                            if row[pj]:
                                row[j] -= q * row[pj]
                    if prow[j]:
                        done = False
            if done:
                break
            # a smaller remainder exists in the pivot row or column; move the pivot there
            cand = [(abs(a[i][pj]), i, pj) for i in range(len(a)) if a[i][pj]]
            cand += [(abs(a[pi][j]), pi, j) for j in range(ncols) if a[pi][j]]
            _, pi, pj = min(cand)
        diag.append(a[pi][pj])
        a = [row[:pj] + row[pj + 1:] for i, row in enumerate(a) if i != pi]
        a = [row for row in a if any(row)]
    return diag


def _sparse_snf(rows: list[dict[int, int]]) -> list[int]:
    """Invariant factors of a sparse integer matrix given as row dicts.

    Unit pivots are eliminated first with a Markowitz-style choice that keeps
    fill-in low. Whatever survives is handed to the dense routine.
    """
    rows = [dict(r) for r in rows if r]
    cols: dict[int, set[int]] = {}
    for r, row in enumerate(rows):
        for c in row:
            cols.setdefault(c, set()).add(r)
    alive = set(range(len(rows)))
    heap = [(len(row), r) for r, row in enumerate(rows)]
    heapq.heapify(heap)
    units = 0
    parked: set[int] = set()

    while heap:
        length, r = heapq.heappop(heap)
        if r not in alive:
            continue
        row = rows[r]
        if length != len(row):
            heapq.heappush(heap, (len(row), r))
            continue
        if not row:
            alive.discard(r)
            continue
        unit_cols = [c for c, v in row.items() if v in (1, -1)]
        if not unit_cols:
            parked.add(r)
            continue
        c = min(unit_cols, key=lambda k: len(cols[k]))
        p = row[c]
        for r2 in list(cols[c]):
            if r2 == r:
                continue
            row2 = rows[r2]
            f = row2[c] * p  # p is a unit, so row2[c] / p == row2[c] * p
            for k, v in row.items():
                nv = row2.get(k, 0) - f * v
                if nv:
                    if k not in row2:
                        cols[k].add(r2)
                    row2[k] = nv
                else:
                    if k in row2:
                        del row2[k]
                        cols[k].discard(r2)
            parked.discard(r2)
            heapq.heappush(heap, (len(row2), r2))
        for k in row:
            cols[k].discard(r)
        del cols[c]
        alive.discard(r)
        rows[r] = {}
        units += 1

    rest = [rows[r] for r in sorted(alive) if rows[r]]
    if not rest:
        return [1] * units
    used = sorted({c for row in rest for c in row})
    pos = {c: i for i, c in enumerate(used)}
    dense = []
    for row in rest:
        line = [0] * len(used)
        for c, v in row.items():
            line[pos[c]] = v
        dense.append(line)
    return _normalize_divisors([1] * units + _dense_diagonalize(dense))


def smith_normal_form(mat: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], int]:
    """Nonzero invariant factors d1 | d2 | ... and the rank of an integer matrix.

    >>> smith_normal_form([[2, 0], [0, 3]])
    ((1, 6), 2)
    """
    rows = [{j: int(v) for j, v in enumerate(line) if v} for line in mat]
    divs = _sparse_snf(rows)
    return tuple(divs), len(divs)


# -- homology ----------------------------------------------------------------

@dataclass(frozen=True)
class HomologySummary:
    """Reduced integer homology: ``betti[d]`` and ``torsion[d]`` for d = 0..top.

    An empty complex has ``empty=True`` and no groups; its only reduced group
    is H_{-1} = Z, visible through :meth:`groups` and :meth:`profile`.
    """

    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]
    empty: bool = False

    def euler(self) -> int:
        if self.empty:
            return -1
        return sum((-1) ** d * b for d, b in enumerate(self.betti))

    def is_torsion_free(self) -> bool:
        return not any(self.torsion)

    def is_acyclic(self) -> bool:
        return not self.empty and not any(self.betti) and self.is_torsion_free()

    def profile(self) -> dict[int, int]:
        """Nonzero Betti numbers by degree, with {-1: 1} for the empty complex."""
        if self.empty:
            return {-1: 1}
        return {d: b for d, b in enumerate(self.betti) if b}

    def groups(self) -> dict[int, tuple[int, tuple[int, ...]]]:
        """Nonzero groups as degree -> (rank, torsion), degree -1 included."""
        if self.empty:
            return {-1: (1, ())}
        return {d: (b, t) for d, (b, t) in enumerate(zip(self.betti, self.torsion)) if b or t}

    def cohomology(self) -> dict[int, tuple[int, tuple[int, ...]]]:
        """Reduced cohomology by universal coefficients: free part of H_d plus torsion of H_{d-1}."""
        hom = self.groups()
        out = {}
        for d in sorted(set(hom) | {d + 1 for d in hom}):
            rank = hom.get(d, (0, ()))[0]
            tors = hom.get(d - 1, (0, ()))[1]
            if rank or tors:
                out[d] = (rank, tors)
        return out

    def format_lines(self) -> list[str]:
        if self.empty:
            return ["empty complex (H_-1 = Z)"]
        lines = []
        for d, (b, t) in enumerate(zip(self.betti, self.torsion)):
            parts = ([f"Z^{b}"] if b else []) + [f"Z/{x}" for x in t]
            lines.append(f"H_{d} = " + (" ⊕ ".join(parts) if parts else "0"))
        return lines

    def betti_line(self) -> str:
        prof = self.profile()
        if not prof:
            return "acyclic"
        return " ".join(f"H{d}={b}" for d, b in sorted(prof.items()))


def summary_from_groups(groups: dict[int, tuple[int, Sequence[int]]]) -> HomologySummary:
    """Inverse of :meth:`HomologySummary.groups`."""
    if -1 in groups and groups[-1][0]:
        if any(d >= 0 and (b or t) for d, (b, t) in groups.items()):
            raise ValueError("a complex with H_-1 must be empty")
        return HomologySummary((), (), empty=True)
    top = max((d for d, (b, t) in groups.items() if b or t), default=0)
    betti = tuple(groups.get(d, (0, ()))[0] for d in range(top + 1))
    tors = tuple(tuple(_normalize_divisors(list(groups.get(d, (0, ()))[1]))) for d in range(top + 1))
    return HomologySummary(betti, tors)


def reduced_homology(x: SimplicialComplex) -> HomologySummary:
    if x.is_empty():
        return HomologySummary((), (), empty=True)
    top = x.dim
    ranks = []
    tors = []
    for d in range(top + 1):
        divs = _sparse_snf(boundary_rows(x, d))
        ranks.append(len(divs))
        tors.append(tuple(v for v in divs if v > 1))
    f = x.f_vector
    betti = []
    torsion = []
    for d in range(top + 1):
        above = ranks[d + 1] if d < top else 0
        betti.append(f[d] - ranks[d] - above)
        torsion.append(tors[d + 1] if d < top else ())
    while len(betti) > 1 and not betti[-1] and not torsion[-1]:
        betti.pop()
        torsion.pop()
    return HomologySummary(tuple(betti), tuple(torsion))


def graph_homology(g: Digraph, cap: int | None = None) -> HomologySummary:
    return reduced_homology(multipath_complex(g, cap))


def shift_homology(h: HomologySummary, k: int = 1) -> HomologySummary:
    """Homology of the k-fold suspension (Sigma of empty is S^0)."""
    return summary_from_groups({d + k: v for d, v in h.groups().items()})


def join_homology(a: HomologySummary, b: HomologySummary) -> HomologySummary:
    """Reduced homology of a join by the Kuenneth formula over Z.

    H~_{n+1}(A*B) = sum_{i+j=n} H~_i(A) (x) H~_j(B)  +  sum_{i+j=n-1} Tor(H~_i(A), H~_j(B)),
    with the empty complex contributing H~_{-1} = Z.
    """
    ga, gb = a.groups(), b.groups()
    out: dict[int, list] = {}

    def add(deg, rank, tors):
        slot = out.setdefault(deg, [0, []])
        slot[0] += rank
        slot[1].extend(tors)

    for i, (ra, ta) in ga.items():
        for j, (rb, tb) in gb.items():
            # tensor product
            tens = [t for t in ta for _ in range(rb)] + [t for t in tb for _ in range(ra)]
            tens += [gcd(s, t) for s in ta for t in tb if gcd(s, t) > 1]
            add(i + j + 1, ra * rb, tens)
            # Tor term lands one degree higher
            tor = [gcd(s, t) for s in ta for t in tb if gcd(s, t) > 1]
            if tor:
                add(i + j + 2, 0, tor)
    return summary_from_groups({d: (r, t) for d, (r, t) in out.items()})
