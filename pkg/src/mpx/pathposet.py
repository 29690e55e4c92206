"""The path poset of a digraph, its Moebius function from the bottom, and chi-tilde."""

from __future__ import annotations

from dataclasses import dataclass, field

from .digraph import Digraph
from .multipath import Multipath, multipath_sets


def _mask(s) -> int:
    m = 0
    for i in s:
        m |= 1 << i
    return m


@dataclass
class PathPoset:
    """Multipaths ordered by edge-set containment; element 0 is the empty multipath."""

    graph: Digraph
    elements: list[Multipath]
    _masks: list[int] = field(repr=False, default_factory=list)
    _pos: dict[int, int] = field(repr=False, default_factory=dict)
    _mu: dict[int, int] = field(repr=False, default_factory=dict)

    def __post_init__(self):
        self._masks = [_mask(p.edges) for p in self.elements]
        self._pos = {mk: i for i, mk in enumerate(self._masks)}

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, edges) -> int:
        return self._pos[_mask(edges)]

    def leq(self, a: int, b: int) -> bool:
        ma, mb = self._masks[a], self._masks[b]
        return ma & mb == ma

    def below(self, g: int) -> list[int]:
        """Indices of the elements strictly below element g."""
        mg = self._masks[g]
        out = []
        sub = (mg - 1) & mg
        while True:
            if sub in self._pos:
                out.append(self._pos[sub])
            if sub == 0:
                break
            sub = (sub - 1) & mg
        return out if mg else []


def build_path_poset(g: Digraph, cap: int | None = None) -> PathPoset:
    return PathPoset(g, [Multipath(g, s) for s in multipath_sets(g, cap)])


def mobius_from_bottom(p: PathPoset, g: int | Multipath) -> int:
    """mu(bottom, g) by the defining recursion mu(u,u)=1, mu(u,w) = -sum_{u<=v<w} mu(u,v)."""
    idx = g if isinstance(g, int) else p.index(g.edges)
    memo = p._mu
    # iterative post-order so long chains do not hit the recursion limit
    stack = [idx]
    while stack:
        x = stack[-1]
        if x in memo:
            stack.pop()
            continue
        if x == 0:
            memo[0] = 1
            stack.pop()
            continue
        low = p.below(x)
        todo = [y for y in low if y not in memo]
        if todo:
            stack.extend(todo)
            continue
        memo[x] = -sum(memo[y] for y in low)
        stack.pop()
    return memo[idx]


def chi_mobius(g: Digraph, cap: int | None = None) -> int:
    """chi-tilde as minus the sum of mu(bottom, p) over the whole path poset."""
    p = build_path_poset(g, cap)
    return -sum(mobius_from_bottom(p, i) for i in range(len(p)))


def chi_fvector(g: Digraph, cap: int | None = None) -> int:
    """chi-tilde as the alternating face count, the empty face counted in degree -1."""
    from .multipath import count_by_length

    return sum((-1) ** (ell + 1) * c for ell, c in enumerate(count_by_length(g, cap)))


def reduced_euler_characteristic(g: Digraph, method: str = "both", cap: int | None = None) -> int:
    if method == "mobius":
        return chi_mobius(g, cap)
    if method == "fvector":
        return chi_fvector(g, cap)
    if method != "both":
        raise ValueError(f"unknown method {method!r}")
    a, b = chi_mobius(g, cap), chi_fvector(g, cap)
    if a != b:
        raise AssertionError(f"Moebius value {a} differs from f-vector value {b}")
    return a
