"""The acceptance checks, shared by ``mpx verify`` and the test suite.

Every check is deterministic (fixed seeds) and returns a CheckResult.
Timings are kept out of the textual report so that reports are
byte-identical from run to run.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import product

from . import formulas as F
from . import series as S
from .digraph import (
    Digraph,
    all_digraphs,
    alternating_word,
    cartesian_product,
    caterpillar,
    complete,
    complete_bipartite,
    dandelion,
    incomplete_tournament,
    linear_alternating,
    linear_coherent,
    linear_from_word,
    make_digraph,
    polygon_from_word,
    reversed_tournament,
    tournament,
)
from .dynamics import (
    decompose,
    decomposed_homology,
    is_dynamical_region,
    is_minimal_region,
    is_minimal_region_bruteforce,
    join_euler_check,
)
from .homotopy import (
    caterpillar_shape,
    classify_alternating_path,
    classify_caterpillar,
    classify_dandelion,
    classify_grid_AI,
    classify_grid_II,
    classify_linear,
    classify_LxI1,
    classify_polygon,
    suspension_hypothesis,
    suspension_law_check,
    tournament_homotopy,
)
from .multipath import count_multipaths
from .pathposet import chi_fvector, chi_mobius
from .simplicial import (
    complete_graph_edges,
    graph_homology,
    matching_complex,
    reduced_homology,
)

# grids with more edges than this use the module-wise (Kuenneth) oracle
DIRECT_ORACLE_MAX_EDGES = 24


@dataclass
class CheckResult:
    key: str
    title: str
    ok: bool
    detail: str
    seconds: float = field(default=0.0, compare=False)

    def line(self) -> str:
        return f"[{'PASS' if self.ok else 'FAIL'}] {self.key:>2} {self.title}: {self.detail}"


def _timed(key: str, title: str, fn) -> CheckResult:
    t0 = time.perf_counter()
    ok, detail = fn()
    return CheckResult(key, title, ok, detail, time.perf_counter() - t0)


# -- corpora -------------------------------------------------------------------

def random_small_digraph(rng: random.Random, max_edges: int = 8, max_vertices: int = 8) -> Digraph:
    n = rng.randint(2, max_vertices)
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    k = rng.randint(0, min(max_edges, len(pairs)))
    return make_digraph(n, rng.sample(pairs, k))


def decomposition_corpus(random_count: int = 500, seed: int = 2024, max_n: int = 4) -> list[Digraph]:
    graphs = [g for n in range(1, max_n + 1) for g in all_digraphs(n)]
    rng = random.Random(seed)
    graphs += [random_small_digraph(rng) for _ in range(random_count)]
    return graphs


def grid_oracle(g: Digraph):
    if g.num_edges <= DIRECT_ORACLE_MAX_EDGES:
        return graph_homology(g)
    return decomposed_homology(g)


# -- the checks ------------------------------------------------------------------

def check_t7() -> tuple[bool, str]:
    t0 = time.perf_counter()
    h = graph_homology(tournament(7))
    dt = time.perf_counter() - t0
    ok = h.profile() == {2: 6, 3: 15} and h.is_torsion_free() and dt <= 60
    return ok, f"{h.betti_line()}, torsion-free={h.is_torsion_free()}, within 60 s={dt <= 60}"


def check_k3() -> tuple[bool, str]:
    h = graph_homology(complete(3))
    chi = chi_fvector(complete(3))
    ok = h.profile() == {0: 1, 1: 2} and h.is_torsion_free() and chi == F.chi_complete(3) == -1
    return ok, f"{h.betti_line()}, chi={chi}, closed form={F.chi_complete(3)}"


def check_k7_matching() -> tuple[bool, str]:
    t0 = time.perf_counter()
    h = reduced_homology(matching_complex(7, complete_graph_edges(7)))
    dt = time.perf_counter() - t0
    tors1 = h.torsion[1] if len(h.torsion) > 1 else ()
    ok = 3 in tors1 and dt <= 300
    return ok, f"torsion in degree 1 = {list(tors1)}, {h.betti_line()}, within 5 min={dt <= 300}"


def check_formulas() -> tuple[bool, str]:
    bad = []
    for n in range(1, 7):
        if F.chi_complete(n) != chi_fvector(complete(n)):
            bad.append(f"K{n}")
    for n in range(1, 9):
        if F.chi_tournament(n) != chi_fvector(tournament(n)):
            bad.append(f"T{n}")
    for n in range(3, 9):
        if F.chi_reversed_tournament(n) != chi_fvector(reversed_tournament(n)):
            bad.append(f"R{n}")
    for n in range(1, 6):
        for m in range(1, 6):
            if F.chi_bipartite(n, m) != chi_fvector(complete_bipartite(n, m)):
                bad.append(f"K{n},{m}")
    for n in range(1, 9):
        for m in range(1, 9):
            if not F.chi_bipartite_recurrence_check(n, m):
                bad.append(f"rec{n},{m}")
    return not bad, "all closed forms equal brute force" if not bad else f"mismatches: {bad}"


def _fixture_at(name: str, n: int) -> int:
    off, vals = S.load_fixture_with_offset(name)
    return vals[n - off]


def check_series(order: int = 8) -> tuple[bool, str]:
    bad = []
    ns = range(1, order + 1)
    c = S.egf_complete(order)
    for n in ns:
        chi = F.chi_complete(n)
        if c[n] != (-1) ** (n - 1) * chi or chi != -_fixture_at("A066668", n):
            bad.append(f"complete n={n}")
    t = S.egf_tournament(order)
    for n in ns:
        chi = chi_fvector(tournament(n))
        if t[n] != chi or chi != (-1) ** (n + 1) * _fixture_at("A000587", n):
            bad.append(f"tournament n={n}")
    r = S.egf_reversed(order)
    for n in ns:
        chi = chi_fvector(reversed_tournament(n + 2))
        if r[n] != -chi or r[n] != _fixture_at("A101851", n):
            bad.append(f"reversed n={n}")
    fb = S.gf_bipartite(order)
    fc = S.gf_bipartite_count(order)
    for (n, m), v in fb.items():
        if n and m and v != -chi_fvector(complete_bipartite(n, m)):
            bad.append(f"F({n},{m})")
        if v != -F.chi_bipartite(n, m):
            bad.append(f"F closed form ({n},{m})")
    for (n, m), v in fc.items():
        brute = count_multipaths(complete_bipartite(n, m)) if n and m else 1
        if v != brute:
            bad.append(f"F'({n},{m})")
    if S.antidiagonals(fc, order) != S.load_fixture("A088699")[: order * (order + 1) // 2]:
        bad.append("A088699")
    lah_rows = [F.lah(n, k) for n in range(1, 8) for k in range(1, n + 1)]
    if lah_rows != S.load_fixture("A105278")[: len(lah_rows)]:
        bad.append("A105278")
    detail = "8 coefficients of each series agree with brute force and fixtures (signs as documented)"
    return not bad, detail if not bad else f"mismatches: {bad}"


def check_decomposition(corpus: list[Digraph]) -> tuple[bool, str]:
    bad = []
    for idx, g in enumerate(corpus):
        mods = decompose(g)
        flat = sorted(i for m in mods for i in m)
        if flat != list(range(g.num_edges)):
            bad.append((idx, "not a partition"))
            continue
        for m in mods:
            if not is_dynamical_region(g, m):
                bad.append((idx, "invalid region"))
            elif len(m) <= 8:
                if not is_minimal_region_bruteforce(g, m):
                    bad.append((idx, "not minimal"))
            elif not is_minimal_region(g, m):
                bad.append((idx, "not minimal"))
        if not join_euler_check(g):
            bad.append((idx, "join check"))
    return not bad, f"{len(corpus)} digraphs, {len(bad)} failures" + (f", first {bad[:3]}" if bad else "")


def check_euler_double_entry(corpus: list[Digraph]) -> tuple[bool, str]:
    bad = [i for i, g in enumerate(corpus) if chi_mobius(g) != chi_fvector(g)]
    return not bad, f"{len(corpus)} digraphs, {len(bad)} disagreements"


def check_classifiers() -> tuple[bool, str]:
    counts: dict[str, int] = {}
    bad = []
    torsion = []

    def record(family, label, typ, h):
        counts[family] = counts.get(family, 0) + 1
        if not h.is_torsion_free():
            torsion.append((family, label))
        if not typ.matches(h):
            bad.append((family, label, str(typ), h.betti_line()))

    for ell in range(1, 11):
        for w in product("fb", repeat=ell):
            w = "".join(w)
            record("linear", w, classify_linear(w), graph_homology(linear_from_word(w)))
    for v in range(2, 12):
        record("alternating", v, classify_alternating_path(v), graph_homology(linear_from_word(alternating_word(v - 1))))
    for ell in range(3, 10):
        for w in product("fb", repeat=ell):
            w = "".join(w)
            record("polygon", w, classify_polygon(w), graph_homology(polygon_from_word(w)))
    for n in range(0, 5):
        for m in range(0, 5):
            g = cartesian_product(linear_coherent(n), linear_coherent(m))
            record("grid II", (n, m), classify_grid_II(n, m), grid_oracle(g))
    for n in range(1, 5):
        for m in range(1, 3):
            g = cartesian_product(linear_alternating(n), linear_coherent(m))
            record("grid AI", (n, m), classify_grid_AI(n, m), grid_oracle(g))
    for n in range(0, 5):
        for m in range(0, 5):
            if n + m:
                record("dandelion", (n, m), classify_dandelion(n, m), graph_homology(dandelion(n, m)))
    for legs in covered_caterpillars(11):
        record("caterpillar", tuple(legs), classify_caterpillar(legs), graph_homology(caterpillar(legs)))
    for n in range(1, 8):
        record("tournament", n, tournament_homotopy(n), graph_homology(tournament(n)))
    for ell in range(1, 7):
        for w in product("fb", repeat=ell):
            w = "".join(w)
            g = cartesian_product(linear_from_word(w), linear_coherent(1))
            record("L x I1", w, classify_LxI1(w), graph_homology(g))
    total = sum(counts.values())
    detail = f"{total} instances ({', '.join(f'{k} {v}' for k, v in counts.items())}); " \
             f"{len(bad)} mismatches, {len(torsion)} with torsion"
    if bad:
        detail += f"; first {bad[:3]}"
    return not bad and not torsion, detail


def caterpillar_leg_lists(max_edges: int):
    """Every leg list whose caterpillar has at most max_edges edges."""
    def rec(prefix, spine, left):
        if len(prefix) == spine:
            yield list(prefix)
            return
        for x in range(left + 1):
            yield from rec(prefix + [x], spine, left - x)

    for spine in range(1, max_edges + 2):
        budget = max_edges - (spine - 1)
        if budget < 0:
            break
        yield from rec([], spine, budget)


def covered_caterpillars(max_edges: int) -> list[list[int]]:
    return [legs for legs in caterpillar_leg_lists(max_edges)
            if legs != [0] and caterpillar_shape(legs) is not None]


def check_incomplete_tournaments(max_n: int = 5) -> tuple[bool, str]:
    total = 0
    bad = []
    for n in range(0, max_n + 1):
        for mask in range(1 << (n + 1)):
            removed = [i for i in range(n + 1) if mask >> i & 1]
            h = graph_homology(incomplete_tournament(n, removed))
            total += 1
            if not h.is_torsion_free():
                bad.append((n, removed, h.torsion))
    return not bad, f"{total} incomplete tournaments, {len(bad)} with torsion"


def check_suspension(count: int = 200, seed: int = 7) -> tuple[bool, str]:
    rng = random.Random(seed)
    passed = failed = 0
    first = None
    while passed + failed < count:
        g = random_small_digraph(rng, max_edges=6, max_vertices=6)
        if not suspension_hypothesis(g):
            continue
        if suspension_law_check(g):
            passed += 1
        else:
            failed += 1
            if first is None:
                first = g
    detail = f"{passed} of {count} hypothesis-satisfying digraphs pass"
    if first is not None:
        detail += f"; first counterexample {first!r}"
    return failed == 0, detail


def check_conjecture(n: int = 4, sampled: int = 10_000, seed: int = 11) -> tuple[bool, str]:
    """chi(X(K_n)) >= chi(X(G)) for every G on n vertices, exhaustively; n+1 sampled."""
    parts = []
    ok = True
    for k in range(1, n + 1):
        bound = F.chi_complete(k)
        worst = None
        violations = 0
        for g in all_digraphs(k):
            c = chi_fvector(g)
            if c > bound:
                violations += 1
                if worst is None or c > worst[0]:
                    worst = (c, g)
        if violations:
            ok = False
            parts.append(f"n={k}: {violations} violations (chi(K_{k})={bound}, e.g. chi={worst[0]} for {worst[1]!r})")
        else:
            parts.append(f"n={k}: holds")
    if sampled:
        k = n + 1
        bound = F.chi_complete(k)
        rng = random.Random(seed)
        pairs = [(i, j) for i in range(k) for j in range(k) if i != j]
        viol = 0
        for _ in range(sampled):
            g = make_digraph(k, [p for p in pairs if rng.random() < 0.5])
            if chi_fvector(g) > bound:
                viol += 1
        parts.append(f"n={k} sampled {sampled}: {viol} violations")
        ok = ok and viol == 0
    return ok, "; ".join(parts)


def check_torsion_conjecture(max_edges: int = 8, count: int = 300, seed: int = 3) -> tuple[bool, str]:
    """Experiment: every module whose complex has torsion is stable (all vertices sources or sinks)."""
    rng = random.Random(seed)
    seen = 0
    bad = []
    for _ in range(count):
        g = random_small_digraph(rng, max_edges=max_edges, max_vertices=max_edges)
        for m in decompose(g):
            sub = g.edge_subgraph(sorted(m))
            h = graph_homology(sub)
            if not h.is_torsion_free():
                seen += 1
                if any(sub.in_degree(v) and sub.out_degree(v) for v in range(sub.n)):
                    bad.append(sub)
    return not bad, f"{count} random digraphs, {seen} modules with torsion, {len(bad)} unstable among them"


# -- suite -----------------------------------------------------------------------

def _corpus_checks(which: str):
    corpus = decomposition_corpus()
    if which == "6":
        return check_decomposition(corpus)
    return check_euler_double_entry(corpus)


CRITERIA = [
    ("1", "T7 homology", check_t7),
    ("2", "K3 shape", check_k3),
    ("3", "K7 matching torsion", check_k7_matching),
    ("4", "closed forms vs brute force", check_formulas),
    ("5", "generating functions and fixtures", check_series),
    ("6", "module decomposition", lambda: _corpus_checks("6")),
    ("7", "Moebius vs f-vector", lambda: _corpus_checks("7")),
    ("8", "family classifiers vs oracle", check_classifiers),
    ("9", "incomplete tournaments torsion-free", check_incomplete_tournaments),
    ("10", "suspension law", check_suspension),
    ("11", "bounded conjecture", check_conjecture),
]


def run_one(key: str) -> CheckResult:
    for k, title, fn in CRITERIA:
        if k == key:
            return _timed(k, title, fn)
    raise KeyError(key)


def run_all(jobs: int = 1) -> list[CheckResult]:
    keys = [k for k, _, _ in CRITERIA]
    if jobs <= 1:
        return [run_one(k) for k in keys]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_one, keys))


def report(results: list[CheckResult], timings: bool = False) -> str:
    lines = []
    for r in results:
        line = r.line()
        if timings:
            line += f" ({r.seconds:.1f} s)"
        lines.append(line)
    passed = sum(r.ok for r in results)
    lines.append(f"{passed}/{len(results)} criteria pass")
    return "\n".join(lines) + "\n"
