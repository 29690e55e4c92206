import random
from itertools import combinations

import pytest

from mpx.digraph import make_digraph


def brute_force_multipaths(g):
    """Every edge subset where each vertex has in/out degree <= 1 and no cycle closes."""
    out = []
    m = g.num_edges
    for k in range(m + 1):
        for s in combinations(range(m), k):
            succ = {}
            ins = set()
            ok = True
            for i in s:
                u, v = g.edges[i]
                if u in succ or v in ins:
                    ok = False
                    break
                succ[u] = v
                ins.add(v)
            if ok:
                for start in succ:
                    x, steps = start, 0
                    while x in succ and steps <= len(succ):
                        x = succ[x]
                        steps += 1
                        if x == start:
                            ok = False
                            break
                    if not ok:
                        break
            if ok:
                out.append(s)
    return out


def random_graph(rng, max_vertices=6, max_edges=8):
    n = rng.randint(1, max_vertices)
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    return make_digraph(n, rng.sample(pairs, rng.randint(0, min(max_edges, len(pairs)))))


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=int):
        r = RESULTS[key]
        terminalreporter.write_line(f"{r.line()} ({r.seconds:.1f} s)")
