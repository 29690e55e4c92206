"""Regenerate the OEIS prefix fixtures from their defining formulas with sympy.

Run from the repository root:  python3 tools/make_fixtures.py
sympy is only needed here, not by the package.
"""

import argparse
from pathlib import Path

import sympy as sp
from sympy.functions.combinatorial.numbers import stirling
from sympy.polys.domains import QQ
from sympy.polys.ring_series import rs_exp, rs_mul, rs_series_inversion
from sympy.polys.rings import ring

R, X = ring("X", QQ)


def egf_terms(f, count):
    coeffs = dict(f.terms())
    return [int(coeffs.get((n,), 0) * sp.factorial(n)) for n in range(count)]


def exp_x_over_1px(count):
    return rs_exp(rs_mul(X, rs_series_inversion(1 + X, X, count), X, count), X, count)


def exp_1_minus_expx(count):
    return rs_exp(1 - rs_exp(X, X, count), X, count)


def lah_row(n):
    return [int(sp.binomial(n - 1, k - 1) * sp.factorial(n) / sp.factorial(k)) for k in range(1, n + 1)]


def build(count):
    out = {}
    out["A066668"] = (0, "e.g.f. exp(x/(1+x))", egf_terms(exp_x_over_1px(count), count))
    out["A000587"] = (0, "e.g.f. exp(1-exp(x)), complementary Bell numbers", egf_terms(exp_1_minus_expx(count), count))
    out["A101851"] = (
        1,
        "a(n) = sum_{k=1..n} (-1)^(n-k) k S2(n,k)",
        [sum((-1) ** (n - k) * k * int(stirling(n, k)) for k in range(1, n + 1)) for n in range(1, count)],
    )
    rows = 8
    diag = []
    for s in range(rows):
        for n in range(s, -1, -1):
            m = s - n
            diag.append(sum(int(sp.binomial(n, k) * sp.binomial(m, k) * sp.factorial(k)) for k in range(min(n, m) + 1)))
    out["A088699"] = (0, "T(n,m) = sum_k C(n,k) C(m,k) k!, read by antidiagonals", diag)
    out["A105278"] = (1, "Lah triangle T(n,k) = C(n-1,k-1) n!/k!, 1 <= k <= n, read by rows", [v for n in range(1, rows) for v in lah_row(n)])
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="src/mpx/fixtures")
    ap.add_argument("--terms", type=int, default=13)
    args = ap.parse_args()
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for name, (offset, desc, vals) in build(args.terms).items():
        lines = [f"# {name}: {desc}", "# generated offline by tools/make_fixtures.py (sympy)", f"# offset: {offset}"]
        lines += [str(v) for v in vals]
        (outdir / f"{name}.txt").write_text("\n".join(lines) + "\n")
        print(name, vals[:10])


if __name__ == "__main__":
    main()
