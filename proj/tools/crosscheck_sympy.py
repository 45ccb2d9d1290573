#!/usr/bin/env python3
"""Cross-checks the named systems against independent SymPy definitions.

For each (family, n) the script rebuilds the generators in SymPy, compares them
with the frozen file in tests/data/golden, and compares SymPy's reduced
Groebner basis over GF(p) with the one written by `f5gb run --mode buchberger`.

Usage: crosscheck_sympy.py PATH/TO/f5gb [GOLDEN_DIR]
"""

import subprocess
import sys
import tempfile
from pathlib import Path

import sympy as sp

P = 32003


def katsura(n):
    u = sp.symbols(f"x1:{n + 2}")

    def uu(l):
        l = abs(l)
        return u[l] if l <= n else 0

    eqs = [sum(uu(l) for l in range(-n, n + 1)) - 1]
    for m in range(n):
        eqs.append(sum(uu(l) * uu(m - l) for l in range(-n, n + 1)) - uu(m))
    return list(u), eqs


def cyclic(n):
    x = sp.symbols(f"x1:{n + 1}")
    eqs = []
    for k in range(1, n):
        eqs.append(sum(sp.prod(x[(i + j) % n] for j in range(k)) for i in range(n)))
    eqs.append(sp.prod(x) - 1)
    return list(x), eqs


def eco(n):
    x = sp.symbols(f"x1:{n + 1}")
    eqs = []
    for k in range(1, n):
        inner = x[k - 1] + sum(x[i - 1] * x[i + k - 1] for i in range(1, n - k))
        eqs.append(sp.expand(inner * x[n - 1]) - k)
    eqs.append(sum(x[: n - 1]) + 1)
    return list(x), eqs


def read_sys(path):
    lines = [l.strip() for l in Path(path).read_text().splitlines()]
    lines = [l for l in lines if l and not l.startswith("#")]
    header = dict(w.split("=", 1) for w in lines[0].split()[1:])
    names = header["vars"].split(",")
    syms = sp.symbols(names)
    env = dict(zip(names, syms))
    polys = [sp.sympify(l.replace("^", "**"), locals=env) for l in lines[1:]]
    return list(syms), polys


def as_poly_set(polys, gens):
    out = set()
    for p in polys:
        q = sp.Poly(p, *gens, modulus=P)
        if not q.is_zero:
            q = q.monic()
        out.add(tuple(sorted(q.terms())))
    return out


def main():
    tool = sys.argv[1]
    golden = Path(sys.argv[2]) if len(sys.argv) > 2 else Path(__file__).parent.parent / "tests/data/golden"
    cases = [("katsura", katsura, [2, 3, 4]), ("cyclic", cyclic, [3, 4, 5]), ("eco", eco, [4, 5, 6])]
    failures = 0
    for name, build, ns in cases:
        for n in ns:
            gens, eqs = build(n)
            fgens, fpolys = read_sys(golden / f"{name}{n}.sys")
            same_gens = as_poly_set(eqs, gens) == as_poly_set(fpolys, fgens)
            gb = sp.groebner(eqs, *gens, modulus=P, order="grevlex")
            with tempfile.TemporaryDirectory() as tmp:
                out = Path(tmp) / "gb.sys"
                subprocess.run([tool, "run", "--system", f"{name}:{n}", "--mode", "buchberger",
                                "--basis-out", str(out)], check=True, stdout=subprocess.DEVNULL)
                bgens, bpolys = read_sys(out)
            same_gb = as_poly_set(gb.exprs, gens) == as_poly_set(bpolys, bgens)
            ok = same_gens and same_gb
            failures += not ok
            print(f"{'ok  ' if ok else 'FAIL'} {name}{n} generators={'same' if same_gens else 'differ'} "
                  f"reduced_gb={'same' if same_gb else 'differ'} size={len(gb.exprs)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
