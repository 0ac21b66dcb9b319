#!/usr/bin/env python3
"""Tabulate PG(2,q) and AG(2,q) fixtures for q = 2, 3.

Points, generators and subspace lists are computed here by brute force over
F_q, independently of the C++ library, and written to src/geometry_data.inc.
Group orders are verified with a plain closure before anything is written.

Usage: python3 tools/gen_geometry_fixtures.py > src/geometry_data.inc
"""
import itertools
import sys


def proj_points(q):
    pts = []
    for v in itertools.product(range(q), repeat=3):
        if any(v):
            first = next(x for x in v if x)
            if first == 1:
                pts.append(v)
    return sorted(pts)


def normalize(v, q):
    first = next(x for x in v if x)
    inv = pow(first, q - 2, q)
    return tuple((x * inv) % q for x in v)


def vec_mat(v, m, q):
    return tuple(sum(v[i] * m[i][j] for i in range(len(v))) % q for j in range(len(m[0])))


def identity(k):
    return [[int(i == j) for j in range(k)] for i in range(k)]


def transvections(k):
    out = []
    for i in range(k):
        for j in range(k):
            if i != j:
                m = identity(k)
                m[i][j] = 1
                out.append(m)
    return out


def scalings(k, q):
    if q == 2:
        return []
    m = identity(k)
    m[0][0] = 2  # primitive element of F_3
    return [m]


def to_cycles(img):
    seen, parts = set(), []
    for s in range(len(img)):
        if s in seen or img[s] == s:
            seen.add(s)
            continue
        cyc, x = [], s
        while x not in seen:
            seen.add(x)
            cyc.append(x + 1)
            x = img[x]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def closure_order(gens):
    n = len(gens[0])
    ident = tuple(range(n))
    seen, frontier = {ident}, [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[x[i]] for i in range(n))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


def projective(q):
    pts = proj_points(q)
    idx = {p: i for i, p in enumerate(pts)}
    gens = []
    for m in transvections(3) + scalings(3, q):
        gens.append([idx[normalize(vec_mat(p, m, q), q)] for p in pts])
    lines = set()
    for a, b in itertools.combinations(pts, 2):
        span = set()
        for s, t in itertools.product(range(q), repeat=2):
            v = tuple((s * a[i] + t * b[i]) % q for i in range(3))
            if any(v):
                span.add(idx[normalize(v, q)])
        lines.add(tuple(sorted(span)))
    return pts, gens, sorted(lines)


def affine(q):
    pts = sorted(itertools.product(range(q), repeat=2))
    idx = {p: i for i, p in enumerate(pts)}
    gens = []
    for m in transvections(2) + scalings(2, q):
        gens.append([idx[vec_mat(p, m, q)] for p in pts])
    for t in ((1, 0), (0, 1)):
        gens.append([idx[((p[0] + t[0]) % q, (p[1] + t[1]) % q)] for p in pts])
    lines = set()
    for a, b in itertools.combinations(pts, 2):
        d = ((b[0] - a[0]) % q, (b[1] - a[1]) % q)
        line = {idx[((a[0] + s * d[0]) % q, (a[1] + s * d[1]) % q)] for s in range(q)}
        lines.add(tuple(sorted(line)))
    return pts, gens, sorted(lines)


def gl_order(k, q):
    r = 1
    for i in range(k):
        r *= q ** k - q ** i
    return r


FIXTURES = [
    ("pg_2_2", "projective", 2, gl_order(3, 2) // 1),
    ("pg_2_3", "projective", 3, gl_order(3, 3) // 2),
    ("ag_2_2", "affine", 2, 4 * gl_order(2, 2)),
    ("ag_2_3", "affine", 3, 9 * gl_order(2, 3)),
]


def main():
    out = sys.stdout
    out.write("// Generated by tools/gen_geometry_fixtures.py; do not edit.\n")
    out.write("// Points are 1-based; lines list the points of each line.\n")
    for name, kind, q, expected in FIXTURES:
        pts, gens, lines = projective(q) if kind == "projective" else affine(q)
        order = closure_order(gens)
        if order != expected:
            raise SystemExit(f"{name}: closure order {order}, expected {expected}")
        # every line has q+1 (projective) or q (affine) points; two points lie on one line
        size = q + 1 if kind == "projective" else q
        assert all(len(l) == size for l in lines)
        for a, b in itertools.combinations(range(len(pts)), 2):
            assert sum(1 for l in lines if a in l and b in l) == 1
        out.write("{\n")
        out.write(f'    "{name}", "{kind}", {q}, {len(pts)}, {order},\n')
        out.write("    {" + ", ".join(f'"{to_cycles(g)}"' for g in gens) + "},\n")
        out.write("    {" + ", ".join("{" + ", ".join(str(x + 1) for x in l) + "}" for l in lines) + "},\n")
        out.write("    {" + ", ".join('"' + ",".join(map(str, p)) + '"' for p in pts) + "},\n")
        out.write("},\n")


if __name__ == "__main__":
    main()
