"""Independent brute-force oracles, built on sympy only.

These recompute expected values frozen in the test suite through a
completely separate code path (sympy exact linear algebra / polynomial
arithmetic, no aspec imports except for reading fixture tables).  Run
``python tests/oracles.py`` to regenerate ``tests/golden/oracle_values.json``.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from pathlib import Path

import sympy

GOLDEN = Path(__file__).parent / "golden" / "oracle_values.json"


# --- fixture tables, restated independently ---------------------------------

def ut2():
    # basis e11, e12, e22
    table = {}
    table[(0, 0)] = {0: 1}
    table[(0, 1)] = {1: 1}
    table[(1, 2)] = {1: 1}
    table[(2, 2)] = {2: 1}
    return 3, table, {0: 1, 2: 1}


def dual():
    table = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}}
    return 2, table, {0: 1}


def fat2():
    table = {
        (0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1},
        (0, 2): {2: 1}, (2, 0): {2: 1},
        (1, 1): {2: 1}, (1, 2): {2: 1}, (2, 1): {2: 1}, (2, 2): {2: 1},
    }
    return 3, table, {0: 1}


def m2():
    idx = {(1, 1): 0, (1, 2): 1, (2, 1): 2, (2, 2): 3}
    table = {}
    for (a, b), i in idx.items():
        for (c, d), j in idx.items():
            if b == c:
                table[(i, j)] = {idx[(a, d)]: 1}
    return 4, table, {0: 1, 3: 1}


def mult_vec(dim, table, x, y):
    out = [sympy.Integer(0)] * dim
    for i, xi in enumerate(x):
        for j, yj in enumerate(y):
            if xi and yj:
                for k, c in table.get((i, j), {}).items():
                    out[k] += xi * yj * c
    return out


# --- ext^1 via raw derivation systems ---------------------------------------

def ext1_dim(dim, table, unit, eta_m, eta_n):
    """dim Ext^1 as derivations modulo inner, solved with sympy.

    eta_m / eta_n: list of sympy matrices per algebra basis element.
    """
    dm = eta_m[0].rows
    dn = eta_n[0].rows
    width = dim * dm * dn

    def var(k, u, v):
        return (k * dm + u) * dn + v

    rows = []
    for i in range(dim):
        for j in range(dim):
            prod = table.get((i, j), {})
            for u in range(dm):
                for v in range(dn):
                    row = [sympy.Integer(0)] * width
                    for k, c in prod.items():
                        row[var(k, u, v)] += c
                    for t in range(dn):
                        row[var(i, u, t)] -= eta_n[j][t, v]
                    for t in range(dm):
                        row[var(j, t, v)] -= eta_m[i][u, t]
                    rows.append(row)
    system = sympy.Matrix(rows)
    cocycles = system.nullspace()
    inner = []
    for u0 in range(dm):
        for v0 in range(dn):
            phi = sympy.zeros(dm, dn)
            phi[u0, v0] = 1
            vec = []
            for k in range(dim):
                d = eta_m[k] * phi - phi * eta_n[k]
                vec.extend(list(d))
            inner.append(vec)
    inner_m = sympy.Matrix(inner) if inner else sympy.zeros(0, width)
    inner_rank = inner_m.rank()
    if cocycles:
        z = sympy.Matrix([list(c) for c in cocycles])
        total = sympy.Matrix.vstack(inner_m, z)
        return total.rank() - inner_rank
    return 0


def ext_table_ut2():
    dim, table, unit = ut2()
    one = sympy.Matrix([[1]])
    zero = sympy.Matrix([[0]])
    s1 = [one, zero, zero]   # e11 -> 1
    s2 = [zero, zero, one]   # e22 -> 1
    return {
        "S1S1": ext1_dim(dim, table, unit, s1, s1),
        "S1S2": ext1_dim(dim, table, unit, s1, s2),
        "S2S1": ext1_dim(dim, table, unit, s2, s1),
        "S2S2": ext1_dim(dim, table, unit, s2, s2),
    }


def ext_table_dual():
    dim, table, unit = dual()
    one = sympy.Matrix([[1]])
    zero = sympy.Matrix([[0]])
    s = [one, zero]
    return {"SS": ext1_dim(dim, table, unit, s, s)}


def ext_table_fat2():
    dim, table, unit = fat2()
    one = sympy.Matrix([[1]])
    zero = sympy.Matrix([[0]])
    s_origin = [one, zero, zero]   # x -> 0
    s_one = [one, one, one]        # x -> 1
    return {
        "origin-origin": ext1_dim(dim, table, unit, s_origin, s_origin),
        "origin-one": ext1_dim(dim, table, unit, s_origin, s_one),
        "one-origin": ext1_dim(dim, table, unit, s_one, s_origin),
        "one-one": ext1_dim(dim, table, unit, s_one, s_one),
    }


def ext_table_m2():
    dim, table, unit = m2()
    e = {
        0: sympy.Matrix([[1, 0], [0, 0]]),
        1: sympy.Matrix([[0, 1], [0, 0]]),
        2: sympy.Matrix([[0, 0], [1, 0]]),
        3: sympy.Matrix([[0, 0], [0, 1]]),
    }
    s = [e[0], e[1], e[2], e[3]]
    return {"SS": ext1_dim(dim, table, unit, s, s)}


# --- radical via brute-force nilpotent ideal search --------------------------

def radical_brute(dim, table, unit, candidates):
    """Largest nilpotent two-sided ideal among spans of candidate subsets.

    Desk-scale only: candidates is a list of basis vectors (as indicator
    lists); subsets are tried largest first and the first nilpotent
    two-sided ideal wins.  Independent of the trace-form computation.
    """
    def span_closure_is_ideal(vecs):
        span = sympy.Matrix(vecs)
        rank = span.rank()
        for v in vecs:
            for b in range(dim):
                eb = [1 if t == b else 0 for t in range(dim)]
                for prod in (mult_vec(dim, table, v, eb), mult_vec(dim, table, eb, v)):
                    if sympy.Matrix.vstack(span, sympy.Matrix([prod])).rank() != rank:
                        return False
        return True

    def nilpotent(vecs):
        current = [list(v) for v in vecs]
        for _ in range(dim + 1):
            if all(all(x == 0 for x in v) for v in current):
                return True
            nxt = []
            for u in current:
                for v in vecs:
                    nxt.append(mult_vec(dim, table, u, v))
            m = sympy.Matrix(nxt)
            basis = m.rref()[0]
            current = [list(basis.row(i)) for i in range(min(basis.rows, m.rank()))]
        return False

    best = []
    for size in range(len(candidates), 0, -1):
        for subset in itertools.combinations(candidates, size):
            if span_closure_is_ideal(list(subset)) and nilpotent(list(subset)):
                if size > len(best):
                    best = list(subset)
        if best:
            break
    return len(best)


# --- polynomial quotient dimensions / kernel slices --------------------------

def local_quotient_dim(nvars, relations, point, order):
    """dim k[x]/((relations) + m_point^order) by monomial linear algebra."""
    xs = sympy.symbols(f"y0:{nvars}")
    shifted = []
    for rel in relations:
        expr = sympy.Integer(0)
        for exps, c in rel.items():
            term = sympy.Integer(c.numerator) / sympy.Integer(c.denominator)
            for x, e, p in zip(xs, exps, point):
                term *= (x + p) ** e
            expr += term
        shifted.append(sympy.expand(expr))
    monoms = [m for m in itertools.product(range(order), repeat=nvars) if sum(m) < order]
    monoms.sort(key=lambda m: (sum(m), m))
    index = {m: i for i, m in enumerate(monoms)}

    def poly_vec(expr):
        p = sympy.Poly(expr, *xs) if expr != 0 else None
        v = [sympy.Integer(0)] * len(monoms)
        if p is None:
            return v
        for exps, c in p.terms():
            if sum(exps) < order:
                v[index[tuple(exps)]] += c
        return v

    rows = []
    for rel in shifted:
        for m in monoms:
            mono = sympy.prod([x ** e for x, e in zip(xs, m)])
            rows.append(poly_vec(sympy.expand(rel * mono)))
    if rows:
        rank = sympy.Matrix(rows).rank()
    else:
        rank = 0
    return len(monoms) - rank


def kernel_slice_dim(nvars, relations, point, degree_bound, order):
    """dim of (ker(A -> A/p^N) intersect degree<=d slice), via sympy.

    Returns the dimension of {f : deg f <= d, f = 0 in A/p^N} modulo the
    degree<=d multiples of the relations.
    """
    xs = sympy.symbols(f"y0:{nvars}")
    shifted = []
    for rel in relations:
        expr = sympy.Integer(0)
        for exps, c in rel.items():
            term = sympy.Integer(c.numerator) / sympy.Integer(c.denominator)
            for x, e, p in zip(xs, exps, point):
                term *= (x + p) ** e
            expr += term
        shifted.append(sympy.expand(expr))

    big = [m for m in itertools.product(range(order), repeat=nvars) if sum(m) < order]
    big.sort(key=lambda m: (sum(m), m))
    bidx = {m: i for i, m in enumerate(big)}

    def upto(expr):
        v = [sympy.Integer(0)] * len(big)
        if expr == 0:
            return v
        p = sympy.Poly(expr, *xs)
        for exps, c in p.terms():
            if sum(exps) < order:
                v[bidx[tuple(exps)]] += c
        return v

    rel_rows = []
    for rel in shifted:
        for m in big:
            mono = sympy.prod([x ** e for x, e in zip(xs, m)])
            rel_rows.append(upto(sympy.expand(rel * mono)))
    rel_m = sympy.Matrix(rel_rows) if rel_rows else sympy.zeros(0, len(big))

    slice_monoms = [
        m for m in itertools.product(range(degree_bound + 1), repeat=nvars)
        if sum(m) <= degree_bound
    ]
    slice_monoms.sort(key=lambda m: (sum(m), m))

    # image of each slice monomial in A/p^N: reduce against rel_m row space
    reduced_rel = rel_m.rref()[0]

    def reduce_vec(v):
        v = sympy.Matrix([v])
        for i in range(reduced_rel.rows):
            row = reduced_rel.row(i)
            pivot = next((j for j in range(row.cols) if row[j] != 0), None)
            if pivot is None:
                continue
            c = v[pivot] / row[pivot]
            if c != 0:
                v = v - c * row
        return v

    img_rows = []
    for m in slice_monoms:
        mono = sympy.prod([x ** e for x, e in zip(xs, m)])
        img_rows.append(list(reduce_vec(upto(sympy.expand(mono)))))
    img = sympy.Matrix(img_rows)
    kernel = img.T.nullspace()  # combinations of slice monomials dying in A/p^N

    # degree<=d multiples of relations, in slice-monomial coordinates
    sidx = {m: i for i, m in enumerate(slice_monoms)}
    vd_rows = []
    for rel in shifted:
        reldeg = sympy.Poly(rel, *xs).total_degree()
        for m in slice_monoms:
            if sum(m) + reldeg > degree_bound:
                continue
            mono = sympy.prod([x ** e for x, e in zip(xs, m)])
            prod = sympy.expand(rel * mono)
            v = [sympy.Integer(0)] * len(slice_monoms)
            for exps, c in sympy.Poly(prod, *xs).terms():
                v[sidx[tuple(exps)]] += c
            vd_rows.append(v)
    vd = sympy.Matrix(vd_rows) if vd_rows else sympy.zeros(0, len(slice_monoms))
    vd_rank = vd.rank()
    if kernel:
        kmat = sympy.Matrix([list(k) for k in kernel])
        total = sympy.Matrix.vstack(vd, kmat)
        return total.rank() - vd_rank
    return 0


def main():
    q = Fraction
    values = {
        "ext": {
            "FIX-UT2": ext_table_ut2(),
            "FIX-DUAL": ext_table_dual(),
            "FIX-FAT2": ext_table_fat2(),
            "FIX-M2": ext_table_m2(),
        },
        "radical_dims": {
            "FIX-UT2": radical_brute(*ut2(), candidates=[[0, 1, 0]]),
            "FIX-DUAL": radical_brute(*dual(), candidates=[[0, 1]]),
            "FIX-FAT2": radical_brute(*fat2(), candidates=[[0, 1, -1]]),
        },
        "local_quotient_dims": {
            "LINE@0,n=3": local_quotient_dim(1, [], [0], 3),
            "PARABOLA@origin,n=2": local_quotient_dim(
                2, [{(0, 1): q(1), (2, 0): q(-1)}], [0, 0], 2
            ),
            "FAT2@0,n=4": local_quotient_dim(1, [{(3,): q(1), (2,): q(-1)}], [0], 4),
            "FAT2@1,n=4": local_quotient_dim(1, [{(3,): q(1), (2,): q(-1)}], [1], 4),
        },
        "kernel_slice_dims": {
            "LINE@0,d=5,N=6": kernel_slice_dim(1, [], [0], 5, 6),
            "DUAL@0,d=2,N=3": kernel_slice_dim(1, [{(2,): q(1)}], [0], 2, 3),
            "PARABOLA@origin,d=3,N=5": kernel_slice_dim(
                2, [{(0, 1): q(1), (2, 0): q(-1)}], [0, 0], 3, 5
            ),
            "NODE@(0,1),d=3,N=5": kernel_slice_dim(
                2, [{(1, 1): q(1)}], [0, 1], 3, 5
            ),
            "NODE@origin,d=3,N=5": kernel_slice_dim(
                2, [{(1, 1): q(1)}], [0, 0], 3, 5
            ),
            "FAT2@0,d=2,N=3": kernel_slice_dim(
                1, [{(3,): q(1), (2,): q(-1)}], [0], 2, 3
            ),
        },
    }
    GOLDEN.parent.mkdir(exist_ok=True)
    GOLDEN.write_text(json.dumps(values, indent=2, sort_keys=True) + "\n")
    print(json.dumps(values, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
