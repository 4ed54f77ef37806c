# cython: language_level=3
# cython: boundscheck=False
"""Compiled row-reduction kernels.

Cython twin of ``aspec._kernels_py``; same algorithm, same outputs,
bit for bit.  Entries stay Python ints (arbitrary precision is
required for exactness) — the win over the fallback is loop and
dispatch overhead, which dominates on the dense eliminations the rest
of the package issues.
"""

from math import gcd


def rref_int(rows, Py_ssize_t ncols):
    """See ``aspec._kernels_py.rref_int``."""
    cdef Py_ssize_t nrows, pr, pc, i, j, sel, r
    cdef list m, ri, rp, row, pivots, denoms
    cdef object piv, x, g, v

    m = [list(r_) for r_ in rows]
    nrows = len(m)
    pivots = []
    pr = 0
    for pc in range(ncols):
        sel = -1
        for i in range(pr, nrows):
            if (<list>m[i])[pc] != 0:
                sel = i
                break
        if sel < 0:
            continue
        if sel != pr:
            m[pr], m[sel] = m[sel], m[pr]
        rp = <list>m[pr]
        piv = rp[pc]
        for i in range(nrows):
            if i == pr:
                continue
            ri = <list>m[i]
            x = ri[pc]
            if x == 0:
                continue
            g = 0
            for j in range(ncols):
                v = ri[j] * piv - rp[j] * x
                ri[j] = v
                if v:
                    g = gcd(g, v)
            if g > 1:
                for j in range(ncols):
                    ri[j] //= g
        pivots.append(pc)
        pr += 1
        if pr == nrows:
            break
    denoms = [1] * nrows
    for r in range(len(pivots)):
        pc = <Py_ssize_t>pivots[r]
        row = <list>m[r]
        piv = row[pc]
        if piv < 0:
            for j in range(ncols):
                row[j] = -row[j]
            piv = -piv
        g = piv
        for j in range(ncols):
            if row[j]:
                g = gcd(g, row[j])
            if g == 1:
                break
        if g > 1:
            for j in range(ncols):
                row[j] //= g
            piv //= g
        denoms[r] = piv
    return m, denoms, pivots


def matmul_int(a, b, Py_ssize_t n, Py_ssize_t k, Py_ssize_t m):
    """See ``aspec._kernels_py.matmul_int``."""
    cdef Py_ssize_t i, t, j
    cdef list out, ai, bt, row
    cdef object x, v

    out = []
    for i in range(n):
        ai = <list>a[i]
        row = [0] * m
        for t in range(k):
            x = ai[t]
            if x == 0:
                continue
            bt = <list>b[t]
            for j in range(m):
                v = bt[j]
                if v:
                    row[j] = row[j] + x * v
        out.append(row)
    return out
