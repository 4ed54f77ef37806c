"""Pure-Python row-reduction kernels.

Reference implementation of the hot loops; ``aspec._kernels`` is the
compiled Cython twin with identical semantics.  Both operate on plain
Python integers (arbitrary precision) so results are exact; callers
clear denominators before entering and rebuild Fractions afterwards.
"""

from math import gcd


def rref_int(rows, ncols):
    """Reduced row echelon form of an integer matrix, exactly over Q.

    ``rows`` is a list of equal-length lists of ints.  Returns
    ``(reduced, denoms, pivots)`` where row *i* of the rational RREF is
    ``reduced[i][j] / denoms[i]``.  Zero rows sink to the bottom with
    denominator 1.  Elimination is fraction-free (two-term integer
    updates, per-row gcd compression), so the only divisions performed
    are exact.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    pivots = []
    pr = 0
    for pc in range(ncols):
        sel = -1
        for i in range(pr, nrows):
            if m[i][pc] != 0:
                sel = i
                break
        if sel < 0:
            continue
        if sel != pr:
            m[pr], m[sel] = m[sel], m[pr]
        piv = m[pr][pc]
        rp = m[pr]
        for i in range(nrows):
            if i == pr:
                continue
            ri = m[i]
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
        pc = pivots[r]
        row = m[r]
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


def matmul_int(a, b, n, k, m):
    """Product of an n*k and a k*m integer matrix (lists of lists)."""
    out = []
    for i in range(n):
        ai = a[i]
        row = [0] * m
        for t in range(k):
            x = ai[t]
            if x == 0:
                continue
            bt = b[t]
            for j in range(m):
                v = bt[j]
                if v:
                    row[j] += x * v
        out.append(row)
    return out
