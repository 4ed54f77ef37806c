"""Exact dense linear algebra over the rationals.

Scalars are ``fractions.Fraction`` (always lowest terms, positive
denominator, exact arithmetic).  Vectors are tuples of Fractions and
matrices are immutable dense grids of them.  Row reduction funnels
through the kernel backend selected in :mod:`aspec._backend`.

Conventions used throughout the package:

* vectors are rows; a linear map sends ``v`` to ``v @ m``;
* ``kernel_basis`` returns the right null space (``m @ v == 0`` with
  ``v`` read as a column), which with the row convention is the space
  of solutions of a homogeneous system;
* ``solve_linear`` returns the particular solution with zeros in every
  free (non-pivot) coordinate, so all downstream computations are
  reproducible bit for bit.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from aspec._backend import kernels

QQ = Fraction

Vector = tuple[Fraction, ...]


def _frac(x) -> Fraction:
    return x if type(x) is Fraction else Fraction(x)


def vector(entries) -> Vector:
    return tuple(_frac(x) for x in entries)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c, a: Vector) -> Vector:
    c = _frac(c)
    return tuple(c * x for x in a)


def is_zero_vector(a) -> bool:
    return all(x == 0 for x in a)


class Matrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols: int | None = None):
        self.rows = tuple(tuple(_frac(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        if self.nrows:
            self.ncols = len(self.rows[0])
            if any(len(r) != self.ncols for r in self.rows):
                raise ValueError("ragged matrix")
        else:
            if ncols is None:
                raise ValueError("empty matrix needs an explicit column count")
            self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([unit_vector(n, i) for i in range(n)], ncols=n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([zero_vector(ncols) for _ in range(nrows)], ncols=ncols)

    @classmethod
    def from_rows(cls, vectors, ncols: int | None = None) -> "Matrix":
        return cls(list(vectors), ncols=ncols)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [vec_add(a, b) for a, b in zip(self.rows, other.rows)], ncols=self.ncols
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [vec_sub(a, b) for a, b in zip(self.rows, other.rows)], ncols=self.ncols
        )

    def __neg__(self) -> "Matrix":
        return Matrix([vec_scale(-1, r) for r in self.rows], ncols=self.ncols)

    def scale(self, c) -> "Matrix":
        return Matrix([vec_scale(c, r) for r in self.rows], ncols=self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in matrix product")
        if self.nrows == 0 or other.ncols == 0 or self.ncols == 0:
            return Matrix.zeros(self.nrows, other.ncols)
        return _matmul(self, other)

    def transpose(self) -> "Matrix":
        return Matrix(
            [tuple(r[j] for r in self.rows) for j in range(self.ncols)],
            ncols=self.nrows,
        )

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def apply(self, v: Vector) -> Vector:
        """Row vector times matrix: v @ self."""
        if len(v) != self.nrows:
            raise ValueError("vector/matrix shape mismatch")
        out = [Fraction(0)] * self.ncols
        for x, r in zip(v, self.rows):
            if x:
                for j, y in enumerate(r):
                    if y:
                        out[j] += x * y
        return tuple(out)

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        return rref(self)

    def rank(self) -> int:
        return len(rref(self)[1])

    def inverse(self) -> "Matrix | None":
        """Inverse, or None when singular."""
        if self.nrows != self.ncols:
            return None
        n = self.nrows
        aug = Matrix(
            [self.rows[i] + unit_vector(n, i) for i in range(n)], ncols=2 * n
        )
        red, piv = rref(aug)
        if list(piv) != list(range(n)):
            return None
        return Matrix([r[n:] for r in red.rows], ncols=n)

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    def flatten(self) -> Vector:
        return tuple(x for r in self.rows for x in r)


def _clear_rows(rows):
    """Integer rows plus per-row denominators (row * denom is integral)."""
    nums = []
    dens = []
    for r in rows:
        d = 1
        for x in r:
            d = lcm(d, x.denominator)
        nums.append([int(x * d) for x in r])
        dens.append(d)
    return nums, dens


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    na, da = _clear_rows(a.rows)
    nb, db = _clear_rows(b.rows)
    # fold b's per-row denominators into the integer data so the integer
    # product needs only one rational correction per (row of a).
    dball = 1
    for d in db:
        dball = lcm(dball, d)
    if dball != 1:
        nb = [[x * (dball // db[t]) for x in row] for t, row in enumerate(nb)]
    prod = kernels.matmul_int(na, nb, a.nrows, a.ncols, b.ncols)
    return Matrix(
        [
            tuple(Fraction(x, da[i] * dball) for x in prod[i])
            for i in range(a.nrows)
        ],
        ncols=b.ncols,
    )


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns; row space preserved."""
    if m.nrows == 0:
        return m, ()
    nums, _dens = _clear_rows(m.rows)
    red, denoms, pivots = kernels.rref_int(nums, m.ncols)
    rows = [
        tuple(Fraction(red[i][j], denoms[i]) for j in range(m.ncols))
        for i in range(m.nrows)
    ]
    return Matrix(rows, ncols=m.ncols), tuple(pivots)


def kernel_basis(m: Matrix) -> list[Vector]:
    """Exact basis of the right null space; len == cols - rank."""
    red, pivots = rref(m)
    free = [j for j in range(m.ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -red.rows[r][f]
        basis.append(tuple(v))
    return basis


def solve_linear(m: Matrix, rhs) -> tuple[Vector, list[Vector]] | None:
    """Solve m x = rhs (x a column vector).

    Returns ``(particular, kernel)`` with the particular solution having
    zeros at all free coordinates, or None when the system is
    inconsistent.
    """
    rhs = vector(rhs)
    if len(rhs) != m.nrows:
        raise ValueError("rhs length must equal row count")
    aug = Matrix(
        [m.rows[i] + (rhs[i],) for i in range(m.nrows)], ncols=m.ncols + 1
    )
    red, pivots = rref(aug)
    if m.ncols in pivots:
        return None
    x = [Fraction(0)] * m.ncols
    for r, p in enumerate(pivots):
        x[p] = red.rows[r][m.ncols]
    return tuple(x), kernel_basis(m)


def span_rows(vectors, ncols: int) -> list[Vector]:
    """Canonical (RREF) basis of the span of the given row vectors."""
    vecs = [v for v in vectors if not is_zero_vector(v)]
    if not vecs:
        return []
    red, pivots = rref(Matrix(vecs, ncols=ncols))
    return [red.rows[i] for i in range(len(pivots))]


def in_span(basis_rref: list[Vector], v: Vector) -> bool:
    """Membership test against an RREF basis."""
    return is_zero_vector(reduce_mod_span(basis_rref, v))


def reduce_mod_span(basis_rref: list[Vector], v: Vector) -> Vector:
    """Reduce v modulo the row span of an RREF basis (pivot elimination)."""
    w = list(v)
    for row in basis_rref:
        p = next((j for j, x in enumerate(row) if x != 0), None)
        if p is None:
            continue
        c = w[p] / row[p]
        if c:
            for j, x in enumerate(row):
                if x:
                    w[j] -= c * x
    return tuple(w)


def extend_to_complement(base: list[Vector], candidates, ncols: int) -> list[Vector]:
    """Pick candidates that extend ``base`` to a larger independent set.

    Returns the chosen candidates (in input order); deterministic.
    """
    current = list(base)
    rank = len(span_rows(current, ncols))
    chosen = []
    for v in candidates:
        trial = span_rows(current + [v], ncols)
        if len(trial) > rank:
            rank = len(trial)
            current.append(v)
            chosen.append(v)
    return chosen


def charpoly(m: Matrix) -> list[Fraction]:
    """Characteristic polynomial by Faddeev–LeVerrier.

    Returns coefficients ``[1, c1, ..., cn]`` of
    ``x^n + c1 x^(n-1) + ... + cn``; exact.
    """
    n = m.nrows
    if n != m.ncols:
        raise ValueError("characteristic polynomial needs a square matrix")
    coeffs = [Fraction(1)]
    nmat = Matrix.identity(n)
    for i in range(1, n + 1):
        nmat = _matmul(m, nmat)
        c = -nmat.trace() / i
        coeffs.append(c)
        nmat = Matrix(
            [
                tuple(
                    nmat.rows[r][s] + (c if r == s else 0) for s in range(n)
                )
                for r in range(n)
            ],
            ncols=n,
        )
    return coeffs


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def rational_roots(coeffs: list[Fraction]) -> list[Fraction]:
    """All rational roots of the polynomial with the given coefficients.

    ``coeffs`` run from the leading term down; exact evaluation verifies
    every candidate, so the output is complete and correct.
    """
    if all(c == 0 for c in coeffs):
        raise ValueError("zero polynomial")
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    while ints and ints[0] == 0:
        ints = ints[1:]
    roots = set()
    nzero = 0
    while ints and ints[-1] == 0:
        ints = ints[:-1]
        nzero += 1
    if nzero:
        roots.add(Fraction(0))
    if len(ints) > 1:
        lead, const = ints[0], ints[-1]
        for p in _divisors(const):
            for q in _divisors(lead):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    acc = Fraction(0)
                    for c in ints:
                        acc = acc * cand + c
                    if acc == 0:
                        roots.add(cand)
    return sorted(roots)
