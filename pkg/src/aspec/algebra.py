"""Finite-dimensional associative unital algebras over exact rationals.

An algebra is a structure-constant table: basis elements ``b_0..b_{n-1}``
with products ``b_i b_j = sum_k c[i][j][k] b_k`` and a distinguished
coordinate vector for 1.  Everything downstream (ideals, quotients, the
radical, Wedderburn blocks, simple modules) is exact linear algebra on
this table.

The base field is fixed to the rationals.  Results that classically
assume an algebraically closed field are replaced by a runtime "split"
check: when a simple quotient fails to be a full matrix algebra over Q,
:class:`aspec.errors.NotSplit` is raised rather than silently returning
a wrong decomposition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from aspec import linalg
from aspec.errors import BadUnit, NotAnIdeal, NotAssociative, NotSplit
from aspec.linalg import Matrix, Vector

# deterministic pseudo-random search is seeded from tags via crc32
from zlib import crc32
import random


def seeded_rng(tag: str) -> random.Random:
    return random.Random(crc32(tag.encode("utf-8")))


class Algebra:
    """Associative unital algebra given by structure constants."""

    __slots__ = ("dim", "labels", "table", "unit", "_left_regular_cache")

    def __init__(self, labels, table, unit):
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.table = tuple(
            tuple(linalg.vector(table[i][j]) for j in range(self.dim))
            for i in range(self.dim)
        )
        self.unit = linalg.vector(unit)
        if len(self.unit) != self.dim:
            raise ValueError("unit vector has wrong length")
        self._left_regular_cache: dict[int, Matrix] = {}

    def __repr__(self):
        return f"Algebra(dim={self.dim}, labels={list(self.labels)})"

    def basis_vector(self, i: int) -> Vector:
        return linalg.unit_vector(self.dim, i)

    def mult(self, x: Vector, y: Vector) -> Vector:
        """Product of two coordinate vectors."""
        out = [Fraction(0)] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.table[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, ck in enumerate(row[j]):
                    if ck:
                        out[k] += c * ck
        return tuple(out)

    def left_regular(self, x: Vector) -> Matrix:
        """Matrix of left multiplication by x (row convention: v -> v @ L? no:
        row r = coordinates of x * b_r is the wrong order; here row r holds
        x * b_r so that applying to a column recovers x * v).

        The returned matrix M satisfies ``M.apply(v) == mult(x, v)`` with
        ``apply`` reading v as a row vector over basis index r.
        """
        rows = [self.mult(x, self.basis_vector(r)) for r in range(self.dim)]
        return Matrix(rows, ncols=self.dim)

    def right_regular(self, x: Vector) -> Matrix:
        """Matrix with ``M.apply(v) == mult(v, x)``."""
        rows = [self.mult(self.basis_vector(r), x) for r in range(self.dim)]
        return Matrix(rows, ncols=self.dim)

    def basis_left_regular(self, i: int) -> Matrix:
        m = self._left_regular_cache.get(i)
        if m is None:
            m = self.left_regular(self.basis_vector(i))
            self._left_regular_cache[i] = m
        return m

    def power(self, x: Vector, k: int) -> Vector:
        acc = self.unit
        for _ in range(k):
            acc = self.mult(acc, x)
        return acc

    def is_commutative(self) -> bool:
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                if self.table[i][j] != self.table[j][i]:
                    return False
        return True


@dataclass
class ValidationResult:
    ok: bool
    error: str | None = None
    detail: str | None = None

    def raise_if_invalid(self):
        if self.ok:
            return
        if self.error == "NotAssociative":
            raise NotAssociative(self.detail)
        raise BadUnit(self.detail, "")


def validate_algebra(a: Algebra) -> ValidationResult:
    """Exhaustive associativity and unit-law check.

    Reports the first failing triple (i, j, k) or the first basis
    element breaking a unit law.
    """
    n = a.dim
    for i in range(n):
        b = a.basis_vector(i)
        if a.mult(a.unit, b) != b:
            return ValidationResult(False, "BadUnit", f"1*b_{i} != b_{i}")
        if a.mult(b, a.unit) != b:
            return ValidationResult(False, "BadUnit", f"b_{i}*1 != b_{i}")
    for i in range(n):
        bi = a.basis_vector(i)
        for j in range(n):
            bij = a.table[i][j]
            for k in range(n):
                left = a.mult(bij, a.basis_vector(k))
                right = a.mult(bi, a.table[j][k])
                if left != right:
                    return ValidationResult(
                        False, "NotAssociative", f"(b_{i} b_{j}) b_{k} != b_{i} (b_{j} b_{k})"
                    )
    return ValidationResult(True)


class IdealBasis:
    """Two-sided ideal given by a canonical (RREF) basis of its span."""

    __slots__ = ("parent", "vectors")

    def __init__(self, parent: Algebra, vectors):
        self.parent = parent
        self.vectors = tuple(linalg.span_rows([linalg.vector(v) for v in vectors], parent.dim))

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def contains(self, v: Vector) -> bool:
        return linalg.in_span(list(self.vectors), v)

    def is_ideal(self) -> bool:
        a = self.parent
        for v in self.vectors:
            for i in range(a.dim):
                b = a.basis_vector(i)
                if not self.contains(a.mult(b, v)):
                    return False
                if not self.contains(a.mult(v, b)):
                    return False
        return True


def span_product(a: Algebra, span1, span2) -> list[Vector]:
    """RREF basis of span{x*y : x in span1, y in span2}."""
    prods = [a.mult(x, y) for x in span1 for y in span2]
    return linalg.span_rows(prods, a.dim)


def nilpotency_index(a: Algebra, ideal: IdealBasis, cap: int = 64) -> int | None:
    """Smallest k with ideal^k = 0, or None if powers stabilize nonzero."""
    if ideal.dim == 0:
        return 1
    current = list(ideal.vectors)
    k = 1
    while k <= cap:
        if not current:
            return k
        nxt = span_product(a, current, list(ideal.vectors))
        if [tuple(v) for v in nxt] == [tuple(v) for v in current]:
            return None
        current = nxt
        k += 1
    return None


def jacobson_radical(a: Algebra) -> IdealBasis:
    """Radical via the characteristic-zero trace-form criterion.

    rad A = { x : trace(L_{x b}) = 0 for every basis element b }, with L
    the left-regular representation.  Valid precisely over fields of
    characteristic zero, which is all this package supports.
    """
    n = a.dim
    gram = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = a.table[i][j]
            t = Fraction(0)
            for k, c in enumerate(prod):
                if c:
                    t += c * a.basis_left_regular(k).trace()
            row.append(t)
        gram.append(row)
    vecs = linalg.kernel_basis(Matrix(gram, ncols=n))
    return IdealBasis(a, vecs)


def quotient_algebra(a: Algebra, ideal: IdealBasis) -> tuple[Algebra, Matrix]:
    """Quotient by a two-sided ideal, on the non-pivot complement basis.

    Returns the quotient algebra and the projection matrix P (dim x qdim,
    row convention: class of v = P.apply(v)).  The quotient basis is the
    set of non-pivot coordinates of the ideal's RREF — deterministic.
    """
    if not ideal.is_ideal():
        raise NotAnIdeal("span is not closed under multiplication by the algebra")
    n = a.dim
    rows = list(ideal.vectors)
    pivots = []
    for r in rows:
        pivots.append(next(j for j, x in enumerate(r) if x != 0))
    complement = [j for j in range(n) if j not in pivots]
    q = len(complement)

    def project(v: Vector) -> Vector:
        w = linalg.reduce_mod_span(rows, v)
        return tuple(w[c] for c in complement)

    labels = [a.labels[c] for c in complement]
    table = [
        [project(a.mult(a.basis_vector(complement[i]), a.basis_vector(complement[j])))
         for j in range(q)]
        for i in range(q)
    ]
    quot = Algebra(labels, table, project(a.unit))
    proj = Matrix([project(a.basis_vector(i)) for i in range(n)], ncols=q)
    return quot, proj


def algebra_from_subspace(parent: Algebra, vectors, unit: Vector, labels=None):
    """Induced algebra structure on a multiplicatively closed subspace.

    ``vectors`` must span a subalgebra containing ``unit`` as its unit
    element.  Returns ``(algebra, embed, coords)`` with ``embed`` the
    (q x n) basis matrix and ``coords`` a function mapping a parent
    vector inside the span to its subalgebra coordinates.
    """
    basis = linalg.span_rows([linalg.vector(v) for v in vectors], parent.dim)
    q = len(basis)
    pivots = [next(j for j, x in enumerate(r) if x != 0) for r in basis]

    def coords(v: Vector) -> Vector:
        out = [Fraction(0)] * q
        w = list(v)
        for i, row in enumerate(basis):
            c = w[pivots[i]] / row[pivots[i]]
            out[i] = c
            if c:
                for j, x in enumerate(row):
                    if x:
                        w[j] -= c * x
        if any(x != 0 for x in w):
            raise ValueError("vector not in subspace")
        return tuple(out)

    if labels is None:
        labels = [f"s{i}" for i in range(q)]
    table = [
        [coords(parent.mult(basis[i], basis[j])) for j in range(q)]
        for i in range(q)
    ]
    alg = Algebra(labels, table, coords(unit))
    embed = Matrix(basis, ncols=parent.dim) if q else Matrix([], ncols=parent.dim)
    return alg, embed, coords


def center_basis(a: Algebra) -> list[Vector]:
    """Basis of the center {z : zb = bz for all basis b}.

    For each basis element b_j the commutator condition on z is linear
    with coefficient rows (b_j b_r - b_r b_j); all conditions are
    stacked side by side and z ranges over the kernel.
    """
    n = a.dim
    blocks = []
    for j in range(n):
        diff_rows = [
            linalg.vec_sub(a.table[j][r], a.table[r][j]) for r in range(n)
        ]
        blocks.append(diff_rows)
    stacked = Matrix(
        [sum((list(blk[r]) for blk in blocks), []) for r in range(n)],
        ncols=n * n,
    )
    # z runs over rows: z @ stacked = 0  <=>  stacked^T z = 0
    return linalg.kernel_basis(stacked.transpose())


def _split_commutative(a: Algebra, comp_basis: list[Vector], comp_unit: Vector):
    """Primitive idempotents of a commutative semisimple subalgebra.

    ``comp_basis``/``comp_unit`` live in ``a`` coordinates and span a
    commutative semisimple subalgebra (a finite product of fields).
    Splits components by rational eigenvalues of multiplication
    operators; a component of dimension >= 2 that no basis element
    splits is a proper field extension of Q -> NotSplit.
    """
    out = []
    stack = [(linalg.span_rows(comp_basis, a.dim), comp_unit)]
    while stack:
        basis, unit = stack.pop(0)
        m = len(basis)
        if m == 1:
            v = basis[0]
            sq = a.mult(v, v)
            coeff = None
            for j in range(a.dim):
                if v[j] != 0:
                    coeff = sq[j] / v[j]
                    break
            if coeff is None or coeff == 0 or a.mult(v, v) != linalg.vec_scale(coeff, v):
                raise NotSplit("one-dimensional central component is not spanned by an idempotent")
            out.append(linalg.vec_scale(1 / coeff, v))
            continue
        pivots = [next(j for j, x in enumerate(r) if x != 0) for r in basis]

        def coords(v):
            o = [Fraction(0)] * m
            w = list(v)
            for i, row in enumerate(basis):
                c = w[pivots[i]] / row[pivots[i]]
                o[i] = c
                if c:
                    for j, x in enumerate(row):
                        if x:
                            w[j] -= c * x
            return tuple(o)

        split_done = False
        for z in basis:
            mz = Matrix([coords(a.mult(z, b)) for b in basis], ncols=m)
            cp = linalg.charpoly(mz)
            eigs = linalg.rational_roots(cp)
            pieces = []
            covered = 0
            for lam in sorted(eigs, reverse=True):
                shifted = Matrix(
                    [tuple(mz.rows[r][s] - (lam if r == s else 0) for s in range(m))
                     for r in range(m)],
                    ncols=m,
                )
                # eigenvectors as row-coordinate vectors: c with c (M - lam) = 0
                ker = linalg.kernel_basis(shifted.transpose())
                if ker:
                    vecs = []
                    for c in ker:
                        v = linalg.zero_vector(a.dim)
                        for ci, bi in zip(c, basis):
                            if ci:
                                v = linalg.vec_add(v, linalg.vec_scale(ci, bi))
                        vecs.append(v)
                    pieces.append(linalg.span_rows(vecs, a.dim))
                    covered += len(pieces[-1])
            if len(pieces) >= 2 or (pieces and covered < m):
                if covered < m:
                    # non-rational part: on a semisimple operator the image
                    # of prod_lam (M_z - lam) is exactly the complement of
                    # the rational eigenspaces, and it is an ideal.
                    poly_m = Matrix.identity(m)
                    for lam in eigs:
                        shifted = Matrix(
                            [tuple(mz.rows[r][s] - (lam if r == s else 0) for s in range(m))
                             for r in range(m)],
                            ncols=m,
                        )
                        poly_m = poly_m @ shifted
                    rest = []
                    for c in linalg.span_rows(list(poly_m.rows), m):
                        v = linalg.zero_vector(a.dim)
                        for ci, bi in zip(c, basis):
                            if ci:
                                v = linalg.vec_add(v, linalg.vec_scale(ci, bi))
                        rest.append(v)
                    if rest:
                        pieces.append(linalg.span_rows(rest, a.dim))
                # unit of each piece: solve unit = sum of piece components
                all_rows = [v for piece in pieces for v in piece]
                sol = linalg.solve_linear(
                    Matrix(all_rows, ncols=a.dim).transpose(), unit
                )
                if sol is None:
                    raise NotSplit("central idempotent decomposition failed")
                coeffs = sol[0]
                idx = 0
                for piece in pieces:
                    u = linalg.zero_vector(a.dim)
                    for v in piece:
                        u = linalg.vec_add(u, linalg.vec_scale(coeffs[idx], v))
                        idx += 1
                    stack.append((piece, u))
                split_done = True
                break
        if not split_done:
            raise NotSplit(
                "central component of dimension "
                f"{m} has no rational eigenvalue splitting (proper field extension)"
            )
    return out


@dataclass
class WedderburnBlock:
    """One simple factor of A/rad with an explicit matrix realization."""

    idempotent: Vector          # central primitive idempotent of A/rad
    block: Algebra              # the factor, as an algebra in its own right
    block_coords: "object"      # A/rad vector (inside the block span) -> block coords
    block_embed: Matrix         # block coords -> A/rad coords
    module_dim: int             # d with block ~ M_d(Q)
    action: tuple[Matrix, ...]  # eta(block basis element) as d x d matrices


def _minimal_right_ideal(block: Algebra) -> list[Vector]:
    """A minimal right ideal of a simple split algebra, deterministically.

    Shrinks x*B right ideals: basis elements first, then pairwise sums
    and differences, then seeded random combinations.  For a split block
    a strict shrink exists whenever the current ideal is non-minimal, so
    the bounded random stage failing is (exact-arithmetic) evidence the
    block is a division-algebra twist; the caller turns a dimension
    mismatch into NotSplit.
    """
    def right_ideal(x):
        return linalg.span_rows(
            [block.mult(x, block.basis_vector(j)) for j in range(block.dim)],
            block.dim,
        )

    current = [block.basis_vector(i) for i in range(block.dim)]
    rng = seeded_rng("minimal-right-ideal")
    while True:
        dim_now = len(current)
        candidates = list(current)
        candidates += [linalg.vec_add(u, v) for u, v in itertools.combinations(current, 2)]
        candidates += [linalg.vec_sub(u, v) for u, v in itertools.combinations(current, 2)]
        for _ in range(200):
            v = linalg.zero_vector(block.dim)
            for b in current:
                v = linalg.vec_add(v, linalg.vec_scale(rng.randint(-3, 3), b))
            candidates.append(v)
        shrunk = None
        for x in candidates:
            if linalg.is_zero_vector(x):
                continue
            ideal = right_ideal(x)
            if 0 < len(ideal) < dim_now:
                shrunk = ideal
                break
        if shrunk is None:
            return current
        current = shrunk


def wedderburn_blocks(a: Algebra) -> list[WedderburnBlock]:
    """Simple factors of A/rad with explicit M_d(Q) realizations.

    Splits the center of A/rad by exact rational eigenspace
    decomposition of multiplication operators and realizes each factor
    on a minimal right ideal.  Raises NotSplit when a factor is not a
    full matrix algebra over the rationals.
    """
    rad = jacobson_radical(a)
    semi, _proj = quotient_algebra(a, rad)
    centre = center_basis(semi)
    idems = _split_commutative(semi, centre, semi.unit)
    blocks = []
    for e in idems:
        span = linalg.span_rows(
            [semi.mult(e, semi.basis_vector(i)) for i in range(semi.dim)], semi.dim
        )
        block, embed, coords = algebra_from_subspace(semi, span, e)
        ideal = _minimal_right_ideal(block)
        d = len(ideal)
        if d * d != block.dim:
            raise NotSplit(
                f"block of dimension {block.dim} has minimal right ideal of dimension {d}"
            )
        action = []
        for j in range(block.dim):
            bj = block.basis_vector(j)
            rows = []
            for w in ideal:
                prod = block.mult(w, bj)
                sol = linalg.solve_linear(Matrix(ideal, ncols=block.dim).transpose(), prod)
                if sol is None:
                    raise NotSplit("minimal right ideal is not invariant (internal)")
                rows.append(sol[0])
            action.append(Matrix(rows, ncols=d))
        span_mats = linalg.span_rows([m.flatten() for m in action], d * d)
        if len(span_mats) != d * d:
            raise NotSplit("block does not act as the full matrix algebra on its minimal ideal")
        blocks.append(
            WedderburnBlock(
                idempotent=e,
                block=block,
                block_coords=coords,
                block_embed=embed,
                module_dim=d,
                action=tuple(action),
            )
        )
    return blocks


def is_unit(a: Algebra, x: Vector) -> bool:
    """True iff the left-regular matrix of x is invertible."""
    return inverse(a, x) is not None


def inverse(a: Algebra, x: Vector) -> Vector | None:
    """Two-sided inverse of x, or None.

    Solved on the left-regular representation; in a finite-dimensional
    algebra a solution of x*y = 1 with L_x bijective is automatically
    two-sided (Cayley–Hamilton puts the inverse in the subalgebra
    generated by x).
    """
    lx = a.left_regular(x)
    sol = linalg.solve_linear(lx.transpose(), a.unit)
    if sol is None or len(sol[1]) > 0:
        return None
    y = sol[0]
    if a.mult(x, y) != a.unit or a.mult(y, x) != a.unit:
        return None
    return y


def direct_sum(a: Algebra, b: Algebra, labels=None) -> tuple[Algebra, Matrix, Matrix]:
    """Product algebra a x b with the two coordinate embeddings."""
    n, m = a.dim, b.dim
    if labels is None:
        labels = [f"L.{x}" for x in a.labels] + [f"R.{x}" for x in b.labels]
    table = []
    for i in range(n + m):
        row = []
        for j in range(n + m):
            if i < n and j < n:
                row.append(tuple(a.table[i][j]) + linalg.zero_vector(m))
            elif i >= n and j >= n:
                row.append(linalg.zero_vector(n) + tuple(b.table[i - n][j - n]))
            else:
                row.append(linalg.zero_vector(n + m))
        table.append(row)
    unit = tuple(a.unit) + tuple(b.unit)
    alg = Algebra(labels, table, unit)
    embed_a = Matrix(
        [linalg.unit_vector(n + m, i) for i in range(n)], ncols=n + m
    )
    embed_b = Matrix(
        [linalg.unit_vector(n + m, n + i) for i in range(m)], ncols=n + m
    )
    return alg, embed_a, embed_b
