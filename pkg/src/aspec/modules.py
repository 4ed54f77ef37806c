"""Right modules over a structure-constant algebra.

A module is a structure map eta assigning a matrix to every algebra
basis element; vectors are rows and the action is ``m . a = m @ eta(a)``,
so eta is multiplicative in the usual order:
``eta(a b) = eta(a) @ eta(b)``.

The Ext^1 computation realizes extensions as derivations
``d : A -> Hom(M, N)`` with ``d(ab) = eta_M(a) d(b) + d(a) eta_N(b)``
modulo the inner ones ``d_phi(a) = eta_M(a) phi - phi eta_N(a)``;
representatives are extracted deterministically via RREF pivots against
the inner subspace.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from aspec import linalg
from aspec.algebra import Algebra, seeded_rng
from aspec.linalg import Matrix, Vector


class ModuleRep:
    """Right module given by one action matrix per algebra basis element."""

    __slots__ = ("parent", "dim", "action", "label")

    def __init__(self, parent: Algebra, action, label: str = ""):
        self.parent = parent
        self.action = tuple(m if isinstance(m, Matrix) else Matrix(m) for m in action)
        if len(self.action) != parent.dim:
            raise ValueError("need one action matrix per algebra basis element")
        self.dim = self.action[0].nrows if self.action else 0
        for m in self.action:
            if m.nrows != self.dim or m.ncols != self.dim:
                raise ValueError("action matrices must be square of the module dimension")
        self.label = label

    def __repr__(self):
        return f"ModuleRep({self.label or '?'}, dim={self.dim} over dim-{self.parent.dim} algebra)"

    def act(self, x: Vector) -> Matrix:
        """eta extended linearly to an arbitrary algebra element."""
        out = Matrix.zeros(self.dim, self.dim)
        for c, m in zip(x, self.action):
            if c:
                out = out + m.scale(c)
        return out

    def check_structure(self) -> bool:
        """eta(1) = id and eta(b_i b_j) = eta(b_i) eta(b_j) on all pairs."""
        a = self.parent
        if self.act(a.unit) != Matrix.identity(self.dim):
            return False
        for i in range(a.dim):
            for j in range(a.dim):
                if self.act(a.table[i][j]) != self.action[i] @ self.action[j]:
                    return False
        return True


@dataclass
class AlgebraMorphism:
    """Unital multiplicative linear map between algebras (row convention)."""

    source: Algebra
    target: Algebra
    matrix: Matrix  # source.dim x target.dim; phi(v) = matrix.apply(v)

    def __post_init__(self):
        if self.matrix.nrows != self.source.dim or self.matrix.ncols != self.target.dim:
            raise ValueError("morphism matrix has wrong shape")

    def apply(self, v: Vector) -> Vector:
        return self.matrix.apply(linalg.vector(v))

    def is_valid(self) -> bool:
        if self.apply(self.source.unit) != self.target.unit:
            return False
        for i in range(self.source.dim):
            fi = self.apply(self.source.basis_vector(i))
            for j in range(self.source.dim):
                fj = self.apply(self.source.basis_vector(j))
                if self.apply(self.source.table[i][j]) != self.target.mult(fi, fj):
                    return False
        return True

    def compose(self, then: "AlgebraMorphism") -> "AlgebraMorphism":
        """self followed by ``then``."""
        if then.source is not self.target and then.source.dim != self.target.dim:
            raise ValueError("composition mismatch")
        return AlgebraMorphism(self.source, then.target, self.matrix @ then.matrix)

    @classmethod
    def identity(cls, a: Algebra) -> "AlgebraMorphism":
        return cls(a, a, Matrix.identity(a.dim))


def is_simple(m: ModuleRep) -> bool:
    """Burnside criterion: the action matrices span all of End(M).

    Tests *absolute* simplicity, which is the right notion over a
    non-closed base field: a simple-but-not-split module fails and the
    caller sees the obstruction instead of a wrong answer.
    """
    if m.dim == 0:
        return False
    flat = [mat.flatten() for mat in m.action]
    return len(linalg.span_rows(flat, m.dim * m.dim)) == m.dim * m.dim


def hom_space(m: ModuleRep, n: ModuleRep) -> list[Matrix]:
    """Basis of intertwiners phi with eta_M(b) phi = phi eta_N(b) for all b."""
    if m.parent.dim != n.parent.dim:
        raise ValueError("modules over different algebras")
    rows = []
    dm, dn = m.dim, n.dim
    # unknown phi is dm x dn, flattened row-major; conditions per basis b
    # and per entry (u, v).
    for am, an in zip(m.action, n.action):
        for u in range(dm):
            for v in range(dn):
                row = [Fraction(0)] * (dm * dn)
                # (am @ phi)[u][v] = sum_t am[u][t] phi[t][v]
                for t in range(dm):
                    if am.rows[u][t]:
                        row[t * dn + v] += am.rows[u][t]
                # (phi @ an)[u][v] = sum_t phi[u][t] an[t][v]
                for t in range(dn):
                    if an.rows[t][v]:
                        row[u * dn + t] -= an.rows[t][v]
                rows.append(tuple(row))
    ker = linalg.kernel_basis(Matrix(rows, ncols=dm * dn))
    return [Matrix([vec[i * dn:(i + 1) * dn] for i in range(dm)], ncols=dn) for vec in ker]


def module_isomorphism(m: ModuleRep, n: ModuleRep) -> Matrix | None:
    """An invertible intertwiner, or None.

    Searches the Hom space for an invertible element: basis matrices
    first, then seeded small-integer combinations (over Q an invertible
    combination exists generically whenever the modules are isomorphic;
    the search is deterministic).
    """
    if m.dim != n.dim:
        return None
    homs = hom_space(m, n)
    if not homs:
        return None
    for h in homs:
        if h.inverse() is not None:
            return h
    rng = seeded_rng("module-isomorphism")
    for _ in range(200):
        cand = Matrix.zeros(m.dim, n.dim)
        for h in homs:
            cand = cand + h.scale(rng.randint(-3, 3))
        if cand.inverse() is not None:
            return cand
    return None


@dataclass
class Ext1Result:
    dim: int
    cocycles: list[tuple[Matrix, ...]]  # each: one Hom(M,N) matrix per algebra basis elt
    cocycle_space_dim: int
    inner_dim: int


def _leibniz_rows(a: Algebra, m: ModuleRep, n: ModuleRep):
    """Coefficient rows of the cocycle system in unknowns d(b_k) in Hom(M,N).

    One block of rows per basis pair (i, j) and matrix entry (u, v):
    d(b_i b_j) - d(b_i) eta_N(b_j) - eta_M(b_i) d(b_j) = 0.
    """
    dm, dn = m.dim, n.dim
    width = a.dim * dm * dn

    def var(k, u, v):
        return (k * dm + u) * dn + v

    rows = []
    for i in range(a.dim):
        em = m.action[i]
        for j in range(a.dim):
            en = n.action[j]
            prod = a.table[i][j]
            for u in range(dm):
                for v in range(dn):
                    row = [Fraction(0)] * width
                    for k, c in enumerate(prod):
                        if c:
                            row[var(k, u, v)] += c
                    # -(d(b_i) @ eta_N(b_j))[u][v]
                    for t in range(dn):
                        if en.rows[t][v]:
                            row[var(i, u, t)] -= en.rows[t][v]
                    # -(eta_M(b_i) @ d(b_j))[u][v]
                    for t in range(dm):
                        if em.rows[u][t]:
                            row[var(j, t, v)] -= em.rows[u][t]
                    rows.append(tuple(row))
    return rows, width


def _inner_span(a: Algebra, m: ModuleRep, n: ModuleRep):
    dm, dn = m.dim, n.dim
    width = a.dim * dm * dn
    vecs = []
    for u0 in range(dm):
        for v0 in range(dn):
            phi = Matrix(
                [[Fraction(1) if (r == u0 and c == v0) else Fraction(0) for c in range(dn)]
                 for r in range(dm)],
                ncols=dn,
            )
            vec = []
            for k in range(a.dim):
                d = m.action[k] @ phi - phi @ n.action[k]
                vec.extend(d.flatten())
            vecs.append(tuple(vec))
    return linalg.span_rows(vecs, width)


def ext1(m: ModuleRep, n: ModuleRep) -> Ext1Result:
    """Dimension and explicit cocycle basis of Ext^1(M, N).

    Cocycles are derivations into Hom(M, N); the quotient by inner
    derivations is realized by extending the inner RREF span and keeping
    the kernel vectors that raise the rank — deterministic
    representatives, each an exact cocycle.
    """
    a = m.parent
    rows, width = _leibniz_rows(a, m, n)
    cocycle_vecs = linalg.kernel_basis(Matrix(rows, ncols=width))
    inner = _inner_span(a, m, n)
    reps = linalg.extend_to_complement(inner, cocycle_vecs, width)
    dm, dn = m.dim, n.dim
    cocycles = []
    for vec in reps:
        mats = []
        for k in range(a.dim):
            chunk = vec[k * dm * dn:(k + 1) * dm * dn]
            mats.append(Matrix([chunk[u * dn:(u + 1) * dn] for u in range(dm)], ncols=dn))
        cocycles.append(tuple(mats))
    return Ext1Result(
        dim=len(reps),
        cocycles=cocycles,
        cocycle_space_dim=len(cocycle_vecs),
        inner_dim=len(inner),
    )


def contract_module(phi: AlgebraMorphism, n: ModuleRep, label: str = "") -> ModuleRep:
    """n viewed as a module over phi's source: action eta_N(phi(b))."""
    if n.parent.dim != phi.target.dim:
        raise ValueError("module is not over the morphism target")
    action = [n.act(phi.apply(phi.source.basis_vector(i))) for i in range(phi.source.dim)]
    return ModuleRep(phi.source, action, label=label or (n.label + "^c" if n.label else ""))


def acts_injectively(m: ModuleRep, f: Vector) -> bool:
    """True iff f acts injectively on m (the D(f) membership predicate)."""
    return len(linalg.kernel_basis(m.act(linalg.vector(f)))) == 0


def simple_modules(a: Algebra) -> list[ModuleRep]:
    """One simple right module per Wedderburn block, pulled back to A.

    The module of a block is its row space under the explicit matrix
    realization; labels are S1, S2, ... in block order.
    """
    from aspec.algebra import jacobson_radical, quotient_algebra, wedderburn_blocks

    blocks = wedderburn_blocks(a)
    rad = jacobson_radical(a)
    _semi, proj = quotient_algebra(a, rad)
    out = []
    for pos, blk in enumerate(blocks):
        action = []
        for i in range(a.dim):
            abar = proj.apply(a.basis_vector(i))
            # component of abar in the block: multiply by the central idempotent
            comp = blk.block_coords(_semi.mult(abar, blk.idempotent))
            mat = Matrix.zeros(blk.module_dim, blk.module_dim)
            for c, act in zip(comp, blk.action):
                if c:
                    mat = mat + act.scale(c)
            action.append(mat)
        out.append(ModuleRep(a, action, label=f"S{pos + 1}"))
    return out
