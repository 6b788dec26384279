"""Leibniz algebras given by structure constants.

``c[i][j][k]`` is the coefficient of ``x_k`` in ``[x_i, x_j]``.  The bracket
is right-Leibniz: ``[x,[y,z]] = [[x,y],z] - [[x,z],y]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Mapping, Sequence

from .exactfield import Field, Scalar
from .linalg import (LinearHom, Matrix, RowReducer, SparseVec, Subspace, kernel, quotient,
                     to_dense, to_sparse)


class LeibnizIdentityViolation(ValueError):
    def __init__(self, triple: tuple[str, str, str], residual: tuple):
        self.triple = triple
        self.residual = residual
        x, y, z = triple
        super().__init__(f"Leibniz identity fails at ({x}, {y}, {z}): "
                         f"[{x},[{y},{z}]] - [[{x},{y}],{z}] + [[{x},{z}],{y}] = "
                         f"{[str(r) for r in residual]}")


class NotAnIdeal(ValueError):
    pass


@dataclass(frozen=True)
class LeibnizAlgebra:
    field: Field
    names: tuple
    c: tuple

    @property
    def dim(self) -> int:
        return len(self.names)

    @cached_property
    def table(self) -> tuple:
        """Sparse products: ``table[i][j] == {k: c[i][j][k] != 0}``."""
        return tuple(tuple(to_sparse(self.c[i][j]) for j in range(self.dim))
                     for i in range(self.dim))

    def __repr__(self):
        return f"LeibnizAlgebra(dim={self.dim}, field={self.field}, names={list(self.names)})"

    # -- products --------------------------------------------------------

    def bracket_sparse(self, u: SparseVec, v: SparseVec) -> SparseVec:
        F = self.field
        out: SparseVec = {}
        t = self.table
        for i, a in u.items():
            row = t[i]
            for j, b in v.items():
                if row[j]:
                    F.axpy(out, F.mul(a, b), row[j])
        return out

    def bracket(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> tuple:
        if len(u) != self.dim or len(v) != self.dim:
            raise ValueError(f"vectors must have length {self.dim}")
        return to_dense(self.field, self.bracket_sparse(to_sparse(u), to_sparse(v)), self.dim)

    def unit(self, i: int) -> tuple:
        F = self.field
        return tuple(F.one if k == i else F.zero for k in range(self.dim))

    def leibniz_residual(self, i: int, j: int, k: int) -> SparseVec:
        F = self.field
        t = self.table
        br = self.bracket_sparse
        res = br({i: F.one}, t[j][k])
        F.axpy(res, F.neg(F.one), br(t[i][j], {k: F.one}))
        F.axpy(res, F.one, br(t[i][k], {j: F.one}))
        return res

    def first_violation(self):
        for i, j, k in product(range(self.dim), repeat=3):
            r = self.leibniz_residual(i, j, k)
            if r:
                return (i, j, k), r
        return None

    def left_matrix(self, i: int) -> Matrix:
        """Matrix of ``y -> [x_i, y]``."""
        n = self.dim
        return Matrix.from_rows(self.field, [[self.c[i][j][k] for j in range(n)] for k in range(n)], n)

    def right_matrix(self, i: int) -> Matrix:
        """Matrix of ``y -> [y, x_i]``."""
        n = self.dim
        return Matrix.from_rows(self.field, [[self.c[j][i][k] for j in range(n)] for k in range(n)], n)

    def nonzero_brackets(self):
        for i, j in product(range(self.dim), repeat=2):
            if self.table[i][j]:
                yield i, j, self.table[i][j]


def validate(c, field: Field, names: Sequence[str] | None = None) -> LeibnizAlgebra:
    """Build an algebra from an n x n x n array, checking the Leibniz identity."""
    n = len(c)
    if names is None:
        names = [f"e{i + 1}" for i in range(n)]
    names = tuple(names)
    if len(names) != n or len(set(names)) != n:
        raise ValueError("basis names must be unique and match the dimension")
    rows = []
    for i in range(n):
        if len(c[i]) != n or any(len(c[i][j]) != n for j in range(n)):
            raise ValueError("structure constants must form an n x n x n array")
        rows.append(tuple(tuple(field(x) for x in c[i][j]) for j in range(n)))
    g = LeibnizAlgebra(field, names, tuple(rows))
    bad = g.first_violation()
    if bad is not None:
        (i, j, k), r = bad
        raise LeibnizIdentityViolation((names[i], names[j], names[k]), to_dense(field, r, n))
    return g


def from_brackets(field: Field, names: Sequence[str],
                  brackets: Mapping[tuple, Mapping]) -> LeibnizAlgebra:
    """``brackets`` maps ``(left, right)`` (names or indices) to ``{name/index: scalar}``."""
    names = list(names)
    n = len(names)
    pos = {s: i for i, s in enumerate(names)}
    idx = lambda s: pos[s] if isinstance(s, str) else int(s)
    c = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
    for (l, r), val in brackets.items():
        for k, x in val.items():
            c[idx(l)][idx(r)][idx(k)] = field(x)
    return validate(c, field, names)


def zero_algebra(field: Field) -> LeibnizAlgebra:
    return LeibnizAlgebra(field, (), ())


def abelian(field: Field, n: int, names: Sequence[str] | None = None) -> LeibnizAlgebra:
    return validate([[[0] * n for _ in range(n)] for _ in range(n)], field, names)


def with_field(g: LeibnizAlgebra, field: Field) -> LeibnizAlgebra:
    """Reinterpret the structure constants in another field (must stay Leibniz)."""
    return validate(g.c, field, g.names)


# -- subspaces and ideals ----------------------------------------------------

@dataclass(frozen=True)
class Ideal:
    algebra: LeibnizAlgebra
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim


def is_ideal(g: LeibnizAlgebra, space: Subspace) -> bool:
    for b in space.sparse_basis:
        for i in range(g.dim):
            e = {i: g.field.one}
            if not space.reducer.contains(g.bracket_sparse(b, e)):
                return False
            if not space.reducer.contains(g.bracket_sparse(e, b)):
                return False
    return True


def ideal(g: LeibnizAlgebra, space: Subspace | Sequence) -> Ideal:
    if not isinstance(space, Subspace):
        space = Subspace.span(g.field, g.dim, space)
    if space.ambient_dim != g.dim:
        raise ValueError("subspace lives in the wrong ambient space")
    if not is_ideal(g, space):
        raise NotAnIdeal("subspace is not a two-sided ideal")
    return Ideal(g, space)


def ideal_closure(g: LeibnizAlgebra, vectors) -> Ideal:
    """Smallest two-sided ideal containing ``vectors`` (fixpoint on brackets with the basis)."""
    red = RowReducer(g.field, g.dim)
    frontier = [v for v in (to_sparse(v) for v in vectors) if red.add(v)]
    one = g.field.one
    while frontier:
        new = []
        for b in frontier:
            for i in range(g.dim):
                for w in (g.bracket_sparse(b, {i: one}), g.bracket_sparse({i: one}, b)):
                    if red.add(w):
                        new.append(w)
        frontier = new
    return Ideal(g, red.subspace())


def whole(g: LeibnizAlgebra) -> Ideal:
    return Ideal(g, Subspace.full(g.field, g.dim))


def center(g: LeibnizAlgebra) -> Subspace:
    """``{c : [x, c] = 0 = [c, x] for all x}`` as the kernel of the stacked multiplications."""
    if g.dim == 0:
        return Subspace.zero(g.field, 0)
    rows = []
    for i in range(g.dim):
        rows.extend(g.left_matrix(i).rows)
        rows.extend(g.right_matrix(i).rows)
    return kernel(Matrix.from_rows(g.field, rows, g.dim))


def commutator(g: LeibnizAlgebra) -> Ideal:
    space = Subspace.span(g.field, g.dim, [v for _, _, v in g.nonzero_brackets()])
    return Ideal(g, space)


def quotient_algebra(g: LeibnizAlgebra, a: Ideal) -> tuple[LeibnizAlgebra, LinearHom]:
    """``g / a`` with the projection ``g -> g/a``.

    Quotient basis vectors are the classes of the basis vectors of ``g`` in
    the non-pivot columns of the ideal's echelon basis, and keep their names.
    """
    Q = quotient(g.dim, a.space)
    F = g.field
    m = Q.dim
    c = [[[F.zero] * m for _ in range(m)] for _ in range(m)]
    for k, l in product(range(m), repeat=2):
        prod_ = g.bracket_sparse(Q.section_sparse(k), Q.section_sparse(l))
        for t, x in Q.project_sparse(prod_).items():
            c[k][l][t] = x
    names = [g.names[col] for col in Q.free]
    h = LeibnizAlgebra(F, tuple(names), tuple(tuple(tuple(r) for r in row) for row in c))
    return h, LinearHom(Q.project_matrix())


def abelianization(g: LeibnizAlgebra) -> tuple[LeibnizAlgebra, LinearHom]:
    return quotient_algebra(g, commutator(g))


def is_abelian(g: LeibnizAlgebra) -> bool:
    return not any(True for _ in g.nonzero_brackets())


def is_perfect(g: LeibnizAlgebra) -> bool:
    return commutator(g).dim == g.dim


def is_lie(g: LeibnizAlgebra) -> bool:
    """Alternating bracket on the basis plus antisymmetry of mixed pairs.

    Together with bilinearity this gives ``[v, v] = 0`` for every ``v`` in
    every characteristic, which is stronger than antisymmetry in char 2.
    """
    F = g.field
    n = g.dim
    for i in range(n):
        if g.table[i][i]:
            return False
        for j in range(i + 1, n):
            s = dict(g.table[i][j])
            F.axpy(s, F.one, g.table[j][i])
            if s:
                return False
    return True


def direct_product(g: LeibnizAlgebra, h: LeibnizAlgebra) -> LeibnizAlgebra:
    if g.field != h.field:
        raise ValueError("factors live over different fields")
    F = g.field
    n, m = g.dim, h.dim
    names = list(g.names)
    for s in h.names:
        while s in names:
            s = s + "'"
        names.append(s)
    N = n + m
    c = [[[F.zero] * N for _ in range(N)] for _ in range(N)]
    for i, j, v in g.nonzero_brackets():
        for k, x in v.items():
            c[i][j][k] = x
    for i, j, v in h.nonzero_brackets():
        for k, x in v.items():
            c[n + i][n + j][n + k] = x
    return LeibnizAlgebra(F, tuple(names), tuple(tuple(tuple(r) for r in row) for row in c))


def liezation(g: LeibnizAlgebra) -> LeibnizAlgebra:
    """Quotient by the ideal generated by all squares ``[v, v]``.

    On a basis the squares are spanned by ``[x_i, x_i]`` and the
    polarizations ``[x_i, x_j] + [x_j, x_i]``.
    """
    F = g.field
    gens = []
    for i in range(g.dim):
        gens.append(g.table[i][i])
        for j in range(i + 1, g.dim):
            s = dict(g.table[i][j])
            F.axpy(s, F.one, g.table[j][i])
            gens.append(s)
    return quotient_algebra(g, ideal_closure(g, gens))[0]


def change_basis(g: LeibnizAlgebra, P: Matrix, names: Sequence[str] | None = None) -> LeibnizAlgebra:
    """Same algebra in the basis given by the columns of the invertible ``P``."""
    F = g.field
    n = g.dim
    cols = [P.column(j) for j in range(n)]
    full = Subspace.span(F, n, cols)
    if full.dim != n:
        raise ValueError("change of basis matrix is singular")
    # coordinates w.r.t. the new basis: solve P y = v
    inv = _inverse(P)
    c = [[inv.apply(g.bracket(cols[i], cols[j])) for j in range(n)] for i in range(n)]
    return LeibnizAlgebra(F, tuple(names or g.names), tuple(tuple(tuple(r) for r in row) for row in c))


def _inverse(P: Matrix) -> Matrix:
    F = P.field
    n = P.nrows
    aug = Matrix.from_rows(F, [list(P.rows[i]) + list(Matrix.identity(F, n).rows[i]) for i in range(n)],
                           2 * n)
    red = RowReducer(F, 2 * n)
    red.extend(to_sparse(r) for r in aug.rows)
    s = red.subspace()
    if list(s.pivots[:n]) != list(range(n)) or s.dim != n:
        raise ValueError("matrix is singular")
    return Matrix.from_rows(F, [r[n:] for r in s.basis], n)


# -- biderivations -----------------------------------------------------------
#
# A pair (d, delta) is stored as a vector of length 2n^2: entries d[r][s] at
# r*n + s and delta[r][s] at n^2 + r*n + s, with maps acting on column
# vectors (d(x_s) = sum_r d[r][s] x_r).

def _pair_matrices(q: LeibnizAlgebra, vec) -> tuple[Matrix, Matrix]:
    n = q.dim
    v = list(vec)
    d = Matrix.from_rows(q.field, [v[r * n:(r + 1) * n] for r in range(n)], n)
    e = Matrix.from_rows(q.field, [v[n * n + r * n:n * n + (r + 1) * n] for r in range(n)], n)
    return d, e


def _pair_vector(d: Matrix, e: Matrix) -> tuple:
    return tuple(x for r in d.rows for x in r) + tuple(x for r in e.rows for x in r)


def biderivation_conditions(q: LeibnizAlgebra) -> Matrix:
    """Linear system in the 2n^2 unknowns whose null space is BiDer(q).

    For basis pairs (x_a, x_b):
        d[x_a,x_b] = [d x_a, x_b] + [x_a, d x_b]
        delta[x_a,x_b] = [delta x_a, x_b] - [delta x_b, x_a]
        [x_a, d x_b] = [x_a, delta x_b]
        delta[x_a,x_b] = -delta[x_b,x_a]
    """
    F = q.field
    n = q.dim
    N = n * n
    D = lambda r, s: r * n + s
    E = lambda r, s: N + r * n + s
    c = q.c
    rows = []
    for a, b in product(range(n), repeat=2):
        for k in range(n):
            # d[x_a,x_b]_k - sum_r d[r][a] c[r][b][k] - sum_r d[r][b] c[a][r][k]
            row: SparseVec = {}
            for t in range(n):
                if c[a][b][t]:
                    F.axpy(row, c[a][b][t], {D(k, t): F.one})
            for r in range(n):
                if c[r][b][k]:
                    F.axpy(row, F.neg(c[r][b][k]), {D(r, a): F.one})
                if c[a][r][k]:
                    F.axpy(row, F.neg(c[a][r][k]), {D(r, b): F.one})
            rows.append(row)

            row = {}
            for t in range(n):
                if c[a][b][t]:
                    F.axpy(row, c[a][b][t], {E(k, t): F.one})
            for r in range(n):
                if c[r][b][k]:
                    F.axpy(row, F.neg(c[r][b][k]), {E(r, a): F.one})
                if c[r][a][k]:
                    F.axpy(row, c[r][a][k], {E(r, b): F.one})
            rows.append(row)

            row = {}
            for r in range(n):
                if c[a][r][k]:
                    F.axpy(row, c[a][r][k], {D(r, b): F.one})
                    F.axpy(row, F.neg(c[a][r][k]), {E(r, b): F.one})
            rows.append(row)

            row = {}
            for t in range(n):
                s = F.add(c[a][b][t], c[b][a][t])
                if s:
                    F.axpy(row, s, {E(k, t): F.one})
            rows.append(row)
    return Matrix.from_rows(F, [to_dense(F, r, 2 * N) for r in rows], 2 * N)


def inner_biderivation(q: LeibnizAlgebra, x) -> tuple:
    """``(d_x, delta_x)`` with ``d_x(y) = [y, x]`` and ``delta_x(y) = -[x, y]``."""
    F = q.field
    n = q.dim
    sx = to_sparse(x)
    d = [[F.zero] * n for _ in range(n)]
    e = [[F.zero] * n for _ in range(n)]
    for s in range(n):
        for r, val in q.bracket_sparse({s: F.one}, sx).items():
            d[r][s] = val
        for r, val in q.bracket_sparse(sx, {s: F.one}).items():
            e[r][s] = F.neg(val)
    return tuple(x for row in d for x in row) + tuple(x for row in e for x in row)


def inner_biderivation_map(q: LeibnizAlgebra) -> LinearHom:
    return LinearHom.from_images(q.field, [inner_biderivation(q, q.unit(i)) for i in range(q.dim)],
                                 2 * q.dim * q.dim)


def biderivation_bracket(q: LeibnizAlgebra, u, v) -> tuple:
    """Leibniz bracket on BiDer(q): ``[(d, D), (d', D')] = (d'd - dd', d'D - Dd')``.

    With this convention ``x -> (d_x, delta_x)`` is a homomorphism.
    """
    d1, e1 = _pair_matrices(q, u)
    d2, e2 = _pair_matrices(q, v)
    F = q.field
    sub = lambda A, B: Matrix(F, A.nrows, A.ncols,
                              tuple(tuple(F.sub(x, y) for x, y in zip(ra, rb))
                                    for ra, rb in zip(A.rows, B.rows)))
    return _pair_vector(sub(d2 @ d1, d1 @ d2), sub(d2 @ e1, e1 @ d2))


def biderivations(q: LeibnizAlgebra) -> tuple[Subspace, list]:
    """BiDer(q) inside the 2n^2 pair coordinates, with its bracket table.

    ``table[i][j]`` holds the coordinates of ``[b_i, b_j]`` in the echelon
    basis ``b`` of the returned subspace.
    """
    space = kernel(biderivation_conditions(q)) if q.dim else Subspace.zero(q.field, 0)
    table = [[space.coords(biderivation_bracket(q, u, v)) for v in space.basis] for u in space.basis]
    return space, table


def inner_biderivations(q: LeibnizAlgebra) -> Subspace:
    return inner_biderivation_map(q).image()
