"""Exact, deterministic linear algebra over a :class:`~leibcap.exactfield.Field`.

Dense vectors are tuples; the hot paths (relation elimination) use sparse
vectors, i.e. dicts ``{column: nonzero scalar}``.  Every subspace is stored
by its reduced row echelon basis, which is unique, so two subspaces are
equal exactly when their dataclass fields are.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .exactfield import Field, Scalar

SparseVec = dict


def to_sparse(v: Sequence[Scalar] | SparseVec) -> SparseVec:
    if isinstance(v, dict):
        return {k: x for k, x in v.items() if x}
    return {k: x for k, x in enumerate(v) if x}


def coerce_sparse(field: Field, v) -> SparseVec:
    """Sparse copy of ``v`` with entries mapped into ``field`` (zeros dropped)."""
    items = v.items() if isinstance(v, dict) else enumerate(v)
    out = {}
    for k, x in items:
        x = field(x)
        if x:
            out[k] = x
    return out


def to_dense(field: Field, v: SparseVec, n: int) -> tuple:
    z = field.zero
    return tuple(v.get(k, z) for k in range(n))


class RowReducer:
    """Incrementally maintained RREF of a growing set of sparse rows.

    Rows are kept fully reduced (pivot entry 1, zeros in every other pivot
    column), so reducing a vector needs one pass over its pivot entries.
    The final echelon form does not depend on insertion order.
    """

    def __init__(self, field: Field, ncols: int):
        self.field = field
        self.ncols = ncols
        self.rows: dict[int, SparseVec] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: SparseVec) -> SparseVec:
        v = dict(v)
        axpy, neg = self.field.axpy, self.field.neg
        for p in [k for k in v if k in self.rows]:
            c = v.get(p)
            if c:
                axpy(v, neg(c), self.rows[p])
        return v

    def contains(self, v: SparseVec) -> bool:
        return not self.reduce(v)

    def add(self, v: SparseVec) -> bool:
        """Insert ``v``; return True iff the rank grew."""
        r = self.reduce(v)
        if not r:
            return False
        F = self.field
        piv = min(r)
        r = F.scale(F.inv(r[piv]), r)
        for row in self.rows.values():
            c = row.get(piv)
            if c:
                F.axpy(row, F.neg(c), r)
        self.rows[piv] = r
        return True

    def extend(self, vectors: Iterable[SparseVec]) -> int:
        before = self.rank
        for v in vectors:
            self.add(v)
        return self.rank - before

    def copy(self) -> RowReducer:
        other = RowReducer(self.field, self.ncols)
        other.rows = {p: dict(r) for p, r in self.rows.items()}
        return other

    def subspace(self) -> Subspace:
        pivots = tuple(sorted(self.rows))
        basis = tuple(to_dense(self.field, self.rows[p], self.ncols) for p in pivots)
        return Subspace(self.field, self.ncols, basis, pivots)


@dataclass(frozen=True)
class Matrix:
    field: Field
    nrows: int
    ncols: int
    rows: tuple

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], ncols: int | None = None) -> Matrix:
        rows = tuple(tuple(field(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols required for a matrix without rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        return cls(field, len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, field: Field, cols: Sequence[Sequence], nrows: int) -> Matrix:
        return cls.from_rows(field, [[c[i] for c in cols] for i in range(nrows)], len(cols))

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> Matrix:
        return cls(field, nrows, ncols, tuple((field.zero,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        return cls(field, n, n, tuple(tuple(field.one if i == j else field.zero for j in range(n))
                                      for i in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> Matrix:
        return Matrix(self.field, self.ncols, self.nrows,
                      tuple(self.column(j) for j in range(self.ncols)))

    def apply(self, v: Sequence[Scalar]) -> tuple:
        """Matrix times column vector."""
        if len(v) != self.ncols:
            raise ValueError(f"vector of length {len(v)} for {self.nrows}x{self.ncols} matrix")
        F = self.field
        out = []
        for r in self.rows:
            s = F.zero
            for a, b in zip(r, v):
                if a and b:
                    s = F.add(s, F.mul(a, b))
            out.append(s)
        return tuple(out)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = [self.apply(other.column(j)) for j in range(other.ncols)]
        return Matrix.from_columns(self.field, cols, self.nrows)

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (nonzero rows only) and its pivot columns."""
    red = RowReducer(m.field, m.ncols)
    red.extend(to_sparse(r) for r in m.rows)
    s = red.subspace()
    return Matrix(m.field, s.dim, m.ncols, s.basis), list(s.pivots)


def kernel(m: Matrix) -> Subspace:
    """Right null space ``{v : m v = 0}``."""
    F = m.field
    red, pivots = rref(m)
    free = [j for j in range(m.ncols) if j not in set(pivots)]
    vecs = []
    for f in free:
        v = {f: F.one}
        for r, p in enumerate(pivots):
            c = red.rows[r][f]
            if c:
                v[p] = F.neg(c)
        vecs.append(v)
    return Subspace.span(F, m.ncols, vecs)


@dataclass(frozen=True)
class Subspace:
    field: Field
    ambient_dim: int
    basis: tuple
    pivots: tuple

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors: Iterable) -> Subspace:
        red = RowReducer(field, ambient_dim)
        red.extend(coerce_sparse(field, v) for v in vectors)
        return red.subspace()

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> Subspace:
        return cls(field, ambient_dim, (), ())

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> Subspace:
        I = Matrix.identity(field, ambient_dim)
        return cls(field, ambient_dim, I.rows, tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    @cached_property
    def reducer(self) -> RowReducer:
        red = RowReducer(self.field, self.ambient_dim)
        red.rows = {p: to_sparse(b) for p, b in zip(self.pivots, self.basis)}
        return red

    @cached_property
    def sparse_basis(self) -> tuple:
        return tuple(to_sparse(b) for b in self.basis)

    def contains(self, v) -> bool:
        return self.reducer.contains(coerce_sparse(self.field, v))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def __le__(self, other: Subspace) -> bool:
        self._check(other)
        return all(other.contains(b) for b in self.sparse_basis)

    def coords(self, v) -> tuple:
        """Coordinates of ``v`` in the echelon basis; ``v`` must lie in the space."""
        sv = self.coords_sparse(coerce_sparse(self.field, v))
        return to_dense(self.field, sv, self.dim)

    def coords_sparse(self, v: SparseVec) -> SparseVec:
        if not self.reducer.contains(v):
            raise ValueError("vector is not in the subspace")
        return {i: v[p] for i, p in enumerate(self.pivots) if v.get(p)}

    def combine(self, coords) -> tuple:
        """Ambient vector with the given basis coordinates."""
        out: SparseVec = {}
        for i, c in to_sparse(coords).items():
            self.field.axpy(out, c, self.sparse_basis[i])
        return to_dense(self.field, out, self.ambient_dim)

    def __add__(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace.span(self.field, self.ambient_dim, self.sparse_basis + other.sparse_basis)

    def intersect(self, other: Subspace) -> Subspace:
        return intersect(self, other)

    def is_zero(self) -> bool:
        return not self.basis

    def _check(self, other: Subspace):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError(f"ambient mismatch: {self.ambient_dim} vs {other.ambient_dim}")


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """``a ∩ b`` from the kernel of ``(alpha, beta) -> alpha.A - beta.B``."""
    a._check(b)
    F = a.field
    if a.is_zero() or b.is_zero():
        return Subspace.zero(F, a.ambient_dim)
    cols = list(a.basis) + [tuple(F.neg(x) for x in r) for r in b.basis]
    ker = kernel(Matrix.from_columns(F, cols, a.ambient_dim))
    vecs = [a.combine(k[:a.dim]) for k in ker.basis]
    return Subspace.span(F, a.ambient_dim, vecs)


@dataclass(frozen=True)
class QuotientSpace:
    """``ambient / relations`` with coordinates on the non-pivot columns.

    ``project`` reduces modulo the relations and reads off the non-pivot
    entries; ``section(k)`` is the k-th non-pivot unit vector, which is
    already reduced.
    """

    ambient_dim: int
    relations: Subspace
    free: tuple

    @property
    def field(self) -> Field:
        return self.relations.field

    @property
    def dim(self) -> int:
        return len(self.free)

    @cached_property
    def _index(self) -> dict:
        return {c: k for k, c in enumerate(self.free)}

    def project_sparse(self, v: SparseVec) -> SparseVec:
        r = self.relations.reducer.reduce(v)
        idx = self._index
        return {idx[c]: x for c, x in r.items()}

    def project(self, v) -> tuple:
        return to_dense(self.field, self.project_sparse(to_sparse(v)), self.dim)

    def section(self, k: int) -> tuple:
        F = self.field
        return tuple(F.one if c == self.free[k] else F.zero for c in range(self.ambient_dim))

    def section_sparse(self, k: int) -> SparseVec:
        return {self.free[k]: self.field.one}

    def project_matrix(self) -> Matrix:
        cols = [self.project({j: self.field.one}) for j in range(self.ambient_dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    def section_matrix(self) -> Matrix:
        return Matrix.from_columns(self.field, [self.section(k) for k in range(self.dim)],
                                   self.ambient_dim)


def quotient(ambient_dim: int, relations: Subspace) -> QuotientSpace:
    if relations.ambient_dim != ambient_dim:
        raise ValueError("relations live in a different ambient space")
    piv = set(relations.pivots)
    return QuotientSpace(ambient_dim, relations, tuple(c for c in range(ambient_dim) if c not in piv))


@dataclass(frozen=True)
class LinearHom:
    """Linear map between coordinate spaces, stored as a target x source matrix."""

    matrix: Matrix

    @property
    def source_dim(self) -> int:
        return self.matrix.ncols

    @property
    def target_dim(self) -> int:
        return self.matrix.nrows

    @classmethod
    def from_images(cls, field: Field, images: Sequence, target_dim: int) -> LinearHom:
        return cls(Matrix.from_columns(field, [to_dense(field, to_sparse(v), target_dim)
                                               for v in images], target_dim))

    def __call__(self, v) -> tuple:
        return self.matrix.apply(v)

    def kernel(self) -> Subspace:
        return kernel(self.matrix)

    def image(self) -> Subspace:
        m = self.matrix
        return Subspace.span(m.field, m.nrows, [m.column(j) for j in range(m.ncols)])

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def __matmul__(self, other: LinearHom) -> LinearHom:
        return LinearHom(self.matrix @ other.matrix)
