"""Lie tensor and exterior squares, for comparing with the Leibniz ones.

Generators ``x_i (x) x_j`` sit at flat index ``i * n + j``.  Relations, on
basis triples::

    [x, x'] (x) y = x (x) [x', y] - x' (x) [x, y]
    x (x) [y, y'] = [y', x] (x) y - [y, x] (x) y'

with bracket ``[x (x) y, x' (x) y'] = [x, y] (x) [x', y']``.  Because the
square is presented as a Lie algebra, the bracket is also forced to be
alternating: ``p (x) p = 0`` and ``p (x) q + q (x) p = 0`` on a basis of
``[L, L]``.  The exterior square adds ``x ^ x = 0`` on the whole basis
(with polarizations).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .algebra import LeibnizAlgebra, center, commutator, is_lie
from .linalg import Matrix, RowReducer, Subspace, kernel, quotient, to_sparse
from .tensor import WellDefinednessFailure, _Presented, lincomb, saturate


class NotALieAlgebra(ValueError):
    pass


@dataclass(eq=False)
class LiePresentedSquare(_Presented):
    algebra: LeibnizAlgebra = None

    @property
    def n(self) -> int:
        return self.algebra.dim

    def flat(self, i: int, j: int) -> int:
        return i * self.n + j

    def gen_class(self, i: int, j: int) -> tuple:
        return self.space.project({self.flat(i, j): self.field.one})

    def jacobi_violation(self):
        """First quotient basis triple breaking Jacobi or alternation, or None."""
        L = self.as_algebra()
        F = self.field
        for k in range(self.dim):
            if self.bracket_table[k][k]:
                return (k, k)
        for i, j, k in product(range(self.dim), repeat=3):
            t = L.table
            res = L.bracket_sparse({i: F.one}, t[j][k])
            F.axpy(res, F.one, L.bracket_sparse({j: F.one}, t[k][i]))
            F.axpy(res, F.one, L.bracket_sparse({k: F.one}, t[i][j]))
            if res:
                return (i, j, k)
        return None


def _require_lie(L: LeibnizAlgebra):
    if not is_lie(L):
        raise NotALieAlgebra("input is not a Lie algebra")


def _build(L: LeibnizAlgebra, exterior: bool) -> LiePresentedSquare:
    _require_lie(L)
    F = L.field
    n = L.dim
    N = n * n
    one = F.one

    def w(u, v):
        out = {}
        for i, x in u.items():
            for j, y in v.items():
                out[i * n + j] = F.add(out.get(i * n + j, F.zero), F.mul(x, y))
        return {k: x for k, x in out.items() if x}

    def comb(*terms):
        out = {}
        for sign, vec in terms:
            F.axpy(out, F(sign), vec)
        return out

    e = [{i: one} for i in range(n)]
    br = L.bracket_sparse
    rels = []
    for x, x2, y in product(e, repeat=3):
        rels.append(comb((1, w(br(x, x2), y)), (-1, w(x, br(x2, y))), (1, w(x2, br(x, y)))))
        rels.append(comb((1, w(x, br(y, x2))), (-1, w(br(x2, x), y)), (1, w(br(y, x), x2))))
    alt = e if exterior else list(commutator(L).space.sparse_basis)
    for k, p in enumerate(alt):
        rels.append(w(p, p))
        for q in alt[k + 1:]:
            rels.append(comb((1, w(p, q)), (1, w(q, p))))

    lam = tuple(br(e[i], e[j]) for i in range(n) for j in range(n))
    red = RowReducer(F, N)
    frontier = [r for r in rels if red.add(r)]
    inst = red.rank
    added = saturate(red, frontier, lam, lam, w)
    rel = red.subspace()
    names = L.names
    sep = "^" if exterior else "(x)"
    ps = LiePresentedSquare(
        field=F, kind="lie_exterior" if exterior else "lie_tensor",
        gen_labels=tuple(f"{names[i]}{sep}{names[j]}" for i in range(n) for j in range(n)),
        left=lam, right=lam, outer=w, relations=rel, space=quotient(N, rel),
        instantiated_rank=inst, saturation_added=added, algebra=L)
    ps.check_well_defined()
    for r in rel.sparse_basis:
        if lincomb(F, r, lam):
            raise WellDefinednessFailure("commutator map does not vanish on a relation")
    ps._build_table()
    return ps


@lru_cache(maxsize=256)
def lie_tensor_square(L: LeibnizAlgebra) -> LiePresentedSquare:
    return _build(L, exterior=False)


@lru_cache(maxsize=256)
def lie_exterior_square(L: LeibnizAlgebra) -> LiePresentedSquare:
    return _build(L, exterior=True)


def _center_of(L: LeibnizAlgebra, ps: LiePresentedSquare) -> Subspace:
    n = L.dim
    if n == 0:
        return Subspace.zero(L.field, 0)
    cols = []
    for i in range(n):
        col = []
        for j in range(n):
            col.extend(ps.gen_class(i, j))
        cols.append(col)
    return kernel(Matrix.from_columns(L.field, cols, n * ps.dim))


def lie_exterior_center(L: LeibnizAlgebra) -> Subspace:
    """``{z : z ^ x = 0 for all x}``."""
    return _center_of(L, lie_exterior_square(L))


def lie_tensor_center(L: LeibnizAlgebra) -> Subspace:
    return _center_of(L, lie_tensor_square(L))


def lie_is_capable(L: LeibnizAlgebra) -> bool:
    return lie_exterior_center(L).is_zero()
