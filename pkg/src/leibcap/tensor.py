"""Non-abelian tensor and exterior products of ideals of a Leibniz algebra.

For ideals ``a`` and ``b`` of ``g`` acting on each other by the bracket, the
tensor product is presented by symbols ``m *1 n`` and ``m *2 n`` (``m`` in a
basis of ``a``, ``n`` in a basis of ``b``).  Both actions are brackets in
``g``, so every action term ``m^n``, ``^m n``, ``n^m``, ``^n m`` is one of
``[m, n]`` or ``[n, m]``, re-expressed in ``a``- or ``b``-coordinates.

Generators are indexed slot-major, then row-major::

    flat(slot, i, j) = (slot - 1) * dim(a) * dim(b) + i * dim(b) + j

The bracket of two symbols is again a symbol,
``[t, t'] = tau_a(t) *1 tau_b(t')``, which is exactly the middle term of the
four product relations.  Relations are instantiated on basis tuples only;
bilinearity of the symbols makes that sufficient.  The four product
relations all say ``p *1 q = q *2 p`` for ``p, q`` in the span of
``[a, b] + [b, a]``, so they are instantiated on a basis of that span
rather than on all basis quadruples (``literal_product_relations`` keeps
the quadruple form for cross-checking).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import product
from typing import Callable, NamedTuple, Sequence

from .algebra import (Ideal, LeibnizAlgebra, abelianization, center, commutator,
                      whole)
from .exactfield import Field
from .linalg import (LinearHom, Matrix, QuotientSpace, RowReducer, SparseVec, Subspace,
                     kernel, quotient, to_dense, to_sparse)


class WellDefinednessFailure(AssertionError):
    """A relation escaped the relation space, or a map failed to kill it."""


class GeneratorIndex(NamedTuple):
    slot: int
    i: int
    j: int


def lincomb(F: Field, vec: SparseVec, images: Sequence[SparseVec]) -> SparseVec:
    out: SparseVec = {}
    for f, c in vec.items():
        if images[f]:
            F.axpy(out, c, images[f])
    return out


def saturate(red: RowReducer, frontier: list, left: Sequence[SparseVec],
             right: Sequence[SparseVec], outer: Callable) -> int:
    """Close the span in ``red`` under ``r -> [r, e]`` and ``r -> [e, r]``.

    The bracket on the generator space is ``[u, v] = outer(L u, R v)`` with
    ``L``/``R`` given by their images of the generators.  Returns the number
    of dimensions added.
    """
    F = red.field
    before = red.rank
    while frontier:
        new = []
        for r in frontier:
            lr = lincomb(F, r, left)
            rr = lincomb(F, r, right)
            candidates = []
            if lr:
                candidates += [outer(lr, rv) for rv in right if rv]
            if rr:
                candidates += [outer(lv, rr) for lv in left if lv]
            for w in candidates:
                if w and red.add(w):
                    new.append(w)
        frontier = new
    return red.rank - before


def check_closed(relations: Subspace, left, right, outer) -> None:
    F = relations.field
    for r in relations.sparse_basis:
        lr = lincomb(F, r, left)
        rr = lincomb(F, r, right)
        for e in range(relations.ambient_dim):
            for w in ((outer(lr, right[e]) if lr and right[e] else None),
                      (outer(left[e], rr) if rr and left[e] else None)):
                if w and not relations.reducer.contains(w):
                    raise WellDefinednessFailure("bracket of a relation left the relation space")


@dataclass(eq=False)
class _Presented:
    """Shared machinery: generator space, relations, quotient and bracket."""

    field: Field
    kind: str
    gen_labels: tuple
    left: tuple
    right: tuple
    outer: Callable
    relations: Subspace
    space: QuotientSpace
    instantiated_rank: int
    saturation_added: int
    bracket_table: list = dc_field(default_factory=list)

    @property
    def ambient_dim(self) -> int:
        return len(self.gen_labels)

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def labels(self) -> tuple:
        """Each quotient basis class is named by its representative symbol."""
        return tuple(self.gen_labels[c] for c in self.space.free)

    def _build_table(self):
        F = self.field
        free = self.space.free
        self.bracket_table = [
            [self.space.project_sparse(self.outer(self.left[fk], self.right[fl]))
             if self.left[fk] and self.right[fl] else {}
             for fl in free]
            for fk in free]

    def bracket_generators(self, u: SparseVec, v: SparseVec) -> SparseVec:
        """Pre-quotient bracket of two generator-space vectors."""
        F = self.field
        lu, rv = lincomb(F, u, self.left), lincomb(F, v, self.right)
        return self.outer(lu, rv) if lu and rv else {}

    def bracket(self, u, v) -> tuple:
        """Bracket of two elements given in quotient coordinates."""
        F = self.field
        out: SparseVec = {}
        su, sv = to_sparse(u), to_sparse(v)
        for k, a in su.items():
            row = self.bracket_table[k]
            for l, b in sv.items():
                if row[l]:
                    F.axpy(out, F.mul(a, b), row[l])
        return to_dense(F, out, self.dim)

    def class_of(self, v) -> tuple:
        return self.space.project(v)

    def as_algebra(self) -> LeibnizAlgebra:
        """The quotient with its induced bracket (identities not re-checked here)."""
        F = self.field
        d = self.dim
        c = tuple(tuple(to_dense(F, self.bracket_table[k][l], d) for l in range(d)) for k in range(d))
        return LeibnizAlgebra(F, self.labels, c)

    def check_well_defined(self) -> None:
        check_closed(self.relations, self.left, self.right, self.outer)

    def leibniz_violation(self):
        """First quotient basis triple violating the Leibniz identity, or None."""
        return self.as_algebra().first_violation()


def _vec_name(names: Sequence[str], v: SparseVec) -> str:
    if len(v) == 1:
        (k, x), = v.items()
        if x == 1:
            return names[k]
    return "(" + "+".join(f"{x}{names[k]}" for k, x in sorted(v.items())) + ")"


@dataclass(eq=False)
class PresentedSquare(_Presented):
    """``a * b`` (kind ``"tensor"``) or ``a ^ b`` (kind ``"exterior"``)."""

    algebra: LeibnizAlgebra = None
    a: Ideal = None
    b: Ideal = None
    theta_images: tuple = ()

    @property
    def da(self) -> int:
        return self.a.dim

    @property
    def db(self) -> int:
        return self.b.dim

    def flat(self, slot: int, i: int, j: int) -> int:
        return (slot - 1) * self.da * self.db + i * self.db + j

    def generator(self, flat: int) -> GeneratorIndex:
        slot, rest = divmod(flat, self.da * self.db)
        i, j = divmod(rest, self.db)
        return GeneratorIndex(slot + 1, i, j)

    def gen_class(self, slot: int, i: int, j: int) -> tuple:
        return self.space.project({self.flat(slot, i, j): self.field.one})

    def symbol(self, slot: int, ua: SparseVec, vb: SparseVec) -> SparseVec:
        """``u *slot v`` for ``u`` in a-coordinates and ``v`` in b-coordinates."""
        return _symbol(self.field, self.da, self.db, slot, ua, vb)


def _symbol(F: Field, da: int, db: int, slot: int, ua: SparseVec, vb: SparseVec) -> SparseVec:
    off = (slot - 1) * da * db
    out = {}
    for i, x in ua.items():
        for j, y in vb.items():
            out[off + i * db + j] = F.mul(x, y)
    return {k: v for k, v in out.items() if v}


class _Pair:
    """Coordinates and brackets for a pair of ideals of ``g``."""

    def __init__(self, g: LeibnizAlgebra, a: Ideal, b: Ideal):
        self.g, self.a, self.b = g, a, b
        self.F = g.field
        self.A = a.space.sparse_basis
        self.B = b.space.sparse_basis
        self.da, self.db = len(self.A), len(self.B)
        self.N = 2 * self.da * self.db

    def ca(self, v: SparseVec) -> SparseVec:
        return self.a.space.coords_sparse(v)

    def cb(self, v: SparseVec) -> SparseVec:
        return self.b.space.coords_sparse(v)

    def br(self, u: SparseVec, v: SparseVec) -> SparseVec:
        return self.g.bracket_sparse(u, v)

    def sym(self, slot: int, m: SparseVec, n: SparseVec) -> SparseVec:
        """``m *slot n`` for ambient vectors ``m`` in a and ``n`` in b."""
        return _symbol(self.F, self.da, self.db, slot, self.ca(m), self.cb(n))

    def comb(self, *terms) -> SparseVec:
        out: SparseVec = {}
        for sign, vec in terms:
            self.F.axpy(out, self.F(sign), vec)
        return out

    # action-relation instances on arbitrary elements m, m2 of a and n, n2 of b.
    # Names: slot of the leading symbol, then where its inner bracket lives
    # (aa: [m, m2], bb: [n, n2], sym: the symmetric sum that must vanish).

    def rel_first_bb(self, m, n, n2):
        br, s = self.br, self.sym
        return self.comb((1, s(1, m, br(n, n2))), (-1, s(1, br(m, n), n2)), (1, s(1, br(m, n2), n)))

    def rel_second_aa(self, m, m2, n):
        br, s = self.br, self.sym
        return self.comb((1, s(2, br(m, m2), n)), (-1, s(2, m2, br(n, m))), (1, s(2, m, br(n, m2))))

    def rel_first_aa(self, m, m2, n):
        br, s = self.br, self.sym
        return self.comb((1, s(1, br(m, m2), n)), (-1, s(2, m2, br(m, n))), (1, s(1, m, br(n, m2))))

    def rel_second_bb(self, m, n, n2):
        br, s = self.br, self.sym
        return self.comb((1, s(2, m, br(n, n2))), (-1, s(1, br(n, m), n2)), (1, s(2, br(m, n2), n)))

    def rel_first_sym(self, m, m2, n):
        br, s = self.br, self.sym
        return self.comb((1, s(1, m, br(m2, n))), (1, s(1, m, br(n, m2))))

    def rel_second_sym(self, m, n, n2):
        br, s = self.br, self.sym
        return self.comb((1, s(2, br(n2, m), n)), (1, s(2, br(m, n2), n)))

    def rel_swap(self, p, q):
        """``p *1 q - q *2 p`` for ``p, q`` in a ∩ b."""
        return self.comb((1, self.sym(1, p, q)), (-1, self.sym(2, q, p)))

    def action_relations(self) -> list:
        rels = []
        for m in self.A:
            for n, n2 in product(self.B, repeat=2):
                rels += [self.rel_first_bb(m, n, n2), self.rel_second_bb(m, n, n2), self.rel_second_sym(m, n, n2)]
            for m2, n in product(self.A, self.B):
                rels += [self.rel_second_aa(m, m2, n), self.rel_first_aa(m, m2, n), self.rel_first_sym(m, m2, n)]
        return rels

    def product_span(self) -> Subspace:
        vecs = []
        for m, n in product(self.A, self.B):
            vecs += [self.br(m, n), self.br(n, m)]
        return Subspace.span(self.F, self.g.dim, vecs)

    def product_relations(self) -> list:
        S = self.product_span().sparse_basis
        return [self.rel_swap(p, q) for p, q in product(S, repeat=2)]

    def literal_product_relations(self) -> list:
        """Outer equalities of the four product relations on all basis quadruples."""
        br, rels = self.br, []
        for m, n, m2, n2 in product(self.A, self.B, self.A, self.B):
            rels += [self.rel_swap(br(m, n), br(m2, n2)), self.rel_swap(br(n, m), br(n2, m2)),
                     self.rel_swap(br(m, n), br(n2, m2)), self.rel_swap(br(n, m), br(m2, n2))]
        return rels

    def literal_product_bracket(self, gen1: GeneratorIndex, gen2: GeneratorIndex) -> SparseVec:
        """Middle term of the product relations for a pair of generators."""
        m, n = self.A[gen1.i], self.B[gen1.j]
        m2, n2 = self.A[gen2.i], self.B[gen2.j]
        br, s = self.br, self.sym
        first = br(m, n) if gen1.slot == 1 else br(n, m)      # m^n  or  ^n m
        second = br(m2, n2) if gen2.slot == 1 else br(n2, m2)  # ^m' n'  or  n'^m'
        return s(1, first, second)

    def exterior_relations(self) -> list:
        C = self.a.space.intersect(self.b.space).sparse_basis
        return [self.rel_swap(c, c2) for c, c2 in product(C, repeat=2)]

    def images(self):
        """Per-generator images: theta (ambient), tau_a (a-coords), tau_b (b-coords)."""
        theta, ta, tb = [], [], []
        for slot in (1, 2):
            for m in self.A:
                for n in self.B:
                    v = self.br(m, n) if slot == 1 else self.br(n, m)
                    theta.append(v)
                    ta.append(self.ca(v))
                    tb.append(self.cb(v))
        return tuple(theta), tuple(ta), tuple(tb)

    def labels(self, sep: str) -> tuple:
        names = self.g.names
        an = [_vec_name(names, m) for m in self.A]
        bn = [_vec_name(names, n) for n in self.B]
        return tuple(f"{x}{sep}{slot}{y}" for slot in (1, 2) for x in an for y in bn)


def _finish(ctx: _Pair, kind: str, red: RowReducer, frontier: list, inst_rank: int,
            theta, ta, tb) -> PresentedSquare:
    F = ctx.F
    outer = lambda u, v: _symbol(F, ctx.da, ctx.db, 1, u, v)
    added = saturate(red, frontier, ta, tb, outer)
    rel = red.subspace()
    ps = PresentedSquare(
        field=F, kind=kind, gen_labels=ctx.labels("*" if kind == "tensor" else "^"),
        left=ta, right=tb, outer=outer, relations=rel, space=quotient(ctx.N, rel),
        instantiated_rank=inst_rank, saturation_added=added,
        algebra=ctx.g, a=ctx.a, b=ctx.b, theta_images=theta)
    ps.check_well_defined()
    for r in rel.sparse_basis:
        if lincomb(F, r, theta) or lincomb(F, r, ta) or lincomb(F, r, tb):
            raise WellDefinednessFailure("theta/tau does not vanish on a relation")
    ps._build_table()
    return ps


def _build(g: LeibnizAlgebra, a: Ideal, b: Ideal, exterior: bool) -> PresentedSquare:
    ctx = _Pair(g, a, b)
    theta, ta, tb = ctx.images()
    red = RowReducer(ctx.F, ctx.N)
    rels = ctx.action_relations() + ctx.product_relations()
    if exterior:
        rels += ctx.exterior_relations()
    frontier = [r for r in rels if red.add(r)]
    return _finish(ctx, "exterior" if exterior else "tensor", red, frontier, red.rank, theta, ta, tb)


def _check_ideals(g: LeibnizAlgebra, a: Ideal, b: Ideal):
    from .algebra import is_ideal
    for x in (a, b):
        if x.space.ambient_dim != g.dim or not is_ideal(g, x.space):
            raise ValueError("arguments must be ideals of g")


def tensor_pair(g: LeibnizAlgebra, a: Ideal, b: Ideal) -> PresentedSquare:
    _check_ideals(g, a, b)
    return _build(g, a, b, exterior=False)


def exterior_pair(g: LeibnizAlgebra, a: Ideal, b: Ideal) -> PresentedSquare:
    _check_ideals(g, a, b)
    return _build(g, a, b, exterior=True)


@lru_cache(maxsize=256)
def tensor_square(g: LeibnizAlgebra) -> PresentedSquare:
    return _build(g, whole(g), whole(g), exterior=False)


@lru_cache(maxsize=256)
def exterior_square(g: LeibnizAlgebra) -> PresentedSquare:
    return _build(g, whole(g), whole(g), exterior=True)


# -- maps out of a square ----------------------------------------------------

def _hom_from_generators(ps: _Presented, images: Sequence[SparseVec], target_dim: int) -> LinearHom:
    F = ps.field
    cols = [images[f] for f in ps.space.free]
    return LinearHom.from_images(F, cols, target_dim)


def theta(ps: PresentedSquare) -> LinearHom:
    """``m *1 n -> [m, n]``, ``m *2 n -> [n, m]`` into ``g`` (ambient coordinates)."""
    for r in ps.relations.sparse_basis:
        if lincomb(ps.field, r, ps.theta_images):
            raise WellDefinednessFailure("theta does not vanish on the relations")
    return _hom_from_generators(ps, ps.theta_images, ps.algebra.dim)


def tau_maps(ps: PresentedSquare) -> tuple[LinearHom, LinearHom]:
    """``(tau_a, tau_b)`` into a- and b-coordinates respectively."""
    return (_hom_from_generators(ps, ps.left, ps.da),
            _hom_from_generators(ps, ps.right, ps.db))


def hom_violation(ps: _Presented, hom: LinearHom, target_bracket: Callable):
    """First quotient basis pair with ``f[u, v] != [f u, f v]``, or None."""
    F = ps.field
    for k, l in product(range(ps.dim), repeat=2):
        u = tuple(F.one if t == k else F.zero for t in range(ps.dim))
        v = tuple(F.one if t == l else F.zero for t in range(ps.dim))
        if hom(ps.bracket(u, v)) != tuple(target_bracket(hom(u), hom(v))):
            return k, l
    return None


def subalgebra_bracket(g: LeibnizAlgebra, a: Ideal) -> Callable:
    """Bracket of ``a`` in its own echelon coordinates."""
    def br(u, v):
        return a.space.coords(g.bracket(a.space.combine(u), a.space.combine(v)))
    return br


def projection(g: LeibnizAlgebra) -> LinearHom:
    """The canonical epimorphism ``g*g -> g^g`` in quotient coordinates."""
    T, X = tensor_square(g), exterior_square(g)
    imgs = [X.space.project_sparse(T.space.section_sparse(k)) for k in range(T.dim)]
    return LinearHom.from_images(g.field, imgs, X.dim)


def nabla(g: LeibnizAlgebra) -> Subspace:
    """Kernel of ``g*g -> g^g``: the image of the exterior relations in ``g*g``."""
    T, X = tensor_square(g), exterior_square(g)
    return Subspace.span(g.field, T.dim, [T.space.project_sparse(r) for r in X.relations.sparse_basis])


def _center_of(g: LeibnizAlgebra, ps: PresentedSquare) -> Subspace:
    """``{z : z *1 x_j = z *2 x_j = 0 for all j}`` in ``ps``."""
    F = g.field
    n = g.dim
    if n == 0:
        return Subspace.zero(F, 0)
    cols = []
    for i in range(n):
        col = []
        for slot in (1, 2):
            for j in range(n):
                col.extend(ps.gen_class(slot, i, j))
        cols.append(col)
    return kernel(Matrix.from_columns(F, cols, 2 * n * ps.dim))


def tensor_center(g: LeibnizAlgebra) -> Subspace:
    return _center_of(g, tensor_square(g))


def exterior_center(g: LeibnizAlgebra) -> Subspace:
    return _center_of(g, exterior_square(g))


@dataclass(frozen=True)
class CapabilityVerdict:
    capable: bool
    dim_exterior_center: int
    dim_tensor_center: int
    dim_center: int

    def __bool__(self):
        return self.capable


def is_capable(g: LeibnizAlgebra) -> CapabilityVerdict:
    """Capable exactly when the exterior center vanishes."""
    ze = exterior_center(g)
    return CapabilityVerdict(ze.is_zero(), ze.dim, tensor_center(g).dim, center(g).dim)


def induced_ab_map(g: LeibnizAlgebra) -> LinearHom:
    """``g*g -> g^ab * g^ab`` induced by ``x -> x + [g, g]`` on both factors."""
    F = g.field
    h, proj = abelianization(g)
    T, Tab = tensor_square(g), tensor_square(h)
    p = [to_sparse(proj(g.unit(i))) for i in range(g.dim)]
    gen_images = []
    for slot in (1, 2):
        for i in range(g.dim):
            for j in range(g.dim):
                gen_images.append(Tab.space.project_sparse(Tab.symbol(slot, p[i], p[j])))
    for r in T.relations.sparse_basis:
        if lincomb(F, r, gen_images):
            raise WellDefinednessFailure("induced map does not vanish on the relations")
    return _hom_from_generators(T, gen_images, Tab.dim)


def multiplier_space(g: LeibnizAlgebra) -> Subspace:
    """Kernel of theta on the exterior square."""
    return theta(exterior_square(g)).kernel()


def multiplier(g: LeibnizAlgebra) -> int:
    return multiplier_space(g).dim


def tensor_square_center(g: LeibnizAlgebra) -> Subspace:
    """Center of ``g*g`` as a Leibniz algebra, in its quotient coordinates."""
    return center(tensor_square(g).as_algebra())
