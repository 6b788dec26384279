import random
from itertools import product

import pytest

from leibcap.algebra import (Ideal, abelian, abelianization, center, commutator, ideal, whole)
from leibcap.catalog import catalog_get
from leibcap.exactfield import GF, QQ
from leibcap.linalg import Subspace, to_sparse
from leibcap.tensor import (GeneratorIndex, _Pair, exterior_center, exterior_pair, exterior_square,
                            hom_violation, induced_ab_map, is_capable, multiplier, nabla, projection,
                            subalgebra_bracket, tau_maps, tensor_center, tensor_pair, tensor_square,
                            tensor_square_center, theta)

from helpers import FIELDS, random_algebras

X, Y = 0, 1


@pytest.fixture(scope="module")
def n2():
    return catalog_get("nullfiliform2").algebra


def zero_class(ps, slot, i, j):
    return not any(ps.gen_class(slot, i, j))


def test_n2_tensor_square(n2):
    T = tensor_square(n2)
    assert T.dim == 3
    assert T.labels == ("x*1x", "x*2x", "x*2y")
    for slot, i, j in [(1, X, Y), (1, Y, Y), (2, Y, X), (2, Y, Y)]:
        assert zero_class(T, slot, i, j)
    assert T.gen_class(1, Y, X) == T.gen_class(2, X, Y)
    assert not zero_class(T, 1, X, X) and not zero_class(T, 2, X, Y)
    assert all(not v for row in T.bracket_table for v in row)


def test_n2_exterior_square(n2):
    E = exterior_square(n2)
    assert E.dim == 2
    assert E.gen_class(1, X, X) == E.gen_class(2, X, X)
    assert not zero_class(E, 2, X, Y)
    assert E.gen_class(1, Y, X) == E.gen_class(2, X, Y)


def test_center_times_algebra(n2):
    # trivial mutual actions: Z(g) * g = Z(g) * g^ab, here K * K
    Z = ideal(n2, center(n2))
    assert tensor_pair(n2, Z, whole(n2)).dim == 2
    # perfect case: Z(sl2 x K) * (sl2 x K) = K * K again, and 0 for sl2 alone
    g = catalog_get("sl2_x_K").algebra
    assert tensor_pair(g, ideal(g, center(g)), whole(g)).dim == 2
    sl2 = catalog_get("sl2").algebra
    assert tensor_pair(sl2, ideal(sl2, center(sl2)), whole(sl2)).dim == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_abelian_squares(n):
    g = abelian(QQ, n)
    assert tensor_square(g).dim == 2 * n * n
    assert exterior_square(g).dim == n * n
    assert theta(tensor_square(g)).is_zero()
    assert all(t.is_zero() for t in tau_maps(tensor_square(g)))
    assert multiplier(g) == n * n


def test_sl2_perfect():
    g = catalog_get("sl2").algebra
    T, E = tensor_square(g), exterior_square(g)
    assert T.dim == E.dim == 3
    assert E.relations <= T.relations
    assert theta(T).image().dim == 3
    assert induced_ab_map(g).target_dim == 0
    assert multiplier(g) == 0


def test_theta_and_tau_on_n2(n2):
    T = tensor_square(n2)
    th = theta(T)
    assert th(T.gen_class(1, X, X)) == (0, 1)
    assert th.image() == commutator(n2).space
    ta, tb = tau_maps(T)
    # a = b = g with the identity basis, so tau(x *1 x) = [x, x] = y in both slots
    assert ta(T.gen_class(1, X, X)) == (0, 1) == tb(T.gen_class(1, X, X))


def test_multiplier_n2(n2):
    assert multiplier(n2) == 1


def test_induced_ab_map(n2):
    f = induced_ab_map(n2)
    assert (f.source_dim, f.target_dim) == (3, 2)
    assert f.image().dim == 2
    g = abelian(QQ, 2)
    assert induced_ab_map(g).kernel().is_zero()
    assert induced_ab_map(g).image().dim == tensor_square(g).dim


def test_nabla_values(n2):
    assert nabla(abelian(QQ, 1)).dim == 1
    assert nabla(abelian(QQ, 3)).dim == 9
    assert nabla(n2).dim == 1 == nabla(abelianization(n2)[0]).dim
    assert nabla(n2) == projection(n2).kernel()


def test_centers_examples(n2):
    assert tensor_center(n2).is_zero() and exterior_center(n2).is_zero()
    assert tensor_center(catalog_get("sl2").algebra).is_zero()
    for n in (1, 2, 3):
        assert exterior_center(abelian(QQ, n)).is_zero()
    tw = catalog_get("twisted3").algebra
    assert tensor_center(tw) == exterior_center(tw) == center(tw)


def test_capability_examples(n2):
    assert is_capable(abelian(QQ, 1))
    assert is_capable(catalog_get("sl2_x_K").algebra)
    assert is_capable(n2)
    v = is_capable(catalog_get("heisenberg5").algebra)
    assert not v and (v.dim_exterior_center, v.dim_tensor_center, v.dim_center) == (1, 1, 1)


def test_zero_dimensional():
    g = catalog_get("zero").algebra
    T = tensor_square(g)
    assert T.dim == 0 and T.bracket_table == []
    assert is_capable(g) and multiplier(g) == 0


# -- presentation details

def pair(g):
    return _Pair(g, whole(g), whole(g))


@pytest.mark.parametrize("name", ["nullfiliform2", "heisenberg3", "twisted3", "sl2", "nullfiliform3",
                                  "right_solvable2"])
def test_product_relations_match_literal_quadruples(name):
    g = catalog_get(name).algebra
    ctx = pair(g)
    literal = Subspace.span(g.field, ctx.N, ctx.action_relations() + ctx.literal_product_relations())
    reduced = Subspace.span(g.field, ctx.N, ctx.action_relations() + ctx.product_relations())
    assert literal == reduced
    assert literal <= tensor_square(g).relations


def test_bracket_is_middle_term_of_product_relations():
    for name in ("nullfiliform2", "twisted3", "sl2", "heisenberg3"):
        g = catalog_get(name).algebra
        ctx, T = pair(g), tensor_square(g)
        for f1, f2 in product(range(ctx.N), repeat=2):
            g1, g2 = T.generator(f1), T.generator(f2)
            assert T.bracket_generators({f1: g.field.one}, {f2: g.field.one}) == \
                ctx.literal_product_bracket(g1, g2), (name, g1, g2)


def test_linearization_on_random_vectors():
    rng = random.Random(7)
    for F in FIELDS:
        for _, g in random_algebras(F)[:25]:
            if g.dim == 0:
                continue
            ctx, T, E = pair(g), tensor_square(g), exterior_square(g)
            rand = lambda: to_sparse(tuple(F(rng.randint(-3, 3)) for _ in range(g.dim)))
            for _ in range(3):
                m, m2, n, n2 = rand(), rand(), rand(), rand()
                for r in (ctx.rel_first_bb(m, n, n2), ctx.rel_second_aa(m, m2, n), ctx.rel_first_aa(m, m2, n),
                          ctx.rel_second_bb(m, n, n2), ctx.rel_first_sym(m, m2, n), ctx.rel_second_sym(m, n, n2),
                          ctx.rel_swap(g.bracket_sparse(m, n), g.bracket_sparse(m2, n2)),
                          ctx.rel_swap(g.bracket_sparse(n, m), g.bracket_sparse(n2, m2))):
                    assert T.relations.contains(r)
                assert E.relations.contains(ctx.rel_swap(m, n))


def test_pairs_of_proper_ideals():
    for F in FIELDS:
        for _, g in random_algebras(F)[:40]:
            a = commutator(g)
            z = Ideal(g, center(g))
            for A, B in [(a, whole(g)), (whole(g), a), (z, a), (a, a)]:
                for ps in (tensor_pair(g, A, B), exterior_pair(g, A, B)):
                    ps.check_well_defined()
                    assert ps.leibniz_violation() is None
                    assert hom_violation(ps, theta(ps), g.bracket) is None
                    ta, tb = tau_maps(ps)
                    assert hom_violation(ps, ta, subalgebra_bracket(g, A)) is None
                    assert hom_violation(ps, tb, subalgebra_bracket(g, B)) is None


def test_generator_indexing():
    g = catalog_get("heisenberg3").algebra
    T = tensor_square(g)
    assert T.flat(2, 1, 2) == 9 + 1 * 3 + 2
    assert T.generator(14) == GeneratorIndex(2, 1, 2)
    assert len(T.gen_labels) == T.ambient_dim == 18


def test_ker_theta_central_for_perfect():
    g = catalog_get("sl2").algebra
    assert theta(tensor_square(g)).kernel() <= tensor_square_center(g)


def test_prime_field_agrees_on_integer_catalog():
    for name in ("nullfiliform2", "heisenberg3", "twisted3", "sl2", "r2"):
        q, p = catalog_get(name, QQ).algebra, catalog_get(name, GF(5)).algebra
        assert (tensor_square(q).dim, exterior_square(q).dim) == (tensor_square(p).dim, exterior_square(p).dim)
