"""Seeded random Leibniz algebras for property testing.

Sparse integer structure constants are drawn (sometimes antisymmetrized so
that Lie algebras show up too), kept only if they pass the Leibniz identity,
and then moved to a random basis so the constants are no longer sparse.
"""

from __future__ import annotations

import random

from .algebra import (LeibnizAlgebra, LeibnizIdentityViolation, abelian, change_basis,
                      validate)
from .exactfield import Field
from .linalg import Matrix, Subspace

COEFFS = (-2, -1, 1, 2)


def _random_constants(n: int, rng: random.Random, lie: bool) -> list:
    c = [[[0] * n for _ in range(n)] for _ in range(n)]
    for _ in range(rng.randint(1, 4)):
        i, j, k = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        x = rng.choice(COEFFS)
        if lie:
            if i == j:
                continue
            c[i][j][k], c[j][i][k] = x, -x
        else:
            c[i][j][k] = x
    return c


def random_basis_change(field: Field, n: int, rng: random.Random) -> Matrix:
    while True:
        rows = [[rng.choice((-1, 0, 0, 1, 2)) for _ in range(n)] for _ in range(n)]
        P = Matrix.from_rows(field, rows, n)
        if Subspace.span(field, n, P.rows).dim == n:
            return P


def random_leibniz(n: int, field: Field, rng: random.Random, max_tries: int = 10_000) -> LeibnizAlgebra:
    """A valid Leibniz algebra of dimension ``n``; falls back to abelian after ``max_tries``."""
    names = [f"e{i + 1}" for i in range(n)]
    if n == 0:
        return abelian(field, 0)
    g = None
    for _ in range(max_tries):
        lie = rng.random() < 0.35
        try:
            g = validate(_random_constants(n, rng, lie), field, names)
            break
        except LeibnizIdentityViolation:
            continue
    if g is None:
        g = abelian(field, n, names)
    return validate(change_basis(g, random_basis_change(field, n, rng)).c, field, names)


def random_corpus(count: int, dim_max: int, field: Field, seed: int, dim_min: int = 1) -> list:
    """``count`` named random algebras with dimensions cycling through ``dim_min..dim_max``."""
    if dim_max < dim_min:
        return []
    rng = random.Random(f"{seed}:{field}")
    dims = list(range(dim_min, dim_max + 1))
    out = []
    for k in range(count):
        n = dims[k % len(dims)]
        out.append((f"random_{field}_{seed}_{k:03d}", random_leibniz(n, field, rng)))
    return out
