"""Shared corpora for the test modules."""

from functools import lru_cache

from leibcap.catalog import catalog_entries
from leibcap.exactfield import GF, QQ
from leibcap.randalg import random_corpus

FIELDS = (QQ, GF(5))
RANDOM_COUNT = 100
RANDOM_SEED = 2024


@lru_cache(maxsize=None)
def random_algebras(field, count=RANDOM_COUNT, dim_max=3, seed=RANDOM_SEED):
    return tuple(random_corpus(count, dim_max, field, seed))


@lru_cache(maxsize=None)
def catalog_algebras(field):
    return tuple((e.name, e.algebra) for e in catalog_entries(field))


def full_corpus():
    """(label, algebra) over both fields: catalog plus the seeded random algebras."""
    out = []
    for F in FIELDS:
        out += [(f"{F}/{n}", g) for n, g in catalog_algebras(F)]
        out += [(f"{F}/{n}", g) for n, g in random_algebras(F)]
    return out
