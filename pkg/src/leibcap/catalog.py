"""Named test algebras.

Golden values were fixed with the brute-force oracle in ``tests/oracle.py``
(literal relation instantiation, sympy ranks) or by the abelian formulas
``dim g*g = 2n^2``, ``dim g^g = n^2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable

from .algebra import (LeibnizAlgebra, abelian, direct_product, from_brackets, is_abelian,
                      is_lie, is_perfect, zero_algebra)
from .exactfield import QQ, Field


class UnknownAlgebra(KeyError):
    pass


class CharacteristicError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: LeibnizAlgebra
    description: str
    golden: dict = dc_field(default_factory=dict)

    @property
    def tags(self) -> dict:
        g = self.algebra
        return {"lie": is_lie(g), "perfect": is_perfect(g), "abelian": is_abelian(g)}


def _sl2(F: Field) -> LeibnizAlgebra:
    return from_brackets(F, ["e", "f", "h"], {
        ("e", "f"): {"h": 1}, ("f", "e"): {"h": -1},
        ("h", "e"): {"e": 2}, ("e", "h"): {"e": -2},
        ("h", "f"): {"f": -2}, ("f", "h"): {"f": 2},
    })


def _heisenberg3(F: Field) -> LeibnizAlgebra:
    return from_brackets(F, ["x", "y", "z"], {("x", "y"): {"z": 1}, ("y", "x"): {"z": -1}})


def _heisenberg5(F: Field) -> LeibnizAlgebra:
    return from_brackets(F, ["x1", "y1", "x2", "y2", "z"], {
        ("x1", "y1"): {"z": 1}, ("y1", "x1"): {"z": -1},
        ("x2", "y2"): {"z": 1}, ("y2", "x2"): {"z": -1},
    })


def _nullfiliform2(F: Field) -> LeibnizAlgebra:
    return from_brackets(F, ["x", "y"], {("x", "x"): {"y": 1}})


def _nullfiliform3(F: Field) -> LeibnizAlgebra:
    return from_brackets(F, ["a", "b", "c"], {("a", "a"): {"b": 1}, ("b", "a"): {"c": 1}})


def _r2(F: Field) -> LeibnizAlgebra:
    return from_brackets(F, ["x", "y"], {("x", "y"): {"y": 1}, ("y", "x"): {"y": -1}})


def _right_solvable2(F: Field) -> LeibnizAlgebra:
    return from_brackets(F, ["x", "y"], {("y", "x"): {"y": 1}})


def _twisted3(F: Field) -> LeibnizAlgebra:
    return from_brackets(F, ["x", "y", "z"], {("x", "z"): {"y": 1}, ("z", "x"): {"y": -2}})


def _K(F: Field) -> LeibnizAlgebra:
    return abelian(F, 1, ["k"])


_SL2_GUARD = (2, 3)

# name -> (builder, description, golden values, forbidden characteristics)
_ENTRIES: dict[str, tuple[Callable, str, dict, tuple]] = {
    "zero": (zero_algebra, "the zero algebra",
             {"tensor_square": 0, "exterior_square": 0, "nabla": 0, "capable": True}, ()),
    "nullfiliform2": (_nullfiliform2, "null-filiform Leibniz algebra [x,x]=y",
                      {"tensor_square": 3, "exterior_square": 2, "nabla": 1,
                       "tensor_center": 0, "exterior_center": 0, "multiplier": 1,
                       "capable": True}, ()),
    "nullfiliform3": (_nullfiliform3, "null-filiform Leibniz algebra [a,a]=b, [b,a]=c", {}, ()),
    "r2": (_r2, "two-dimensional non-abelian Lie algebra [x,y]=y",
           {"tensor_square": 3, "exterior_square": 2, "nabla": 1, "lie_exterior_square": 1}, ()),
    "right_solvable2": (_right_solvable2, "non-Lie Leibniz algebra [y,x]=y", {}, ()),
    "heisenberg3": (_heisenberg3, "Heisenberg Lie algebra [x,y]=z",
                    {"tensor_square": 10, "exterior_square": 6, "nabla": 4,
                     "tensor_center": 0, "exterior_center": 0, "lie_exterior_square": 3}, ()),
    "heisenberg5": (_heisenberg5, "five-dimensional Heisenberg Lie algebra", {}, ()),
    "twisted3": (_twisted3, "non-Lie Leibniz algebra [x,z]=y, [z,x]=-2y",
                 {"tensor_square": 8, "exterior_square": 4, "nabla": 4,
                  "tensor_center": 1, "exterior_center": 1, "capable": False}, ()),
    "sl2": (_sl2, "sl2 with [e,f]=h, [h,e]=2e, [h,f]=-2f",
            {"tensor_square": 3, "exterior_square": 3, "nabla": 0, "center": 0,
             "capable": True, "lie_exterior_square": 3}, _SL2_GUARD),
    "sl2_x_K": (lambda F: direct_product(_sl2(F), _K(F)), "sl2 times the one-dimensional algebra",
                {"capable": True, "lie_capable": False, "lie_exterior_center": 1}, _SL2_GUARD),
    "nullfiliform2_x_K": (lambda F: direct_product(_nullfiliform2(F), _K(F)),
                          "null-filiform N2 times the one-dimensional algebra", {}, ()),
    "sl2_x_heisenberg3": (lambda F: direct_product(_sl2(F), _heisenberg3(F)),
                          "sl2 times the Heisenberg algebra", {}, _SL2_GUARD),
}
for _n in range(1, 5):
    _ENTRIES[f"abelian{_n}"] = (
        (lambda n: lambda F: abelian(F, n, ["k"] if n == 1 else [f"a{i + 1}" for i in range(n)]))(_n),
        f"abelian algebra of dimension {_n}",
        {"tensor_square": 2 * _n * _n, "exterior_square": _n * _n, "nabla": _n * _n,
         "exterior_center": 0, "multiplier": _n * _n, "capable": True},
        (),
    )


def catalog_list() -> list[str]:
    return sorted(_ENTRIES)


def catalog_get(name: str, field: Field = QQ) -> CatalogEntry:
    try:
        build, descr, golden, guard = _ENTRIES[name]
    except KeyError:
        raise UnknownAlgebra(name) from None
    if field.characteristic in guard:
        raise CharacteristicError(f"{name} is not available in characteristic {field.characteristic}")
    return CatalogEntry(name, build(field), descr, dict(golden))


def catalog_entries(field: Field = QQ) -> list[CatalogEntry]:
    """All entries available over ``field``, sorted by name."""
    out = []
    for name in catalog_list():
        try:
            out.append(catalog_get(name, field))
        except CharacteristicError:
            continue
    return out
