"""Invariant checks and machine-readable reports for one algebra."""

from __future__ import annotations

from itertools import product
from typing import Callable

from . import __version__
from .algebra import (LeibnizAlgebra, abelianization, biderivations, center, commutator,
                      direct_product, inner_biderivations, is_ideal, is_lie, is_perfect,
                      liezation)
from .lie import (lie_exterior_center, lie_exterior_square, lie_is_capable, lie_tensor_center,
                  lie_tensor_square)
from .linalg import Subspace
from .tensor import (exterior_center, exterior_square, hom_violation, induced_ab_map,
                     is_capable, multiplier, nabla, projection, subalgebra_bracket,
                     tau_maps, tensor_center, tensor_square, tensor_square_center, theta)


def _safe(check: Callable[[], bool]) -> bool:
    try:
        return bool(check())
    except (AssertionError, ValueError, ArithmeticError):
        return False


def _slot_symmetry(g: LeibnizAlgebra) -> bool:
    X = exterior_square(g)
    return all(X.gen_class(1, i, j) == X.gen_class(2, j, i)
               for i, j in product(range(g.dim), repeat=2))


def _theta_hom(g: LeibnizAlgebra, ps) -> bool:
    return hom_violation(ps, theta(ps), g.bracket) is None


def _tau_hom(g: LeibnizAlgebra) -> bool:
    T = tensor_square(g)
    ta, tb = tau_maps(T)
    return (hom_violation(T, ta, subalgebra_bracket(g, T.a)) is None
            and hom_violation(T, tb, subalgebra_bracket(g, T.b)) is None)


def _well_defined(*squares) -> bool:
    for ps in squares:
        ps.check_well_defined()  # raises WellDefinednessFailure
    return True


def _biderivations_ok(g: LeibnizAlgebra) -> bool:
    space, table = biderivations(g)  # raises if the bracket leaves BiDer
    B = LeibnizAlgebra(g.field, tuple(f"b{i}" for i in range(space.dim)),
           tuple(tuple(tuple(t) for t in row) for row in table))
    return inner_biderivations(g) <= space and B.first_violation() is None


def _centers_blockwise(total: Subspace, left: Subspace, right: Subspace) -> bool:
    F = total.field
    n, m = left.ambient_dim, right.ambient_dim
    z = F.zero
    vecs = [tuple(v) + (z,) * m for v in left.basis] + [(z,) * n + tuple(v) for v in right.basis]
    return total == Subspace.span(F, n + m, vecs)


def invariant_checks(g: LeibnizAlgebra) -> list[tuple[str, Callable[[], bool]]]:
    """``(id, check)`` pairs applicable to ``g``, in a fixed order."""
    checks = [
        ("leibniz_identity", lambda: g.first_violation() is None),
        ("center_is_ideal", lambda: is_ideal(g, center(g))),
        ("commutator_is_ideal", lambda: is_ideal(g, commutator(g).space)),
        ("tensor_square_leibniz", lambda: tensor_square(g).leibniz_violation() is None),
        ("exterior_square_leibniz", lambda: exterior_square(g).leibniz_violation() is None),
        ("squares_well_defined", lambda: _well_defined(tensor_square(g), exterior_square(g))),
        ("theta_homomorphism", lambda: _theta_hom(g, tensor_square(g)) and _theta_hom(g, exterior_square(g))),
        ("tau_homomorphism", lambda: _tau_hom(g)),
        ("exterior_slot_symmetry", lambda: _slot_symmetry(g)),
        ("centers_nested", lambda: tensor_center(g) <= exterior_center(g) <= center(g)),
        ("tensor_center_equals_exterior_center", lambda: tensor_center(g) == exterior_center(g)),
        ("tensor_center_is_exterior_center_in_commutator",
         lambda: tensor_center(g) == exterior_center(g).intersect(commutator(g).space)),
        ("tensor_square_splits",
         lambda: tensor_square(g).dim == exterior_square(g).dim + nabla(g).dim),
        ("nabla_is_projection_kernel", lambda: nabla(g) == projection(g).kernel()),
        ("nabla_depends_on_abelianization",
         lambda: nabla(g).dim == nabla(abelianization(g)[0]).dim),
        ("abelianization_kernel_meets_nabla_trivially",
         lambda: induced_ab_map(g).kernel().intersect(nabla(g)).is_zero()),
        ("inner_biderivations_rank", lambda: inner_biderivations(g).dim == g.dim - center(g).dim),
        ("biderivations_closed", lambda: _biderivations_ok(g)),
        ("liezation_is_lie", lambda: is_lie(liezation(g))),
    ]
    if is_lie(g):
        checks += [
            ("liezation_fixes_lie", lambda: liezation(g).c == g.c),
            ("lie_squares_jacobi", lambda: lie_exterior_square(g).jacobi_violation() is None
             and lie_tensor_square(g).jacobi_violation() is None),
            ("lie_squares_well_defined",
             lambda: _well_defined(lie_exterior_square(g), lie_tensor_square(g))),
            ("lie_exterior_alternating", lambda: all(
                not any(lie_exterior_square(g).gen_class(i, i)) for i in range(g.dim))),
            ("lie_capable_implies_capable", lambda: not lie_is_capable(g) or bool(is_capable(g))),
        ]
    if is_perfect(g):
        checks += [
            ("perfect_tensor_equals_exterior",
             lambda: exterior_square(g).relations <= tensor_square(g).relations),
            ("perfect_multiplier_central",
             lambda: theta(tensor_square(g)).kernel() <= tensor_square_center(g)),
            ("perfect_capable_iff_centerless",
             lambda: bool(is_capable(g)) == center(g).is_zero()),
        ]
        if is_lie(g):
            checks.append(("perfect_lie_capable_iff_centerless",
                           lambda: lie_is_capable(g) == center(g).is_zero()))
    return checks


def check_invariants(g: LeibnizAlgebra) -> list[dict]:
    return [{"id": name, "pass": _safe(fn)} for name, fn in invariant_checks(g)]


def product_checks(g: LeibnizAlgebra, h: LeibnizAlgebra) -> list[dict]:
    """Blockwise centers of ``g x h`` for perfect ``g``."""
    if not is_perfect(g):
        raise ValueError("first factor must be perfect")
    gh = direct_product(g, h)
    out = [{"id": "tensor_center_of_product",
            "pass": _safe(lambda: _centers_blockwise(tensor_center(gh), tensor_center(g),
                                                     tensor_center(h)))},
           {"id": "center_of_product",
            "pass": _safe(lambda: _centers_blockwise(center(gh), center(g), center(h)))}]
    if is_lie(g) and is_lie(h):
        out.append({"id": "lie_exterior_center_of_product",
                    "pass": _safe(lambda: _centers_blockwise(lie_exterior_center(gh),
                                                             lie_exterior_center(g),
                                                             lie_exterior_center(h)))})
        out.append({"id": "lie_tensor_center_of_product",
                    "pass": _safe(lambda: _centers_blockwise(lie_tensor_center(gh),
                                                             lie_tensor_center(g),
                                                             lie_tensor_center(h)))})
    return out


def algebra_report(name: str, g: LeibnizAlgebra, invariants: bool = True) -> dict:
    T, X = tensor_square(g), exterior_square(g)
    verdict = is_capable(g)
    lie = is_lie(g)
    report = {
        "version": __version__,
        "name": name,
        "field": str(g.field),
        "characteristic": g.field.characteristic,
        "dim": g.dim,
        "dims": {
            "commutator": commutator(g).dim,
            "center": verdict.dim_center,
            "tensor_square": T.dim,
            "exterior_square": X.dim,
            "nabla": nabla(g).dim,
            "ker_theta": multiplier(g),
            "tensor_center": verdict.dim_tensor_center,
            "exterior_center": verdict.dim_exterior_center,
        },
        "capable": verdict.capable,
        "lie_capable": lie_is_capable(g) if lie else None,
        "lie": {"exterior_square": lie_exterior_square(g).dim,
                "exterior_center": lie_exterior_center(g).dim} if lie else None,
        "saturation_added": {"tensor": T.saturation_added, "exterior": X.saturation_added},
    }
    if invariants:
        report["invariants"] = check_invariants(g)
    return report
