"""Acceptance criteria, all exact.

Each test records one ``PASS``/``FAIL`` line in ``RESULTS`` (shown in the
pytest terminal summary) and then asserts.  ``python3 tests/test_acceptance.py``
runs them standalone.
"""

import json
import subprocess
import sys
from itertools import product

from leibcap.algebra import (abelian, abelianization, biderivations, center, commutator,
                             direct_product, inner_biderivations, is_lie, is_perfect)
from leibcap.catalog import catalog_get
from leibcap.exactfield import QQ
from leibcap.lie import lie_exterior_center, lie_exterior_square, lie_tensor_center, lie_tensor_square
from leibcap.tensor import (exterior_center, exterior_square, hom_violation, induced_ab_map,
                            is_capable, nabla, subalgebra_bracket, tau_maps, tensor_center,
                            tensor_square, tensor_square_center, theta)

from helpers import FIELDS, RANDOM_COUNT, catalog_algebras, full_corpus, random_algebras

RESULTS: list[str] = []


def record(number: int, title: str, failures: list, detail: str = "") -> None:
    ok = not failures
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}"
    if detail:
        line += f" ({detail})"
    if not ok:
        line += f"; failing: {failures[:5]}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def corpus_size() -> str:
    n_rand = sum(len(random_algebras(F)) for F in FIELDS)
    n_cat = sum(len(catalog_algebras(F)) for F in FIELDS)
    return f"{n_cat} catalog + {n_rand} random algebras over {', '.join(map(str, FIELDS))}"


def test_01_abelian_formulas():
    bad = []
    for n in range(1, 5):
        g = abelian(QQ, n)
        got = (tensor_square(g).dim, exterior_square(g).dim)
        if got != (2 * n * n, n * n):
            bad.append((n, got))
    record(1, "abelian dim g*g = 2n^2, dim g^g = n^2 for n = 1..4", bad)


def test_02_nullfiliform_goldens():
    g = catalog_get("nullfiliform2").algebra
    got = {"tensor": tensor_square(g).dim, "exterior": exterior_square(g).dim, "nabla": nabla(g).dim,
           "tensor_center": tensor_center(g).dim, "exterior_center": exterior_center(g).dim,
           "capable": bool(is_capable(g))}
    want = {"tensor": 3, "exterior": 2, "nabla": 1, "tensor_center": 0, "exterior_center": 0,
            "capable": True}
    record(2, "N2 goldens (3, 2, 1), centers 0, capable", [k for k in want if got[k] != want[k]])


def test_03_center_identities():
    bad = []
    for label, g in full_corpus():
        zt, ze = tensor_center(g), exterior_center(g)
        if zt != ze or zt != ze.intersect(commutator(g).space):
            bad.append(label)
    assert len(random_algebras(QQ)) >= RANDOM_COUNT >= 100
    record(3, "tensor center = exterior center = exterior center meet [g,g]", bad, corpus_size())


def test_04_nabla_identities():
    bad = []
    for label, g in full_corpus():
        if tensor_square(g).dim != exterior_square(g).dim + nabla(g).dim:
            bad.append((label, "split"))
        if nabla(g).dim != nabla(abelianization(g)[0]).dim:
            bad.append((label, "abelianization"))
        if not induced_ab_map(g).kernel().intersect(nabla(g)).is_zero():
            bad.append((label, "kernel"))
    record(4, "g*g = g^g + nabla, nabla(g) = nabla(g^ab), ker pi meets nabla trivially", bad,
           corpus_size())


def test_05_perfect_suite():
    g = catalog_get("sl2").algebra
    T, E = tensor_square(g), exterior_square(g)
    checks = {
        "perfect": is_perfect(g),
        "tensor = exterior": E.relations <= T.relations and T.dim == E.dim,
        "ker theta central": theta(T).kernel() <= tensor_square_center(g),
        "center zero": center(g).is_zero(),
        "capable": bool(is_capable(g)),
    }
    record(5, "sl2: g*g = g^g, ker theta central, Z = 0 and capable", [k for k, v in checks.items() if not v])


def test_06_lie_leibniz_split():
    g = catalog_get("sl2_x_K").algebra
    checks = {"leibniz capable": exterior_center(g).is_zero(),
              "lie exterior center dim 1": lie_exterior_center(g).dim == 1}
    record(6, "sl2 x K capable as Leibniz, not as Lie", [k for k, v in checks.items() if not v])


def test_07_products():
    sl2 = catalog_get("sl2").algebra
    bad = []
    for name in ("heisenberg3", "abelian2", "nullfiliform2"):
        h = catalog_get(name).algebra
        gh = direct_product(sl2, h)
        if tensor_center(gh).dim != tensor_center(sl2).dim + tensor_center(h).dim:
            bad.append(name)
    lie_names = [n for n, h in catalog_algebras(QQ) if is_lie(h) and 0 < h.dim <= 3]
    for name in lie_names:
        h = catalog_get(name).algebra
        gh = direct_product(sl2, h)
        if lie_exterior_center(gh).dim != lie_exterior_center(sl2).dim + lie_exterior_center(h).dim:
            bad.append(f"lie:{name}")
    record(7, "centers of sl2 x h add up (Leibniz tensor and Lie exterior)", bad,
           f"Lie factors {', '.join(lie_names)}")


def test_08_structural_soundness():
    bad = []
    count = 0
    for label, g in full_corpus():
        T = tensor_square(g)
        squares = [T, exterior_square(g)]
        if is_lie(g):
            squares += [lie_exterior_square(g), lie_tensor_square(g)]
        for ps in squares:
            count += 1
            try:
                ps.check_well_defined()
            except AssertionError:
                bad.append((label, ps.kind, "well-defined"))
            viol = ps.jacobi_violation() if ps.kind.startswith("lie") else ps.leibniz_violation()
            if viol is not None:
                bad.append((label, ps.kind, "identity"))
            if not ps.kind.startswith("lie") and hom_violation(ps, theta(ps), g.bracket) is not None:
                bad.append((label, ps.kind, "theta"))
        ta, tb = tau_maps(T)
        if (hom_violation(T, ta, subalgebra_bracket(g, T.a)) is not None
                or hom_violation(T, tb, subalgebra_bracket(g, T.b)) is not None):
            bad.append((label, "tau"))
    record(8, "squares well defined, identity residuals zero, theta and tau homomorphisms", bad,
           f"{count} squares")


def test_09_biderivations():
    bad = []
    for F in FIELDS:
        for name, g in catalog_algebras(F):
            if inner_biderivations(g).dim != g.dim - center(g).dim:
                bad.append(f"{F}/{name}")
    for n in range(1, 4):
        if biderivations(abelian(QQ, n))[0].dim != 2 * n * n:
            bad.append(f"abelian{n}")
    record(9, "dim InnBiDer = dim q - dim Z(q); abelian dim BiDer = 2n^2", bad)


def test_10_suite_determinism():
    cmd = [sys.executable, "-m", "leibcap.cli", "suite", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    bad = []
    if first.returncode != 0 or second.returncode != 0:
        bad.append(f"exit codes {first.returncode}, {second.returncode}")
    if first.stdout != second.stdout:
        bad.append("outputs differ")
    n = len(json.loads(first.stdout)["algebras"]) if first.returncode == 0 else 0
    record(10, "two suite runs give byte-identical JSON", bad, f"{len(first.stdout)} bytes, {n} algebras")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
