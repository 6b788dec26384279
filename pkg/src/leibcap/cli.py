"""``leibcap`` command line.

Algebra arguments are JSON files (see :mod:`leibcap.fileio`) or
``catalog:NAME``.  Exit codes: 0 success, 1 mathematical failure (invalid
algebra or failed invariant), 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .algebra import (LeibnizAlgebra, LeibnizIdentityViolation, biderivations, center,
                      inner_biderivations, is_perfect)
from .catalog import CharacteristicError, UnknownAlgebra, catalog_entries, catalog_get
from .exactfield import Field, FieldError
from .fileio import AlgebraFileError, algebra_from_dict, algebra_to_dict, dump_algebra, load_algebra
from .invariants import algebra_report, product_checks
from .linalg import Subspace
from .randalg import random_corpus
from .tensor import exterior_center, exterior_square, tensor_center, tensor_square

EXIT_OK, EXIT_MATH, EXIT_USAGE = 0, 1, 2
RANDOM_DIM_CAP = 3
PRODUCT_FACTOR_DIM_CAP = 3


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- helpers

def _field(args) -> Field | None:
    if args.field is None:
        return None
    try:
        return Field.from_string(args.field)
    except FieldError as exc:
        raise UsageError(str(exc)) from exc


def _load(spec: str, field: Field | None) -> tuple[str, LeibnizAlgebra]:
    if spec.startswith("catalog:"):
        name = spec[len("catalog:"):]
        try:
            return name, catalog_get(name, field or Field()).algebra
        except UnknownAlgebra:
            raise UsageError(f"unknown catalog algebra {name!r}") from None
        except CharacteristicError as exc:
            raise UsageError(str(exc)) from None
    try:
        return load_algebra(spec, field)
    except OSError as exc:
        raise UsageError(f"cannot read {spec}: {exc.strerror or exc}") from exc
    except AlgebraFileError as exc:
        raise UsageError(str(exc)) from exc


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _vectors(g: LeibnizAlgebra, space: Subspace) -> list[dict]:
    F = g.field
    return [{g.names[i]: F.format(x) for i, x in enumerate(v) if x} for v in space.basis]


def _emit(args, data: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        sys.stdout.write(_dump(data))
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


# ---------------------------------------------------------------- commands

def cmd_check(args) -> int:
    try:
        name, g = _load(args.algebra, _field(args))
    except LeibnizIdentityViolation as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_MATH
    _emit(args, {"version": __version__, "name": name, "field": str(g.field), "dim": g.dim,
                 "valid": True},
          [f"{name}: valid Leibniz algebra of dimension {g.dim} over {g.field}"])
    return EXIT_OK


def _report_text(r: dict) -> list[str]:
    d = r["dims"]
    lines = [f"{r['name']} over {r['field']}, dim {r['dim']}",
             f"  dim [g,g] = {d['commutator']}, dim Z(g) = {d['center']}",
             f"  dim g*g = {d['tensor_square']}, dim g^g = {d['exterior_square']}, "
             f"dim nabla = {d['nabla']}, dim ker theta = {d['ker_theta']}",
             f"  dim tensor center = {d['tensor_center']}, "
             f"dim exterior center = {d['exterior_center']}",
             f"  capable: {'yes' if r['capable'] else 'no'}"]
    if r["lie"] is not None:
        lines.append(f"  Lie exterior square dim {r['lie']['exterior_square']}, "
                     f"Lie exterior center dim {r['lie']['exterior_center']}, "
                     f"Lie capable: {'yes' if r['lie_capable'] else 'no'}")
    for inv in r.get("invariants", []):
        lines.append(f"  [{'ok' if inv['pass'] else 'FAIL'}] {inv['id']}")
    return lines


def cmd_capability(args) -> int:
    name, g = _load(args.algebra, _field(args))
    r = algebra_report(name, g)
    _emit(args, r, _report_text(r))
    return EXIT_OK if all(i["pass"] for i in r["invariants"]) else EXIT_MATH


def _square_command(args, exterior: bool) -> int:
    name, g = _load(args.algebra, _field(args))
    ps = exterior_square(g) if exterior else tensor_square(g)
    F = g.field
    labels = ps.labels
    table = []
    for k in range(ps.dim):
        for l in range(ps.dim):
            v = ps.bracket_table[k][l]
            if v:
                table.append({"left": labels[k], "right": labels[l],
                              "value": {labels[m]: F.format(x) for m, x in sorted(v.items())}})
    data = {"version": __version__, "name": name, "field": str(F), "kind": ps.kind,
            "generators": ps.ambient_dim, "relations": ps.relations.dim,
            "saturation_added": ps.saturation_added, "dim": ps.dim, "basis": list(labels),
            "brackets": table}
    lines = [f"{ps.kind} square of {name}: dim {ps.dim} "
             f"({ps.ambient_dim} generators, relation space dim {ps.relations.dim}, "
             f"saturation added {ps.saturation_added})",
             "  basis: " + (", ".join(labels) or "(empty)")]
    for t in table:
        val = " + ".join(f"{x}*{m}" for m, x in t["value"].items())
        lines.append(f"  [{t['left']}, {t['right']}] = {val}")
    _emit(args, data, lines)
    return EXIT_OK


def cmd_tensor(args) -> int:
    return _square_command(args, exterior=False)


def cmd_exterior(args) -> int:
    return _square_command(args, exterior=True)


def cmd_centers(args) -> int:
    name, g = _load(args.algebra, _field(args))
    spaces = {"center": center(g), "tensor_center": tensor_center(g),
              "exterior_center": exterior_center(g)}
    data = {"version": __version__, "name": name, "field": str(g.field),
            **{k: {"dim": s.dim, "basis": _vectors(g, s)} for k, s in spaces.items()}}
    lines = [f"{name}:"]
    for k, s in spaces.items():
        vecs = ["{" + ", ".join(f"{b}: {x}" for b, x in v.items()) + "}" for v in data[k]["basis"]]
        lines.append(f"  {k}: dim {s.dim}" + (f"  {' '.join(vecs)}" if vecs else ""))
    _emit(args, data, lines)
    return EXIT_OK


def cmd_bider(args) -> int:
    name, g = _load(args.algebra, _field(args))
    space, _ = biderivations(g)
    inner = inner_biderivations(g)
    data = {"version": __version__, "name": name, "field": str(g.field), "dim": g.dim,
            "biderivations": space.dim, "inner_biderivations": inner.dim,
            "center": center(g).dim}
    _emit(args, data, [f"{name}: dim BiDer = {space.dim}, dim InnBiDer = {inner.dim}, "
                       f"dim Z = {data['center']}"])
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        field = _field(args) or Field()
        entries = catalog_entries(field)
        data = [{"name": e.name, "dim": e.algebra.dim, "description": e.description,
                 "tags": e.tags} for e in entries]
        _emit(args, {"version": __version__, "field": str(field), "entries": data},
              [f"{e['name']:<20} dim {e['dim']}  {e['description']}" for e in data])
        return EXIT_OK
    if not args.name:
        raise UsageError("catalog export needs a name")
    name, g = _load(f"catalog:{args.name}", _field(args))
    text = dump_algebra(name, g)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc.strerror or exc}") from exc
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------- suite

def _golden_checks(golden: dict, report: dict) -> list[dict]:
    dims = report["dims"]
    actual = {"tensor_square": dims["tensor_square"], "exterior_square": dims["exterior_square"],
              "nabla": dims["nabla"], "center": dims["center"],
              "tensor_center": dims["tensor_center"], "exterior_center": dims["exterior_center"],
              "multiplier": dims["ker_theta"], "capable": report["capable"],
              "lie_capable": report["lie_capable"]}
    if report["lie"] is not None:
        actual["lie_exterior_square"] = report["lie"]["exterior_square"]
        actual["lie_exterior_center"] = report["lie"]["exterior_center"]
    return [{"id": f"golden_{k}", "pass": actual.get(k) == v} for k, v in sorted(golden.items())]


def _suite_job(job: tuple) -> dict:
    """Runs in a worker process; everything is passed as plain data."""
    kind, name, payload, field_spec = job
    field = Field.from_string(field_spec)
    if kind == "catalog":
        entry = catalog_get(payload, field)
        report = algebra_report(name, entry.algebra)
        report["invariants"] += _golden_checks(entry.golden, report)
        report["source"] = "catalog"
        return report
    if kind == "random":
        _, g = algebra_from_dict(payload, field)
        report = algebra_report(name, g)
        report["source"] = "random"
        return report
    left, right = payload
    g, h = catalog_get(left, field).algebra, catalog_get(right, field).algebra
    return {"name": name, "factors": [left, right], "checks": product_checks(g, h)}


def _run_jobs(jobs: list) -> list:
    raw = os.environ.get("LEIBCAP_THREADS", "1")
    try:
        workers = max(1, int(raw))
    except ValueError:
        raise UsageError(f"LEIBCAP_THREADS must be an integer, got {raw!r}") from None
    if workers == 1 or len(jobs) < 2:
        return [_suite_job(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
        return list(pool.map(_suite_job, jobs))


def suite_jobs(field: Field, dim_max: int | None, seed: int, count: int) -> tuple[list, list]:
    spec = str(field)
    entries = [e for e in catalog_entries(field) if dim_max is None or e.algebra.dim <= dim_max]
    jobs = [("catalog", e.name, e.name, spec) for e in entries]
    rand_max = RANDOM_DIM_CAP if dim_max is None else min(dim_max, RANDOM_DIM_CAP)
    for name, g in random_corpus(count, rand_max, field, seed):
        jobs.append(("random", name, algebra_to_dict(name, g), spec))
    perfect = [e for e in entries if is_perfect(e.algebra) and e.algebra.dim > 0]
    factors = [e for e in entries if e.algebra.dim <= PRODUCT_FACTOR_DIM_CAP]
    product_jobs = [("product", f"{p.name}_x_{h.name}", (p.name, h.name), spec)
                    for p in perfect for h in factors
                    if dim_max is None or p.algebra.dim + h.algebra.dim <= dim_max]
    return jobs, product_jobs


def run_suite(field: Field, dim_max: int | None, seed: int, count: int) -> dict:
    jobs, product_jobs = suite_jobs(field, dim_max, seed, count)
    results = _run_jobs(jobs + product_jobs)
    reports = sorted(results[:len(jobs)], key=lambda r: r["name"])
    products = sorted(results[len(jobs):], key=lambda r: r["name"])
    serial = {j[1]: j for j in jobs}
    failures = []
    for r in reports:
        bad = [i["id"] for i in r["invariants"] if not i["pass"]]
        if bad:
            kind, name, payload, spec = serial[r["name"]]
            algebra = payload if kind == "random" else algebra_to_dict(
                name, catalog_get(payload, field).algebra)
            failures.append({"name": r["name"], "failed": bad, "algebra": algebra})
    for p in products:
        bad = [i["id"] for i in p["checks"] if not i["pass"]]
        if bad:
            failures.append({"name": p["name"], "failed": bad, "factors": p["factors"]})
    return {"version": __version__, "field": str(field), "seed": seed, "dim_max": dim_max,
            "random_count": count, "algebras": reports, "products": products,
            "failures": failures, "passed": not failures}


def cmd_suite(args) -> int:
    field = _field(args) or Field()
    if args.dim_max is not None and args.dim_max < 0:
        raise UsageError("--dim-max must be non-negative")
    if args.count < 0:
        raise UsageError("--count must be non-negative")
    result = run_suite(field, args.dim_max, args.seed, args.count)
    lines = []
    for r in result["algebras"]:
        n_ok = sum(i["pass"] for i in r["invariants"])
        lines.append(f"{r['name']:<32} dim {r['dim']}  {n_ok}/{len(r['invariants'])} ok  "
                     f"capable={'yes' if r['capable'] else 'no'}")
    for p in result["products"]:
        n_ok = sum(i["pass"] for i in p["checks"])
        lines.append(f"{p['name']:<32} product  {n_ok}/{len(p['checks'])} ok")
    for f in result["failures"]:
        lines.append(f"FAILED {f['name']}: {', '.join(f['failed'])}")
        if "algebra" in f:
            lines.append("  " + json.dumps(f["algebra"], separators=(",", ":")))
    lines.append(f"{len(result['algebras'])} algebras, {len(result['products'])} products, "
                 f"{len(result['failures'])} failures")
    _emit(args, result, lines)
    return EXIT_OK if result["passed"] else EXIT_MATH


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--field", default=None,
                        help="'rational' or 'prime:p'; overrides the field named in the file")

    parser = argparse.ArgumentParser(
        prog="leibcap",
        description="Tensor and exterior squares, centers and capability of Leibniz algebras.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, doc in [
        ("check", cmd_check, "validate an algebra file"),
        ("capability", cmd_capability, "full report with capability verdict and invariants"),
        ("tensor", cmd_tensor, "non-abelian tensor square"),
        ("exterior", cmd_exterior, "non-abelian exterior square"),
        ("centers", cmd_centers, "center, tensor center and exterior center"),
        ("bider", cmd_bider, "biderivation dimensions"),
    ]:
        p = sub.add_parser(name, parents=[common], help=doc)
        p.add_argument("algebra", help="JSON file or catalog:NAME")
        p.set_defaults(func=fn)

    p = sub.add_parser("suite", parents=[common], help="run every invariant on the test corpus")
    p.add_argument("--dim-max", type=int, default=None,
                   help="skip algebras above this dimension (random ones are capped at 3)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=20, help="number of random algebras")
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("catalog", parents=[common], help="list or export built-in algebras")
    p.add_argument("action", choices=("list", "export"))
    p.add_argument("name", nargs="?")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"leibcap: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LeibnizIdentityViolation as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
