"""JSON algebra files.

::

    {"name": "heisenberg3", "field": "rational", "dim": 3,
     "basis": ["x", "y", "z"],
     "brackets": [{"left": "x", "right": "y", "value": {"z": "1"}},
                  {"left": "y", "right": "x", "value": {"z": "-1"}}]}

Scalars are strings (``"3"``, ``"-1/2"``); unlisted brackets are zero.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import LeibnizAlgebra, validate
from .exactfield import Field, FieldError


class AlgebraFileError(ValueError):
    pass


def algebra_from_dict(data: dict, field: Field | None = None) -> tuple[str, LeibnizAlgebra]:
    """Parse the JSON structure; ``field`` overrides the file's field when given.

    Raises AlgebraFileError for malformed input and LeibnizIdentityViolation
    when the constants do not define a Leibniz algebra.
    """
    try:
        name = str(data.get("name", "unnamed"))
        if field is None:
            field = Field.from_string(data.get("field", "rational"))
        basis = [str(b) for b in data["basis"]]
        dim = int(data.get("dim", len(basis)))
        brackets = data.get("brackets", [])
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise AlgebraFileError(f"malformed algebra file: {exc}") from exc
    if dim != len(basis):
        raise AlgebraFileError(f"dim is {dim} but {len(basis)} basis names are given")
    if len(set(basis)) != dim:
        raise AlgebraFileError("basis names must be unique")
    pos = {b: i for i, b in enumerate(basis)}
    c = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
    seen = set()
    for entry in brackets:
        try:
            l, r = pos[entry["left"]], pos[entry["right"]]
            value = entry["value"]
            if (l, r) in seen:
                raise AlgebraFileError(f"bracket [{entry['left']},{entry['right']}] given twice")
            seen.add((l, r))
            for k, x in value.items():
                if not isinstance(x, str):
                    raise AlgebraFileError(f"scalar {x!r} must be a string")
                c[l][r][pos[k]] = field.parse(x)
        except KeyError as exc:
            raise AlgebraFileError(f"unknown basis name or missing key {exc}") from exc
        except (TypeError, AttributeError, FieldError) as exc:
            raise AlgebraFileError(f"bad bracket entry {entry!r}: {exc}") from exc
    return name, validate(c, field, basis)


def load_algebra(path: str | Path, field: Field | None = None) -> tuple[str, LeibnizAlgebra]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise AlgebraFileError(f"{path}: top level must be an object")
    return algebra_from_dict(data, field)


def algebra_to_dict(name: str, g: LeibnizAlgebra) -> dict:
    F = g.field
    brackets = []
    for i, j, v in g.nonzero_brackets():
        brackets.append({"left": g.names[i], "right": g.names[j],
                         "value": {g.names[k]: F.format(x) for k, x in sorted(v.items())}})
    return {"name": name, "field": str(F), "dim": g.dim, "basis": list(g.names),
            "brackets": brackets}


def dump_algebra(name: str, g: LeibnizAlgebra) -> str:
    return json.dumps(algebra_to_dict(name, g), indent=2) + "\n"
