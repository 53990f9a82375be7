"""JSON dataset files for point sets and grids.

A point-set file looks like::

    {
      "field": "C",
      "backend": "exact",
      "sqrt_m": 3,
      "points": [
        [["0", "0"], ["1/2", "0"]],
        ...
      ]
    }

Each coordinate is ``[re, im]`` for C and ``[a, b, c, d]`` for H. Exact
components are strings such as ``"-1/2+1/2r"`` (``r`` = sqrt(sqrt_m)); float
components are JSON numbers and ``sqrt_m`` is absent. A grid file carries
``"A"`` and ``"B"`` lists of scalars instead of ``"points"``.
"""
from __future__ import annotations

import hashlib
import json
from typing import Any, List, Sequence

from .errors import ScalarParseError, SylGalError
from .grid import GridSpec
from .plane import Point, PointSet
from .scalars import Quaternion, ScalarField, format_component, parse_component

__all__ = [
    "DatasetError",
    "parse_scalar",
    "format_scalar",
    "format_real",
    "loads_points",
    "dumps_points",
    "loads_grid",
    "dumps_grid",
    "dumps_scalars",
    "digest",
]

_HEADER_KEYS = ("field", "backend", "sqrt_m")


class DatasetError(SylGalError, ValueError):
    """Malformed dataset file; the message names the offending location."""


def digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def parse_scalar(raw: Any, field: ScalarField, where: str = "") -> Quaternion:
    width = field.real_dim
    if not isinstance(raw, list) or len(raw) != width:
        raise DatasetError(f"{where}: expected a list of {width} components for field {field.tag}")
    comps = []
    for k, c in enumerate(raw):
        if field.exact:
            try:
                comps.append(parse_component(c, field.m))
            except ScalarParseError as exc:
                raise DatasetError(f"{where}[{k}]: {exc}") from None
        else:
            if isinstance(c, bool) or not isinstance(c, (int, float)):
                raise DatasetError(f"{where}[{k}]: float component must be a JSON number")
            comps.append(float(c))
    return Quaternion(*comps)


def _component_text(c) -> str:
    if isinstance(c, float):
        return json.dumps(c)
    return json.dumps(format_component(c))


def format_real(x):
    """JSON-ready real value: a grammar string (exact) or a number (float)."""
    return x if isinstance(x, float) else format_component(x)


def format_scalar(q: Quaternion, field: ScalarField) -> list:
    return [format_real(c) for c in q.components[: field.real_dim]]


def _scalar_text(q: Quaternion, field: ScalarField) -> str:
    return "[" + ", ".join(_component_text(c) for c in q.components[: field.real_dim]) + "]"


def _header(field: ScalarField) -> List[str]:
    lines = [f'  "field": "{field.tag}",', f'  "backend": "{field.backend}",']
    if field.exact:
        lines.append(f'  "sqrt_m": {field.m},')
    return lines


def _decode(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DatasetError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _field_from(obj: dict, body_keys: Sequence[str], tol: float) -> ScalarField:
    if not isinstance(obj, dict):
        raise DatasetError("top level must be a JSON object")
    unknown = set(obj) - set(_HEADER_KEYS) - set(body_keys)
    if unknown:
        raise DatasetError(f"unknown keys: {sorted(unknown)}")
    for key in ("field", "backend") + tuple(body_keys):
        if key not in obj:
            raise DatasetError(f"missing key {key!r}")
    tag, backend = obj["field"], obj["backend"]
    if tag not in ("C", "H"):
        raise DatasetError(f"field must be 'C' or 'H', got {tag!r}")
    if backend not in ("exact", "float"):
        raise DatasetError(f"backend must be 'exact' or 'float', got {backend!r}")
    if backend == "exact":
        m = obj.get("sqrt_m")
        if isinstance(m, bool) or not isinstance(m, int):
            raise DatasetError("exact datasets need an integer 'sqrt_m'")
        try:
            return ScalarField(tag, backend, m, tol)
        except ValueError as exc:
            raise DatasetError(f"sqrt_m: {exc}") from None
    if "sqrt_m" in obj:
        raise DatasetError("'sqrt_m' is only allowed with the exact backend")
    return ScalarField(tag, backend, 3, tol)


def loads_points(text: str, tol: float = 1e-9) -> PointSet:
    """Parse a point-set file. Duplicate points are rejected by :class:`PointSet`."""
    obj = _decode(text)
    field = _field_from(obj, ("points",), tol)
    raw = obj["points"]
    if not isinstance(raw, list):
        raise DatasetError("'points' must be a list")
    pts = []
    for i, p in enumerate(raw):
        if not isinstance(p, list) or len(p) != 2:
            raise DatasetError(f"points[{i}]: expected [x, y]")
        pts.append(Point(parse_scalar(p[0], field, f"points[{i}][0]"), parse_scalar(p[1], field, f"points[{i}][1]")))
    return PointSet(field, pts)


def dumps_points(ps: PointSet) -> str:
    f = ps.field
    lines = ["{"] + _header(f) + ['  "points": [']
    rows = [f"    [{_scalar_text(p.x, f)}, {_scalar_text(p.y, f)}]" for p in ps]
    if rows:
        lines.append(",\n".join(rows))
    lines += ["  ]", "}"]
    return "\n".join(lines) + "\n"


def dumps_scalars(xs: Sequence[Quaternion], field: ScalarField, key: str = "scalars") -> str:
    lines = ["{"] + _header(field) + [f'  "{key}": [']
    rows = [f"    {_scalar_text(x, field)}" for x in xs]
    if rows:
        lines.append(",\n".join(rows))
    lines += ["  ]", "}"]
    return "\n".join(lines) + "\n"


def loads_grid(text: str, tol: float = 1e-9) -> GridSpec:
    obj = _decode(text)
    field = _field_from(obj, ("A", "B"), tol)
    sets = []
    for key in ("A", "B"):
        raw = obj[key]
        if not isinstance(raw, list):
            raise DatasetError(f"'{key}' must be a list")
        sets.append([parse_scalar(x, field, f"{key}[{i}]") for i, x in enumerate(raw)])
    return GridSpec(sets[0], sets[1], field)


def dumps_grid(G: GridSpec) -> str:
    f = G.field
    lines = ["{"] + _header(f)
    for key, xs, last in (("A", G.A, False), ("B", G.B, True)):
        lines.append(f'  "{key}": [')
        lines.append(",\n".join(f"    {_scalar_text(x, f)}" for x in xs))
        lines.append("  ]" if last else "  ],")
    lines.append("}")
    return "\n".join(lines) + "\n"
