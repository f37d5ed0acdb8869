"""Reading and writing algebra and matrix files.

Algebra files are JSON objects::

    {"dimension": 2, "field": "Q", "basis": ["1", "x"],
     "table": [[["1", "0"], ["0", "1"]], [["0", "1"], ["0", "0"]]],
     "unit": ["1", "0"]}

``field`` is ``"Q"`` or ``{"gf": p}``; ``unit`` and ``grading`` are optional.
Scalars are integers or strings such as ``"-1/2"``; floats are refused.
Matrix files hold ``{"field": ..., "rows": [[...], ...]}`` or just the list of
rows, in the column convention used throughout the package.
"""

import json
from pathlib import Path

from .algebra import FiniteAlgebra
from .errors import AlgebraValidationError
from .fields import QQ, field_from_json
from .linalg import Matrix


class FileFormatError(ValueError):
    """Input file is malformed; the message names the offending field."""


def _scalar(field, raw, where):
    if isinstance(raw, bool) or not isinstance(raw, (int, str)):
        raise FileFormatError(f"{where}: expected an integer or a 'num/den' string, got {raw!r}")
    try:
        return field(raw)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise FileFormatError(f"{where}: {exc}") from None


def _loads(text, source):
    try:
        return json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _reject_float(s):
    raise FileFormatError(f"floating-point literal {s} is not allowed; write it as a fraction string")


def algebra_from_json(doc, source="<algebra>"):
    if not isinstance(doc, dict):
        raise FileFormatError(f"{source}: top level must be an object")
    for key in ("dimension", "field", "table"):
        if key not in doc:
            raise FileFormatError(f"{source}: missing field '{key}'")
    unknown = set(doc) - {"name", "dimension", "field", "basis", "table", "unit", "grading"}
    if unknown:
        raise FileFormatError(f"{source}: unknown field(s) {sorted(unknown)}")
    n = doc["dimension"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise FileFormatError(f"{source}: 'dimension' must be a positive integer")
    try:
        field = field_from_json(doc["field"])
    except ValueError as exc:
        raise FileFormatError(f"{source}: field: {exc}") from None
    table = doc["table"]
    if not isinstance(table, list) or len(table) != n:
        raise FileFormatError(f"{source}: 'table' must have {n} rows")
    parsed = []
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != n:
            raise FileFormatError(f"{source}: table[{i}] must have {n} entries")
        prow = []
        for j, vec in enumerate(row):
            if not isinstance(vec, list) or len(vec) != n:
                raise FileFormatError(f"{source}: table[{i}][{j}] must have {n} scalars")
            prow.append([_scalar(field, x, f"{source}: table[{i}][{j}][{k}]") for k, x in enumerate(vec)])
        parsed.append(prow)
    labels = doc.get("basis")
    if labels is not None and (not isinstance(labels, list) or len(labels) != n
                               or not all(isinstance(s, str) for s in labels)):
        raise FileFormatError(f"{source}: 'basis' must list {n} strings")
    unit = doc.get("unit")
    if unit is not None:
        if not isinstance(unit, list) or len(unit) != n:
            raise FileFormatError(f"{source}: 'unit' must have {n} scalars")
        unit = [_scalar(field, x, f"{source}: unit[{k}]") for k, x in enumerate(unit)]
    grading = doc.get("grading")
    if grading is not None and (not isinstance(grading, list) or len(grading) != n
                                or any(g not in (0, 1) or isinstance(g, bool) for g in grading)):
        raise FileFormatError(f"{source}: 'grading' must list {n} values from {{0, 1}}")
    try:
        return FiniteAlgebra(parsed, field, labels, unit, grading, doc.get("name"))
    except AlgebraValidationError as exc:
        raise FileFormatError(f"{source}: {exc}") from None


def algebra_to_json(alg):
    fmt = alg.field.format
    doc = {}
    if alg.name:
        doc["name"] = alg.name
    doc["dimension"] = alg.dim
    doc["field"] = alg.field.to_json()
    doc["basis"] = list(alg.labels)
    doc["table"] = [[[fmt(x) for x in v] for v in row] for row in alg.table]
    if alg.unit is not None:
        doc["unit"] = [fmt(x) for x in alg.unit]
    if alg.grading is not None:
        doc["grading"] = list(alg.grading)
    return doc


def algebra_to_text(alg):
    doc = algebra_to_json(alg)
    lines = [f"  {json.dumps(k)}: {json.dumps(v)}" for k, v in doc.items()]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def read_algebra(path):
    path = Path(path)
    return algebra_from_json(_loads(path.read_text(encoding="utf-8"), path.name), path.name)


def matrix_from_json(doc, source="<matrix>"):
    field = QQ
    rows = doc
    if isinstance(doc, dict):
        if "rows" not in doc:
            raise FileFormatError(f"{source}: missing field 'rows'")
        try:
            field = field_from_json(doc.get("field", "Q"))
        except ValueError as exc:
            raise FileFormatError(f"{source}: field: {exc}") from None
        rows = doc["rows"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise FileFormatError(f"{source}: rows must be a non-empty list of lists")
    width = len(rows[0])
    for i, r in enumerate(rows):
        if len(r) != width:
            raise FileFormatError(f"{source}: row {i} has {len(r)} entries, expected {width}")
    return Matrix([[_scalar(field, x, f"{source}: rows[{i}][{j}]") for j, x in enumerate(r)]
                   for i, r in enumerate(rows)], field)


def matrix_to_json(m):
    return {"field": m.field.to_json(), "rows": [[m.field.format(x) for x in r] for r in m.tolist()]}


def read_matrix(path):
    path = Path(path)
    return matrix_from_json(_loads(path.read_text(encoding="utf-8"), path.name), path.name)
