"""Matrix file formats: a human-diffable text form and a JSON mirror.

Text format, one matrix per file:

    bim v1
    gf(2)
    6 6 2
    1 0 1 1 0 0
    ... one line of space-separated decimal codes per row ...

Line 3 is "rows cols p" where p is the block size the matrix was built
for (metadata; verification may override it). JSON carries the same
fields::

    {"format": "bim", "version": 1, "field": "gf(2)", "rows": 6,
     "cols": 6, "p": 2, "data": [[1,0,...], ...]}

Both writers are byte-deterministic, loaders validate every code against
the field order, and load(save(m)) reproduces the matrix exactly,
modulus included (binary field notation always spells out the modulus).
"""

from __future__ import annotations

import json

from .field import FieldError, parse_field
from .matrix import Matrix

MAGIC = "bim v1"

TEXT = "text"
JSON = "json"
FORMATS = (TEXT, JSON)


class MatrixFileError(ValueError):
    """File content is not a well-formed matrix file."""


def dump_text(m: Matrix, p: int) -> str:
    lines = [MAGIC, str(m.field), f"{m.nrows} {m.ncols} {p}"]
    lines.extend(" ".join(str(x) for x in row) for row in m._rows)
    return "\n".join(lines) + "\n"


def dump_json(m: Matrix, p: int) -> str:
    return json.dumps({
        "format": "bim",
        "version": 1,
        "field": str(m.field),
        "rows": m.nrows,
        "cols": m.ncols,
        "p": p,
        "data": m.to_lists(),
    }) + "\n"


def dump(m: Matrix, p: int, fmt: str = TEXT) -> str:
    if fmt == TEXT:
        return dump_text(m, p)
    if fmt == JSON:
        return dump_json(m, p)
    raise ValueError(f"unknown format {fmt!r}")


def load(text: str) -> tuple[Matrix, int]:
    """Parse either format (sniffed from the first byte) into (matrix, p)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _load_json(stripped)
    return _load_text(text)


def _load_text(text: str) -> tuple[Matrix, int]:
    lines = text.splitlines()
    if len(lines) < 4:
        raise MatrixFileError("file too short for a matrix")
    if lines[0].strip() != MAGIC:
        raise MatrixFileError(f"bad magic line {lines[0]!r}, expected {MAGIC!r}")
    try:
        field = parse_field(lines[1])
    except FieldError as e:
        raise MatrixFileError(f"bad field line: {e}") from None
    header = lines[2].split()
    if len(header) != 3:
        raise MatrixFileError(f"header line must be 'rows cols p', got {lines[2]!r}")
    try:
        nrows, ncols, p = (int(h) for h in header)
    except ValueError:
        raise MatrixFileError(f"non-integer header fields in {lines[2]!r}") from None
    _check_shape(nrows, ncols, p)
    body = [ln for ln in lines[3:] if ln.strip()]
    if len(body) != nrows:
        raise MatrixFileError(f"expected {nrows} data rows, found {len(body)}")
    rows = []
    for ln in body:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise MatrixFileError(f"non-integer entry in row {ln!r}") from None
        rows.append(row)
    return _build(field, nrows, ncols, rows), p


def _load_json(text: str) -> tuple[Matrix, int]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise MatrixFileError(f"invalid JSON: {e}") from None
    if not isinstance(obj, dict) or obj.get("format") != "bim":
        raise MatrixFileError("not a bim matrix object")
    if obj.get("version") != 1:
        raise MatrixFileError(f"unsupported version {obj.get('version')!r}")
    for key in ("field", "rows", "cols", "p", "data"):
        if key not in obj:
            raise MatrixFileError(f"missing key {key!r}")
    try:
        field = parse_field(str(obj["field"]))
    except FieldError as e:
        raise MatrixFileError(f"bad field: {e}") from None
    nrows, ncols, p = obj["rows"], obj["cols"], obj["p"]
    if not all(isinstance(v, int) for v in (nrows, ncols, p)):
        raise MatrixFileError("rows, cols and p must be integers")
    _check_shape(nrows, ncols, p)
    data = obj["data"]
    if not isinstance(data, list) or len(data) != nrows:
        raise MatrixFileError(f"data must be a list of {nrows} rows")
    return _build(field, nrows, ncols, data), p


def _check_shape(nrows: int, ncols: int, p: int):
    if nrows < 1 or ncols < 1:
        raise MatrixFileError(f"bad dimensions {nrows}x{ncols}")
    if p < 1:
        raise MatrixFileError(f"bad block size {p}")


def _build(field, nrows, ncols, rows) -> Matrix:
    for row in rows:
        if not isinstance(row, list) or len(row) != ncols:
            raise MatrixFileError(f"expected {ncols} entries per row")
        for v in row:
            if not isinstance(v, int) or isinstance(v, bool):
                raise MatrixFileError(f"non-integer entry {v!r}")
            if not 0 <= v < field.order:
                raise MatrixFileError(
                    f"entry {v} out of range for {field}")
    return Matrix(field, rows)
