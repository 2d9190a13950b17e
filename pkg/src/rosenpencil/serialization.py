"""Strict JSON text format for system instances and pencils.

One format serves both: an instance document carries the dimensions, the
two coefficient lists (low degree to high), and the constant couplings; a
pencil document carries two constant matrices plus its block partition, so
command outputs can be fed back in as inputs.  Complex entries are
two-element [re, im] arrays (plain numbers are accepted on input).
Unknown fields are rejected.
"""

from __future__ import annotations

import json

import numpy as np

from .blocks import Pencil
from .errors import DimensionError, ParseError
from .polycore import MatrixPolynomial
from .rsmp import Rsmp

__all__ = ["parse_rsmp", "emit_rsmp", "parse_pencil", "emit_pencil", "parse_document"]

_RSMP_FIELDS = {"kind", "n", "p", "m", "d_A", "d_D", "A", "B", "C", "D"}
_PENCIL_FIELDS = {"kind", "row_sizes", "col_sizes", "lead", "tail"}


def _entry(v, where: str) -> complex:
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, list) and len(v) == 2 and all(isinstance(x, (int, float)) for x in v):
        return complex(v[0], v[1])
    raise ParseError(f"{where}: expected a number or [re, im] pair, got {v!r}")


def _matrix(obj, rows: int, cols: int, where: str) -> np.ndarray:
    if not isinstance(obj, list) or len(obj) != rows:
        raise ParseError(f"{where}: expected {rows} rows")
    out = np.zeros((rows, cols), dtype=complex)
    for i, row in enumerate(obj):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"{where}[{i}]: expected {cols} entries")
        for j, v in enumerate(row):
            out[i, j] = _entry(v, f"{where}[{i}][{j}]")
    return out


def _int_field(doc, key: str, minimum: int = 1) -> int:
    if key not in doc:
        raise ParseError(f"missing field {key!r}")
    v = doc[key]
    if not isinstance(v, int) or isinstance(v, bool) or v < minimum:
        raise ParseError(f"{key}: expected an integer >= {minimum}, got {v!r}")
    return v


def _load(text_or_doc, where: str) -> dict:
    if isinstance(text_or_doc, dict):
        return text_or_doc
    try:
        doc = json.loads(text_or_doc)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{where}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"{where}: top level must be an object")
    return doc


def parse_rsmp(document) -> Rsmp:
    """Parse an instance document (JSON text or dict) into a validated Rsmp."""
    doc = _load(document, "instance")
    unknown = set(doc) - _RSMP_FIELDS
    if unknown:
        raise ParseError(f"unknown fields: {sorted(unknown)}")
    if doc.get("kind", "rsmp") != "rsmp":
        raise ParseError(f"kind: expected 'rsmp', got {doc.get('kind')!r}")
    n = _int_field(doc, "n")
    p = _int_field(doc, "p")
    m = _int_field(doc, "m")
    d_a = _int_field(doc, "d_A")
    d_d = _int_field(doc, "d_D")
    for key in ("A", "B", "C", "D"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}")
    if not isinstance(doc["A"], list) or len(doc["A"]) != d_a + 1:
        raise ParseError(f"A: expected {d_a + 1} coefficient matrices")
    if not isinstance(doc["D"], list) or len(doc["D"]) != d_d + 1:
        raise ParseError(f"D: expected {d_d + 1} coefficient matrices")
    a = MatrixPolynomial([_matrix(c, n, n, f"A[{k}]") for k, c in enumerate(doc["A"])])
    d = MatrixPolynomial([_matrix(c, p, m, f"D[{k}]") for k, c in enumerate(doc["D"])])
    b = _matrix(doc["B"], n, m, "B")
    c = _matrix(doc["C"], p, n, "C")
    try:
        return Rsmp(a, b, c, d)
    except DimensionError as exc:
        raise DimensionError(f"instance dimensions inconsistent: {exc}") from exc


def _encode_matrix(m: np.ndarray) -> list:
    return [[[float(v.real), float(v.imag)] for v in row] for row in np.asarray(m, dtype=complex)]


def emit_rsmp(r: Rsmp) -> str:
    """Canonical text form; emit(parse(x)) is a normalization fixed point."""
    doc = {
        "kind": "rsmp",
        "n": r.n,
        "p": r.p,
        "m": r.m,
        "d_A": r.d_a,
        "d_D": r.d_d,
        "A": [_encode_matrix(r.A.coeff(k)) for k in range(r.d_a + 1)],
        "B": _encode_matrix(r.B),
        "C": _encode_matrix(r.C),
        "D": [_encode_matrix(r.D.coeff(k)) for k in range(r.d_d + 1)],
    }
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"


def parse_pencil(document) -> Pencil:
    """Parse a pencil document (two constant matrices plus the partition)."""
    doc = _load(document, "pencil")
    unknown = set(doc) - _PENCIL_FIELDS
    if unknown:
        raise ParseError(f"unknown fields: {sorted(unknown)}")
    if doc.get("kind") != "pencil":
        raise ParseError(f"kind: expected 'pencil', got {doc.get('kind')!r}")
    for key in ("row_sizes", "col_sizes", "lead", "tail"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}")
    try:
        row_sizes = [int(x) for x in doc["row_sizes"]]
        col_sizes = [int(x) for x in doc["col_sizes"]]
    except (TypeError, ValueError) as exc:
        raise ParseError(f"block sizes must be integer lists: {exc}") from exc
    rows, cols = sum(row_sizes), sum(col_sizes)
    lead = _matrix(doc["lead"], rows, cols, "lead")
    tail = _matrix(doc["tail"], rows, cols, "tail")
    return Pencil(lead, tail, row_sizes, col_sizes)


def emit_pencil(p: Pencil) -> str:
    doc = {
        "kind": "pencil",
        "row_sizes": list(p.row_sizes),
        "col_sizes": list(p.col_sizes),
        "lead": _encode_matrix(p.lead),
        "tail": _encode_matrix(p.tail),
    }
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"


def parse_document(text: str):
    """Dispatch on the 'kind' field; returns an Rsmp or a Pencil."""
    doc = _load(text, "document")
    kind = doc.get("kind", "rsmp")
    if kind == "rsmp":
        return parse_rsmp(doc)
    if kind == "pencil":
        return parse_pencil(doc)
    raise ParseError(f"unknown document kind {kind!r}")
