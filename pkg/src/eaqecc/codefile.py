"""Reading and writing the plain-text code file format.

    # comments start with '#'
    field p=2 m=1 [poly=7]
    layout=plain              (or: layout=symplectic n=<half length>)
    rows=<r> cols=<total length>
    <r lines of space-separated element encodings>
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .codes import LinearCode
from .errors import CodeFileError
from .fields import GF, field


def _pairs(tokens, where):
    out = {}
    for tok in tokens:
        if "=" not in tok:
            raise CodeFileError(f"{where}: expected key=value, got {tok!r}")
        key, val = tok.split("=", 1)
        try:
            out[key] = int(val) if key not in ("layout",) else val
        except ValueError:
            raise CodeFileError(f"{where}: {key} must be an integer, got {val!r}") from None
    return out


def parse_code(text: str) -> LinearCode:
    lines = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((no, line))
    if len(lines) < 3:
        raise CodeFileError("code file needs field, layout and rows/cols lines")

    no, head = lines[0]
    tokens = head.split()
    if tokens[0] != "field":
        raise CodeFileError(f"line {no}: expected 'field p=.. m=..'")
    kv = _pairs(tokens[1:], f"line {no}")
    if "p" not in kv:
        raise CodeFileError(f"line {no}: missing p")
    unknown = set(kv) - {"p", "m", "poly"}
    if unknown:
        raise CodeFileError(f"line {no}: unknown keys {sorted(unknown)}")
    try:
        F = field(kv["p"], kv.get("m", 1), kv.get("poly"))
    except (ValueError, KeyError) as exc:
        raise CodeFileError(f"line {no}: {exc}") from None

    no, lay = lines[1]
    lkv = _pairs(lay.split(), f"line {no}")
    layout = lkv.get("layout")
    if layout not in ("plain", "symplectic") or set(lkv) - {"layout", "n"}:
        raise CodeFileError(f"line {no}: expected layout=plain or layout=symplectic n=<half>")

    no, shape = lines[2]
    kv = _pairs(shape.split(), f"line {no}")
    if set(kv) != {"rows", "cols"} or kv["rows"] < 0 or kv["cols"] < 1:
        raise CodeFileError(f"line {no}: expected rows=<r> cols=<c>")
    r, cols = kv["rows"], kv["cols"]
    half = lkv.get("n")
    if layout == "symplectic":
        if cols % 2:
            raise CodeFileError("symplectic layout needs an even number of columns")
        if half is not None and 2 * half != cols:
            raise CodeFileError(f"layout n={half} does not match cols={cols}")
    elif half is not None:
        raise CodeFileError("n= is only meaningful for the symplectic layout")

    body = lines[3:]
    if len(body) != r:
        raise CodeFileError(f"expected {r} matrix rows, found {len(body)}")
    M = np.zeros((r, cols), dtype=np.int64)
    for i, (no, line) in enumerate(body):
        try:
            vals = [int(t) for t in line.split()]
        except ValueError:
            raise CodeFileError(f"line {no}: non-integer entry") from None
        if len(vals) != cols:
            raise CodeFileError(f"line {no}: expected {cols} entries, found {len(vals)}")
        if any(not 0 <= v < F.q for v in vals):
            raise CodeFileError(f"line {no}: entries must lie in [0, {F.q})")
        M[i] = vals
    return LinearCode(F, M, layout, cols)


def read_code(path) -> LinearCode:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CodeFileError(f"cannot read {path}: {exc.strerror}") from None
    return parse_code(text)


def field_header(F: GF) -> str:
    return f"field p={F.p} m={F.m} poly={F.poly}"


def format_matrix(F: GF, rows, layout: str = "plain", comment: str | None = None) -> str:
    rows = np.asarray(rows, dtype=np.int64)
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(field_header(F))
    out.append("layout=plain" if layout == "plain" else f"layout=symplectic n={rows.shape[1] // 2}")
    out.append(f"rows={rows.shape[0]} cols={rows.shape[1]}")
    out.extend(" ".join(str(int(v)) for v in row) for row in rows)
    return "\n".join(out) + "\n"


def format_code(C: LinearCode, comment: str | None = None) -> str:
    """Canonical (RREF) generator of C."""
    return format_matrix(C.field, C.basis.reshape(-1, C.length), C.layout, comment)
