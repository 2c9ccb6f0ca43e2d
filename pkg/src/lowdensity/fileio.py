"""Matrix and signal file I/O.

Format: a header line ``# rows=M cols=N field=complex|real`` followed by M
lines of N comma-separated cells.  Complex cells use the grammar
``RE[+|-IMi]``, e.g. ``0.5-0.25i`` or ``1.0``; plain decimal or exponent
notation is accepted.  Signal files are matrix files with ``cols=1``.
Values are written with Python's shortest round-trip float representation,
so write/read cycles are bit-exact.
"""

from __future__ import annotations

import re

import numpy as np

from .core import Signal
from .errors import FileFormatError

_HEADER_RE = re.compile(r"^#\s*rows=(\d+)\s+cols=(\d+)\s+field=(complex|real)\s*$")
_UNSIGNED = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_CELL_RE = re.compile(rf"^([+-]?{_UNSIGNED})(?:([+-])({_UNSIGNED})i)?$")


def parse_cell(cell: str) -> complex:
    """Parse one cell in ``RE[+|-IMi]`` grammar into a complex number."""
    m = _CELL_RE.match(cell.strip())
    if m is None:
        raise FileFormatError(f"cannot parse cell {cell!r}")
    re_part = float(m.group(1))
    im_part = 0.0
    if m.group(2) is not None:
        im_part = float(m.group(2) + m.group(3))
    return complex(re_part, im_part)


def format_cell(value: complex, field: str) -> str:
    value = complex(value)
    if field == "real":
        if value.imag != 0.0:
            raise FileFormatError("cannot write complex value in a real-field file")
        return repr(value.real)
    sign = "-" if value.imag < 0 else "+"
    return f"{value.real!r}{sign}{abs(value.imag)!r}i"


def read_matrix(path) -> np.ndarray:
    """Read a matrix file into a complex (M, N) array."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.rstrip("\n") for ln in fh]
    if not lines:
        raise FileFormatError(f"{path}: empty file")
    header = _HEADER_RE.match(lines[0])
    if header is None:
        raise FileFormatError(
            f"{path}: bad header {lines[0]!r}; expected '# rows=M cols=N field=complex|real'"
        )
    rows, cols = int(header.group(1)), int(header.group(2))
    body = [ln for ln in lines[1:] if ln.strip()]
    if len(body) != rows:
        raise FileFormatError(f"{path}: expected {rows} data rows, found {len(body)}")
    out = np.empty((rows, cols), dtype=np.complex128)
    for i, line in enumerate(body):
        cells = line.split(",")
        if len(cells) != cols:
            raise FileFormatError(f"{path}: row {i} has {len(cells)} cells, expected {cols}")
        for j, cell in enumerate(cells):
            out[i, j] = parse_cell(cell)
    return out


def write_matrix(path, matrix, field: str = "auto") -> None:
    """Write a matrix file; ``field='auto'`` picks real when all imag parts are 0."""
    m = np.asarray(matrix, dtype=np.complex128)
    if m.ndim != 2:
        raise FileFormatError("expected a 2-D matrix")
    if field == "auto":
        field = "real" if np.all(m.imag == 0.0) else "complex"
    if field not in ("real", "complex"):
        raise FileFormatError(f"unknown field kind {field!r}")
    rows, cols = m.shape
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# rows={rows} cols={cols} field={field}\n")
        for i in range(rows):
            fh.write(",".join(format_cell(m[i, j], field) for j in range(cols)) + "\n")


def read_signal(path) -> Signal:
    """Read a single-column matrix file as a Signal."""
    m = read_matrix(path)
    if m.shape[1] != 1:
        raise FileFormatError(f"{path}: signal files must have cols=1, got cols={m.shape[1]}")
    return Signal(m[:, 0])


def write_signal(path, x, field: str = "auto") -> None:
    entries = x.entries if isinstance(x, Signal) else np.asarray(x, dtype=np.complex128)
    write_matrix(path, entries.reshape(-1, 1), field=field)
