"""CSV ingestion: a header line plus uniform-width numeric rows.

Cells use "." as the decimal point and "," as the separator.  In complex
mode a cell may be "a", "bi", "a+bi" or "a-bi" with no whitespace inside the
literal; scientific notation is allowed in each component.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import EmptyFile, ParseError, RaggedRows, ShapeError

_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_REAL_RE = re.compile(rf"^[+-]?{_NUM}$")
_IMAG_RE = re.compile(rf"^([+-]?{_NUM})i$")
_FULL_RE = re.compile(rf"^([+-]?{_NUM})([+-]{_NUM})i$")


@dataclass(frozen=True)
class CsvTable:
    header: tuple[str, ...]
    rows: tuple[tuple, ...]
    mode: str

    @property
    def width(self) -> int:
        return len(self.header)

    def matrix(self) -> np.ndarray:
        """The data rows as a float64 (real mode) or complex128 array."""
        if not self.rows:
            raise ShapeError("no data rows")
        dtype = np.complex128 if self.mode == "complex" else np.float64
        return np.array(self.rows, dtype)

    def column(self, label: str) -> np.ndarray:
        if label not in self.header:
            raise ValueError(f"no column named {label!r}")
        return self.matrix()[:, self.header.index(label)]


def _parse_real(cell: str, line: int, column: int) -> float:
    s = cell.strip()
    if not _REAL_RE.match(s):
        raise ParseError(f"cannot parse {cell!r} as a real number", line, column)
    v = float(s)
    if not math.isfinite(v):
        raise ParseError(f"{cell!r} does not fit a double", line, column)
    return v


def _parse_complex(cell: str, line: int, column: int) -> complex:
    s = cell.strip()
    m = _FULL_RE.match(s)
    if m:
        re_part, im_part = float(m.group(1)), float(m.group(2))
    else:
        m = _IMAG_RE.match(s)
        if m:
            re_part, im_part = 0.0, float(m.group(1))
        elif _REAL_RE.match(s):
            re_part, im_part = float(s), 0.0
        else:
            raise ParseError(f"cannot parse {cell!r} as a complex number", line, column)
    if not (math.isfinite(re_part) and math.isfinite(im_part)):
        raise ParseError(f"{cell!r} does not fit a double", line, column)
    return complex(re_part, im_part)


def parse_csv(path, mode: str = "real") -> CsvTable:
    """Read a CSV file; the first line is the header.

    Raises :class:`EmptyFile` when there is no header line,
    :class:`RaggedRows` when a row's width differs from the header's, and
    :class:`ParseError` (with 1-based line and column) for a bad cell.
    """
    if mode not in ("real", "complex"):
        raise ValueError(f"mode must be 'real' or 'complex', got {mode!r}")
    text = Path(path).read_text(encoding="utf-8")
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise EmptyFile(f"{path}: no header line")
    header = tuple(cell.strip() for cell in lines[0].split(","))
    width = len(header)
    parse_cell = _parse_complex if mode == "complex" else _parse_real
    rows = []
    for lineno, raw in enumerate(lines[1:], start=2):
        cells = raw.split(",")
        if len(cells) != width:
            raise RaggedRows(lineno, width, len(cells))
        rows.append(tuple(parse_cell(c, lineno, j + 1) for j, c in enumerate(cells)))
    return CsvTable(header=header, rows=tuple(rows), mode=mode)
