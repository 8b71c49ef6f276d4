"""Plain-text table and bit-matrix files.

Format::

    # comment lines start with '#'
    n=3
    identity=0          (tables only, optional)
    codomain=0,1,2      (tables only, optional)
    0 1 2
    1 2 0
    2 0 1

Bit matrices use the same layout with only the ``n=`` header and entries in
``{0, 1}``.
"""

from __future__ import annotations

import os
import re
from typing import TextIO

import numpy as np

from magmalab.algebra import MagmaTable


class TableFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None, source: str | None = None):
        self.line = line
        self.column = column
        self.source = source
        where = []
        if source:
            where.append(str(source))
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


_HEADER = re.compile(r"^\s*(n|identity|codomain)\s*=\s*(.*?)\s*$")


def _parse(text: str, source: str | None, allow_meta: bool, max_value: int | None):
    header: dict[str, tuple[int, str]] = {}
    rows: list[list[int]] = []
    n = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _HEADER.match(line)
        if m and not rows:
            key, value = m.groups()
            if key == "n" and n is not None:
                raise TableFormatError("duplicate n= line", lineno, source=source)
            if key != "n" and n is None:
                raise TableFormatError("first data line must be n=<int>", lineno, source=source)
            if key != "n" and not allow_meta:
                raise TableFormatError(f"{key}= is not allowed in a bit-matrix file", lineno, source=source)
            if key in header:
                raise TableFormatError(f"duplicate {key}= line", lineno, source=source)
            header[key] = (lineno, value)
            if key == "n":
                try:
                    n = int(value)
                except ValueError:
                    raise TableFormatError(f"n must be an integer, got {value!r}", lineno, source=source) from None
                if n < 1:
                    raise TableFormatError(f"n must be positive, got {n}", lineno, source=source)
            continue
        if n is None:
            raise TableFormatError("first data line must be n=<int>", lineno, source=source)
        tokens = line.split()
        if len(tokens) != n:
            raise TableFormatError(f"expected {n} entries, found {len(tokens)}", lineno, source=source)
        if len(rows) == n:
            raise TableFormatError(f"more than {n} rows", lineno, source=source)
        bound = n if max_value is None else max_value
        row = []
        for col, tok in enumerate(tokens, start=1):
            try:
                v = int(tok)
            except ValueError:
                raise TableFormatError(f"not an integer: {tok!r}", lineno, col, source) from None
            if not 0 <= v < bound:
                raise TableFormatError(f"entry {v} outside [0, {bound})", lineno, col, source)
            row.append(v)
        rows.append(row)
    if n is None:
        raise TableFormatError("missing n= line", source=source)
    if len(rows) != n:
        raise TableFormatError(f"expected {n} rows, found {len(rows)}", source=source)
    return n, header, rows


def parse_table(text: str, source: str | None = None) -> MagmaTable:
    n, header, rows = _parse(text, source, allow_meta=True, max_value=None)
    identity = None
    codomain = None
    if "identity" in header:
        lineno, value = header["identity"]
        try:
            identity = int(value)
        except ValueError:
            raise TableFormatError(f"identity must be an integer, got {value!r}", lineno, source=source) from None
        if not 0 <= identity < n:
            raise TableFormatError(f"identity {identity} outside [0, {n})", lineno, source=source)
    if "codomain" in header:
        lineno, value = header["codomain"]
        try:
            codomain = [int(tok) for tok in re.split(r"[,\s]+", value.strip("[]{} ")) if tok]
        except ValueError:
            raise TableFormatError(f"codomain must be a list of integers, got {value!r}", lineno, source=source) from None
        for v in codomain:
            if not 0 <= v < n:
                raise TableFormatError(f"codomain value {v} outside [0, {n})", lineno, source=source)
    try:
        return MagmaTable(rows, codomain=codomain, identity=identity)
    except ValueError as exc:
        raise TableFormatError(str(exc), source=source) from None


def parse_matrix(text: str, source: str | None = None) -> np.ndarray:
    _, _, rows = _parse(text, source, allow_meta=False, max_value=2)
    bits = np.array(rows, dtype=np.uint8)
    bits.setflags(write=False)
    return bits


def format_table(table: MagmaTable, comment: str | None = None, codomain: bool = True) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"n={table.n}")
    if table.identity is not None:
        lines.append(f"identity={table.identity}")
    if codomain:
        lines.append("codomain=" + ",".join(str(v) for v in sorted(table.codomain)))
    lines.extend(" ".join(str(v) for v in row) for row in table.rows)
    return "\n".join(lines) + "\n"


def format_matrix(bits: np.ndarray, comment: str | None = None) -> str:
    bits = np.asarray(bits)
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"n={bits.shape[0]}")
    lines.extend(" ".join(str(int(v)) for v in row) for row in bits)
    return "\n".join(lines) + "\n"


def _read(path_or_file: str | os.PathLike | TextIO) -> tuple[str, str]:
    if hasattr(path_or_file, "read"):
        return path_or_file.read(), getattr(path_or_file, "name", None)
    with open(path_or_file) as fh:
        return fh.read(), str(path_or_file)


def load_table(path: str | os.PathLike | TextIO) -> MagmaTable:
    text, source = _read(path)
    return parse_table(text, source)


def load_matrix(path: str | os.PathLike | TextIO) -> np.ndarray:
    text, source = _read(path)
    return parse_matrix(text, source)
