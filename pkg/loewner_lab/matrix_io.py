# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

"""Plain-text matrix format.

Rules:
- Each matrix starts with a line holding its dimension `n`, followed by `n`
  rows of `n` entries separated by whitespace or commas.
- Empty lines between matrices are optional; `#` starts a comment that runs
  to the end of the line.
- Input is symmetrized as `(M + Mᵀ) / 2` on load.
- Entries are written with `repr`, so formatting and parsing is lossless.
"""

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from loewner_lab.spectra import HermitianMatrix


@dataclass(eq=False)
class ParserError(RuntimeError):
    """Raised for matrix parsing errors."""

    message: str
    path: Path | None = None
    line: int | None = None
    excerpt: str | None = None

    def __str__(self) -> str:
        parts: list[str] = []

        if self.path is not None:
            if self.line is not None:
                parts.append(f"{self.path}:{self.line}: {self.message}")
            else:
                parts.append(f"{self.path}: {self.message}")
        elif self.line is not None:
            parts.append(f"line {self.line}: {self.message}")
        else:
            parts.append(self.message)

        if isinstance(self.excerpt, str) and self.excerpt.strip():
            excerpt = self.excerpt.strip()
            if len(excerpt) > 160:
                excerpt = excerpt[:157] + "..."
            parts.append(f"> {excerpt}")

        return "\n".join(parts)


def parse_matrices(text: str, *, path: Path | None = None) -> list[HermitianMatrix]:
    """
    Parse all matrices of a text.

    Args:
        text:
            Input in the matrix text format.
        path:
            Source path, used in error messages only.

    Returns:
        The matrices in input order, symmetrized.

    Raises:
        ParserError:
            If a dimension line is malformed, an entry is not a number, a row
            has the wrong length, or the text ends inside a matrix.
    """

    text = text.lstrip("\ufeff").replace("\r\n", "\n").replace("\r", "\n")

    lines: list[tuple[int, str]] = []
    for idx, raw_line in enumerate(text.split("\n"), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if line:
            lines.append((idx, line))

    matrices: list[HermitianMatrix] = []
    pos = 0
    while pos < len(lines):
        header_no, header = lines[pos]
        dim = _parse_dim(header, path=path, line_no=header_no)
        rows = lines[pos + 1 : pos + 1 + dim]
        if len(rows) < dim:
            raise ParserError(
                f"Matrix ends after {len(rows)} of {dim} rows",
                path=path,
                line=header_no,
                excerpt=header,
            )
        matrices.append(_parse_rows(header_no, dim, rows, path=path))
        pos += 1 + dim

    return matrices


def _parse_dim(line: str, *, path: Path | None, line_no: int) -> int:
    try:
        dim = int(line)
    except ValueError:
        dim = 0
    if dim < 1:
        raise ParserError("Expected a dimension line holding a positive integer", path=path, line=line_no, excerpt=line)
    return dim


def _parse_rows(start: int, dim: int, lines: list[tuple[int, str]], *, path: Path | None) -> HermitianMatrix:
    rows: list[list[float]] = []
    for line_no, line in lines:
        tokens = line.replace(",", " ").split()
        try:
            rows.append([float(token) for token in tokens])
        except ValueError as exc:
            raise ParserError(f"Not a number: {exc}", path=path, line=line_no, excerpt=line) from exc
        if len(rows[-1]) != dim:
            raise ParserError(f"Row has {len(rows[-1])} entries, expected {dim}", path=path, line=line_no, excerpt=line)

    values = np.array(rows, dtype=np.float64)
    if not np.all(np.isfinite(values)):
        raise ParserError("Matrix entries must be finite", path=path, line=start)

    return HermitianMatrix(values)


def read_matrices(path: Path, *, count: int | None = None) -> list[HermitianMatrix]:
    """
    Read matrices from a file.

    Args:
        path:
            Input file.
        count:
            If given, the exact number of matrices expected.

    Raises:
        ParserError:
            If the file cannot be read or parsed, or holds the wrong number of
            matrices.
    """

    try:
        text = path.read_text(encoding="utf-8")
    except Exception as exc:  # noqa: BLE001
        raise ParserError(f"Failed to read matrix file: {exc}", path=path) from exc

    matrices = parse_matrices(text, path=path)
    if count is not None and len(matrices) != count:
        raise ParserError(f"Expected {count} matri{'x' if count == 1 else 'ces'}, found {len(matrices)}", path=path)
    return matrices


def read_matrix(path: Path) -> HermitianMatrix:
    return read_matrices(path, count=1)[0]


def format_matrix(h: HermitianMatrix) -> str:
    """Format one matrix as its dimension line and rows, without a trailing newline."""

    rows = [" ".join(repr(float(x)) for x in row) for row in h.entries]
    return "\n".join([str(h.dim), *rows])


def format_matrices(*matrices: HermitianMatrix) -> str:
    """Format matrices separated by blank lines, with a trailing newline."""

    return "\n\n".join(format_matrix(h) for h in matrices) + "\n"
