# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

"""
ODS report writer.

Writes simple tabular sheets with a bold header row. Numbers are stored as
numeric cells so the report can be filtered and sorted in a spreadsheet.
"""

import math
import re
from pathlib import Path
from typing import Any, Sequence, cast

from odfdo import Document
from odfdo.cell import Cell
from odfdo.element import Element
from odfdo.row import Row
from odfdo.style import Style
from odfdo.table import Table

from loewner_lab.hash_utils import md5_bytes

Sheet = tuple[str, Sequence[str], Sequence[Sequence[Any]]]


def _make_style_name(prefix: str, scope: str) -> str:
    """Return a stable, ODF-friendly style name."""

    scope_key = re.sub(r"[^A-Za-z0-9_]", "_", scope or "").strip("_")[:40] or "x"
    return f"{prefix}_{scope_key}_{md5_bytes(scope.encode('utf-8'))[:8]}"


def _insert_automatic_style(doc: Document, style: Style | None) -> Style | None:
    """Insert style into document automatic-styles so viewers can apply it."""

    if style is None:
        return None
    try:
        doc.insert_style(style, automatic=True)
        return style
    except Exception:
        return None


def _cell(value: Any) -> Cell:
    if isinstance(value, bool):
        return Cell(text="true" if value else "false")
    if isinstance(value, (int, float)) and math.isfinite(value):
        return Cell(value=value)
    return Cell(text="" if value is None else str(value))


def _append_sheet(doc: Document, name: str, columns: Sequence[str], rows: Sequence[Sequence[Any]]) -> None:
    table = Table(name)

    try:
        header_style = cast(
            Style,
            Style("table-cell", name=_make_style_name("hdr", name), area="text", bold=True),
        )
    except Exception:
        header_style = None
    header_style = _insert_automatic_style(doc, header_style)

    header = Row()
    for title in columns:
        cell = Cell(text=str(title))
        if header_style is not None:
            try:
                cell.style = header_style
            except Exception:
                pass
        header.append_cell(cell)
    # Header rows inside table-header-rows are repeated/frozen by most viewers.
    try:
        group = Element.from_tag("table:table-header-rows")
        group.append(header)
        table.append(group)
    except Exception:
        table.append_row(header)

    for values in rows:
        row = Row()
        for value in values:
            row.append_cell(_cell(value))
        table.append_row(row)

    doc.body.append(table)


def write_ods(path: Path, sheets: Sequence[Sheet]) -> None:
    """
    Write a spreadsheet with one table per sheet.

    Args:
        path:
            Output file.
        sheets:
            `(name, column titles, rows)` per sheet.
    """

    doc = Document.new("spreadsheet")

    # odfdo creates a default empty sheet; keep only ours.
    for table in list(doc.body.tables):
        doc.body.delete(table)

    for name, columns, rows in sheets:
        _append_sheet(doc, name, columns, rows)

    path.parent.mkdir(parents=True, exist_ok=True)
    doc.save(path)
