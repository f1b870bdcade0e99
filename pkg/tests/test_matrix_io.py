# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from loewner_lab.matrix_io import ParserError, format_matrices, parse_matrices, read_matrices, read_matrix
from loewner_lab.spectra import HermitianMatrix
from tests.helpers import rotated_diagonal

PAIR_TEXT = """\
# A
2
2 1
1, 2   # trailing comment

# B
2
# comment lines may appear anywhere
1 0
0 1
"""


def test_parse_two_matrices_with_comments():
    a, b = parse_matrices(PAIR_TEXT)

    assert np.array_equal(a.entries, [[2.0, 1.0], [1.0, 2.0]])
    assert np.array_equal(b.entries, np.eye(2))


def test_dimension_lines_delimit_matrices():
    a, b = parse_matrices("1\n4\n2\n3 1\n1 2\n")

    assert a.entries[0, 0] == 4.0
    assert np.array_equal(b.entries, [[3.0, 1.0], [1.0, 2.0]])


def test_asymmetric_input_is_symmetrized():
    (m,) = parse_matrices("2\n2 1\n1.0000001 2\n")

    assert m.entries[0, 1] == m.entries[1, 0] == (1.0 + 1.0000001) / 2

    (n,) = parse_matrices("2\n1 2\n4 1\n")
    assert np.array_equal(n.entries, [[1.0, 3.0], [3.0, 1.0]])


def test_parse_handles_bom_and_crlf():
    (m,) = parse_matrices("\ufeff1\r\n3\r\n")

    assert m.entries[0, 0] == 3.0


def test_parse_of_empty_text_is_empty():
    assert parse_matrices("# nothing here\n\n") == []


@pytest.mark.parametrize(
    "text, line, message",
    [
        ("2\n1 2\n3 x\n", 3, "Not a number"),
        ("2\n1 2\n3\n", 3, "entries"),
        ("2\n1 2\n", 1, "ends after 1 of 2 rows"),
        ("1 2\n3 1\n", 1, "dimension line"),
        ("0\n", 1, "dimension line"),
        ("2\n1 nan\nnan 1\n", 1, "finite"),
    ],
)
def test_parse_errors_carry_line_numbers(text, line, message):
    with pytest.raises(ParserError, match=message) as excinfo:
        parse_matrices(text, path=Path("m.txt"))

    assert excinfo.value.line == line
    assert excinfo.value.path == Path("m.txt")
    assert str(excinfo.value).startswith(f"m.txt:{line}:")


def test_format_writes_dimension_line_and_is_lossless():
    a = rotated_diagonal((0.1, 7.25), 0.3)
    b = HermitianMatrix.scalar(1 / 3)

    text = format_matrices(a)
    assert text.startswith("2\n")
    assert text.endswith("\n") and "\n\n" not in text

    (parsed,) = parse_matrices(text)
    assert np.array_equal(parsed.entries, a.entries)

    pair = parse_matrices(format_matrices(a, b))
    assert np.array_equal(pair[0].entries, a.entries)
    assert pair[1].entries[0, 0] == 1 / 3


def test_read_matrices_checks_count(tmp_path: Path):
    path = tmp_path / "pair.txt"
    path.write_text(PAIR_TEXT, encoding="utf-8")

    assert len(read_matrices(path, count=2)) == 2
    with pytest.raises(ParserError, match="Expected 1 matrix, found 2"):
        read_matrix(path)


def test_read_missing_file(tmp_path: Path):
    with pytest.raises(ParserError, match="Failed to read"):
        read_matrices(tmp_path / "missing.txt")
