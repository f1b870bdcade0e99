# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

"""Small matrix builders used across the tests."""

import numpy as np

from loewner_lab.spectra import HermitianMatrix


def scalar(value: float) -> HermitianMatrix:
    return HermitianMatrix.scalar(value)


def rotated_diagonal(values: tuple[float, float], theta: float) -> HermitianMatrix:
    """`R(θ)·diag(values)·R(θ)ᵀ` for a 2×2 rotation `R(θ)`."""

    c, s = np.cos(theta), np.sin(theta)
    r = np.array([[c, -s], [s, c]])
    return HermitianMatrix((r * np.asarray(values, dtype=np.float64)) @ r.T)


def value(h: HermitianMatrix) -> float:
    """The single entry of a 1×1 matrix."""

    return float(h.entries[0, 0])
