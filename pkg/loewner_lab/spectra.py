# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

"""
Dense symmetric linear algebra.

This module is the substrate for every inequality and equation in the package:
an immutable symmetric matrix type, a cyclic Jacobi eigensolver and the
functional calculus `f(H) = Q f(Λ) Qᵀ` built on top of it.

All values are immutable and all functions are pure, so everything here can be
called from concurrent contexts.
"""

import math
from dataclasses import dataclass
from typing import Any

import numpy as np
import numpy.typing as npt
from numba import njit

FloatArray = npt.NDArray[np.float64]

# Convergence threshold of the Jacobi iteration relative to ‖H‖_F.
JACOBI_TOLERANCE = 1e-13

# Per-dimension factor of the residual bounds promised by SpectralDecomposition.
DECOMPOSITION_EPS = 1e-12


class SpectralError(RuntimeError):
    """Base class for numeric failures raised by the linear algebra layer."""

    pass


class DimensionError(ValueError):
    """Raised when operands have incompatible shapes."""

    pass


@dataclass(eq=False)
class DomainError(SpectralError):
    """Raised when a scalar function is applied outside of its domain.

    Attributes:
        function:
            Human-readable name of the scalar function.
        lambda_min:
            Smallest eigenvalue of the argument.
        overflow:
            True if the function values left the float64 range instead.
    """

    function: str
    lambda_min: float
    overflow: bool = False

    def __str__(self) -> str:
        if self.overflow:
            return f"{self.function} overflows float64 on this argument"
        return (
            f"{self.function} requires a positive definite argument, "
            f"but the smallest eigenvalue is {self.lambda_min:.6g}"
        )


@dataclass(eq=False)
class ConvergenceError(SpectralError):
    """Raised when the Jacobi iteration exhausts its sweep budget.

    Attributes:
        residual:
            Off-diagonal Frobenius norm left after the last sweep.
        sweeps:
            Number of sweeps performed.
    """

    residual: float
    sweeps: int

    def __str__(self) -> str:
        return f"Jacobi iteration did not converge after {self.sweeps} sweep(s) (off-diagonal residual {self.residual:.3e})"


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """
    Dense real symmetric matrix.

    The entries are symmetrized as `(M + Mᵀ) / 2` at construction and stored as
    a read-only float64 array, so `entries[i, j] == entries[j, i]` holds
    exactly for every instance.

    Attributes:
        entries:
            The `dim × dim` array of entries.
    """

    entries: FloatArray

    def __post_init__(self) -> None:
        values = np.array(self.entries, dtype=np.float64)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise DimensionError(f"Expected a square matrix, got shape {values.shape}")
        if values.shape[0] < 1:
            raise DimensionError("Matrix dimension must be at least 1")
        if not np.all(np.isfinite(values)):
            raise ValueError("Matrix entries must be finite")

        symmetric = (values + values.T) / 2.0
        symmetric.setflags(write=False)
        object.__setattr__(self, "entries", symmetric)

    @classmethod
    def identity(cls, dim: int) -> HermitianMatrix:
        """Return the `dim × dim` identity matrix."""

        return cls(np.eye(dim))

    @classmethod
    def diagonal(cls, values: Any) -> HermitianMatrix:
        """Return the diagonal matrix with the given diagonal entries."""

        return cls(np.diag(np.asarray(values, dtype=np.float64)))

    @classmethod
    def scalar(cls, value: float) -> HermitianMatrix:
        """Return the 1×1 matrix `[[value]]`."""

        return cls(np.array([[float(value)]]))

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    def __add__(self, other: HermitianMatrix) -> HermitianMatrix:
        _require_same_dim(self, other)
        return HermitianMatrix(self.entries + other.entries)

    def __sub__(self, other: HermitianMatrix) -> HermitianMatrix:
        _require_same_dim(self, other)
        return HermitianMatrix(self.entries - other.entries)

    def __neg__(self) -> HermitianMatrix:
        return HermitianMatrix(-self.entries)

    def scale(self, factor: float) -> HermitianMatrix:
        """Return `factor · H`."""

        return HermitianMatrix(float(factor) * self.entries)

    def frobenius_norm(self) -> float:
        return float(np.linalg.norm(self.entries, "fro"))

    def to_list(self) -> list[list[float]]:
        """Return the entries as nested Python lists (row-major)."""

        return [[float(x) for x in row] for row in self.entries]


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """
    Eigen decomposition `H = Q Λ Qᵀ` of a symmetric matrix.

    Attributes:
        eigenvalues:
            Eigenvalues in ascending order.
        eigenvectors:
            Orthogonal matrix; column `i` belongs to `eigenvalues[i]`.
        sweeps:
            Number of Jacobi sweeps that were needed.
    """

    eigenvalues: FloatArray
    eigenvectors: FloatArray
    sweeps: int = 0

    @property
    def lambda_min(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def lambda_max(self) -> float:
        return float(self.eigenvalues[-1])

    def reconstruct(self) -> FloatArray:
        """Return `Q Λ Qᵀ` as a plain array."""

        q = self.eigenvectors
        return (q * self.eigenvalues) @ q.T

    def orthonormality_residual(self) -> float:
        """Return `‖QᵀQ − I‖_F`."""

        q = self.eigenvectors
        return float(np.linalg.norm(q.T @ q - np.eye(q.shape[0]), "fro"))

    def reconstruction_residual(self, h: HermitianMatrix) -> float:
        """Return `‖QΛQᵀ − H‖_F`."""

        return float(np.linalg.norm(self.reconstruct() - h.entries, "fro"))


@dataclass(frozen=True)
class ScalarFunction:
    """
    Scalar function applied through the functional calculus.

    Use the constructors `power`, `log`, `exp` and `inverse` instead of
    instantiating this class directly.

    Attributes:
        kind:
            One of `power`, `log`, `exp`, `inverse`.
        exponent:
            Exponent for `power`; ignored otherwise.
    """

    kind: str
    exponent: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in {"power", "log", "exp", "inverse"}:
            raise ValueError(f"Unknown scalar function kind: {self.kind!r}")
        if not math.isfinite(self.exponent):
            raise ValueError("Exponent must be finite")

    @classmethod
    def power(cls, exponent: float) -> ScalarFunction:
        return cls("power", float(exponent))

    @classmethod
    def log(cls) -> ScalarFunction:
        return cls("log")

    @classmethod
    def exp(cls) -> ScalarFunction:
        return cls("exp")

    @classmethod
    def inverse(cls) -> ScalarFunction:
        return cls("inverse")

    @property
    def requires_positive(self) -> bool:
        """True if the function is only defined for positive arguments."""

        if self.kind in {"log", "inverse"}:
            return True
        if self.kind == "power":
            return self.exponent < 0 or not float(self.exponent).is_integer()
        return False

    def describe(self) -> str:
        if self.kind == "power":
            return f"power({self.exponent:g})"
        return self.kind

    def __call__(self, values: FloatArray) -> FloatArray:
        if self.kind == "power":
            if self.exponent == 0.0:
                return np.ones_like(values)
            return np.power(values, self.exponent)
        if self.kind == "log":
            return np.log(values)
        if self.kind == "exp":
            return np.exp(values)
        return 1.0 / values


@njit(cache=True, nogil=True)
def _off_diagonal_norm(a: FloatArray) -> float:
    n = a.shape[0]
    total = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                total += a[i, j] * a[i, j]
    return math.sqrt(total)


@njit(cache=True, nogil=True)
def _jacobi_sweeps(a: FloatArray, max_sweeps: int, threshold: float) -> tuple[FloatArray, FloatArray, int, float]:
    # Cyclic-by-row Jacobi on a private copy; returns (diagonalized a, V, sweeps, residual).
    n = a.shape[0]
    v = np.eye(n)
    sweep = 0
    off = _off_diagonal_norm(a)
    while off > threshold and sweep < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                sign = 1.0 if theta >= 0.0 else -1.0
                t = sign / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * vkq
                    v[k, q] = s * vkp + c * vkq
        sweep += 1
        off = _off_diagonal_norm(a)
    return a, v, sweep, off


def sweep_budget(dim: int) -> int:
    """Return the Jacobi sweep budget for a matrix of the given dimension."""

    return 50 * dim * dim


def eigh(h: HermitianMatrix) -> SpectralDecomposition:
    """
    Compute the spectral decomposition of a symmetric matrix.

    Uses cyclic Jacobi rotations until the off-diagonal Frobenius norm drops to
    `1e-13 · ‖H‖_F`. The result is deterministic for identical input bits.

    Args:
        h:
            The matrix to decompose.

    Returns:
        Eigenvalues in ascending order with their orthonormal eigenvectors.

    Raises:
        ConvergenceError:
            If the sweep budget (`50 · dim²`) is exhausted.
    """

    work = np.array(h.entries, dtype=np.float64, order="C", copy=True)
    threshold = JACOBI_TOLERANCE * h.frobenius_norm()
    budget = sweep_budget(h.dim)

    diag, vectors, sweeps, residual = _jacobi_sweeps(work, budget, threshold)
    if residual > threshold:
        raise ConvergenceError(residual=float(residual), sweeps=int(sweeps))

    values = np.diagonal(diag).copy()
    order = np.argsort(values, kind="stable")
    eigenvalues = values[order]
    eigenvectors = np.ascontiguousarray(vectors[:, order])
    eigenvalues.setflags(write=False)
    eigenvectors.setflags(write=False)
    return SpectralDecomposition(eigenvalues=eigenvalues, eigenvectors=eigenvectors, sweeps=int(sweeps))


def apply_fn(h: HermitianMatrix, f: ScalarFunction) -> HermitianMatrix:
    """
    Apply a scalar function through the functional calculus.

    Eigenvalues close to zero are never clamped: a non-positive eigenvalue is
    a domain error for `log`, `inverse` and fractional or negative powers.

    Args:
        h:
            The argument.
        f:
            The scalar function.

    Returns:
        `Q f(Λ) Qᵀ`, re-symmetrized.

    Raises:
        DomainError:
            If `f` requires a positive definite argument and `h` is not,
            or if `f(Λ)` is not finite.
    """

    decomposition = eigh(h)
    if f.requires_positive and decomposition.lambda_min <= 0.0:
        raise DomainError(function=f.describe(), lambda_min=decomposition.lambda_min)

    with np.errstate(over="ignore"):
        values = f(decomposition.eigenvalues)
    if not np.all(np.isfinite(values)):
        raise DomainError(function=f.describe(), lambda_min=decomposition.lambda_min, overflow=True)

    q = decomposition.eigenvectors
    return HermitianMatrix((q * values) @ q.T)


def power(h: HermitianMatrix, exponent: float) -> HermitianMatrix:
    """Return `H^exponent`."""

    return apply_fn(h, ScalarFunction.power(exponent))


def log(h: HermitianMatrix) -> HermitianMatrix:
    """Return the matrix logarithm of a positive definite matrix."""

    return apply_fn(h, ScalarFunction.log())


def exp(h: HermitianMatrix) -> HermitianMatrix:
    """Return the matrix exponential."""

    return apply_fn(h, ScalarFunction.exp())


def inverse(h: HermitianMatrix) -> HermitianMatrix:
    """Return the inverse of a positive definite matrix."""

    return apply_fn(h, ScalarFunction.inverse())


def spectral_norm(h: HermitianMatrix) -> float:
    """Return `‖H‖₂ = max |λᵢ|`."""

    values = eigh(h).eigenvalues
    return float(max(abs(values[0]), abs(values[-1])))


def lambda_min(h: HermitianMatrix) -> float:
    """Return the smallest eigenvalue."""

    return eigh(h).lambda_min


def is_positive_definite(h: HermitianMatrix) -> bool:
    return lambda_min(h) > 0.0


def require_positive_definite(h: HermitianMatrix, *, name: str = "matrix") -> None:
    """
    Raise DomainError unless the matrix is positive definite.

    Args:
        h:
            Matrix to check.
        name:
            Label used in the error message.
    """

    smallest = lambda_min(h)
    if smallest <= 0.0:
        raise DomainError(function=f"positive definite {name}", lambda_min=smallest)


def congruence(x: HermitianMatrix, m: HermitianMatrix) -> HermitianMatrix:
    """
    Return the sandwich `M·X·M`, symmetrized.

    Raises:
        DimensionError:
            If the dimensions differ.
    """

    _require_same_dim(x, m)
    return HermitianMatrix(m.entries @ x.entries @ m.entries)


def symmetric_product(*factors: HermitianMatrix | FloatArray) -> HermitianMatrix:
    """
    Multiply a chain of factors whose product is symmetric.

    The caller is responsible for the chain being palindromic (for example
    `G·S·(G²·S)ⁿ·G`); the result is re-symmetrized to remove rounding drift.

    Args:
        factors:
            Matrices or plain arrays, multiplied left to right.

    Returns:
        The symmetrized product.
    """

    arrays = [f.entries if isinstance(f, HermitianMatrix) else np.asarray(f, dtype=np.float64) for f in factors]
    if not arrays:
        raise ValueError("symmetric_product needs at least one factor")
    dims = {a.shape for a in arrays}
    if len(dims) != 1:
        raise DimensionError(f"Incompatible factor shapes: {sorted(dims)}")
    if len(arrays) == 1:
        return HermitianMatrix(arrays[0])
    if len(arrays) == 2:
        return HermitianMatrix(arrays[0] @ arrays[1])
    return HermitianMatrix(np.linalg.multi_dot(arrays))


def relative_difference(x: HermitianMatrix, reference: HermitianMatrix) -> float:
    """Return `‖X − R‖_F / ‖R‖_F` (absolute difference if `R = 0`)."""

    _require_same_dim(x, reference)
    diff = float(np.linalg.norm(x.entries - reference.entries, "fro"))
    scale = reference.frobenius_norm()
    return diff / scale if scale > 0.0 else diff


def _require_same_dim(x: HermitianMatrix, y: HermitianMatrix) -> None:
    if x.dim != y.dim:
        raise DimensionError(f"Dimension mismatch: {x.dim} vs {y.dim}")
