# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

"""
Operator orders.

Tolerance-aware predicates for the Loewner order `A ≥ B` (A − B is positive
semidefinite) and the chaotic order `A ≫ B` (log A ≥ log B). Every verdict
carries a signed margin, the smallest eigenvalue of the defining difference,
even when the order fails, so callers can rank near-violations.
"""

import math
from dataclasses import dataclass
from enum import Enum

from loewner_lab.spectra import (
    DimensionError,
    HermitianMatrix,
    lambda_min,
    log,
    power,
    spectral_norm,
)


class OrderKind(str, Enum):
    LOEWNER = "loewner"
    CHAOTIC = "chaotic"


@dataclass(frozen=True)
class TolerancePolicy:
    """
    Tolerance used to accept slightly negative margins.

    A margin is accepted if `margin ≥ −(rel · scale + floor)`, where `scale` is
    the larger spectral norm of the two operands of the difference.

    Attributes:
        rel:
            Relative part of the tolerance.
        floor:
            Absolute part of the tolerance.
    """

    rel: float = 1e-8
    floor: float = 1e-12

    def __post_init__(self) -> None:
        if not (math.isfinite(self.rel) and self.rel > 0):
            raise ValueError("Tolerance 'rel' must be a positive number")
        if not (math.isfinite(self.floor) and self.floor > 0):
            raise ValueError("Tolerance 'floor' must be a positive number")

    def threshold(self, scale: float) -> float:
        """Return the absolute tolerance for operands of the given norm."""

        return self.rel * abs(scale) + self.floor


DEFAULT_TOLERANCE = TolerancePolicy()


@dataclass(frozen=True)
class OrderVerdict:
    """
    Outcome of an order comparison.

    Attributes:
        holds:
            True if the order holds within tolerance.
        margin:
            Smallest eigenvalue of the defining difference.
        tolerance:
            Absolute tolerance that was applied.
        order_kind:
            Which order was tested.
    """

    holds: bool
    margin: float
    tolerance: float
    order_kind: OrderKind

    def __post_init__(self) -> None:
        if self.holds != (self.margin >= -self.tolerance):
            raise ValueError("OrderVerdict.holds must equal (margin >= -tolerance)")

    @classmethod
    def from_margin(cls, margin: float, tolerance: float, kind: OrderKind) -> OrderVerdict:
        return cls(
            holds=bool(margin >= -tolerance),
            margin=float(margin),
            tolerance=float(tolerance),
            order_kind=kind,
        )

    @property
    def clear_failure(self) -> bool:
        """True if the margin is below −10× the tolerance."""

        return self.margin < -10.0 * self.tolerance

    def to_dict(self) -> dict[str, object]:
        return {
            "holds": self.holds,
            "margin": self.margin,
            "tolerance": self.tolerance,
            "order_kind": self.order_kind.value,
        }


def loewner_geq(
    a: HermitianMatrix,
    b: HermitianMatrix,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> OrderVerdict:
    """
    Test the Loewner order `A ≥ B`.

    Args:
        a:
            Left operand.
        b:
            Right operand.
        tol:
            Tolerance policy; the scale is `max(‖A‖₂, ‖B‖₂)`.

    Returns:
        The verdict with `margin = λ_min(A − B)`.

    Raises:
        DimensionError:
            If the dimensions differ.
    """

    if a.dim != b.dim:
        raise DimensionError(f"Dimension mismatch: {a.dim} vs {b.dim}")

    margin = lambda_min(a - b)
    scale = max(spectral_norm(a), spectral_norm(b))
    return OrderVerdict.from_margin(margin, tol.threshold(scale), OrderKind.LOEWNER)


def chaotic_geq(
    a: HermitianMatrix,
    b: HermitianMatrix,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> OrderVerdict:
    """
    Test the chaotic order `A ≫ B`, i.e. `log A ≥ log B`.

    The logarithms are computed independently per operand.

    Raises:
        DomainError:
            If either operand is not positive definite.
        DimensionError:
            If the dimensions differ.
    """

    if a.dim != b.dim:
        raise DimensionError(f"Dimension mismatch: {a.dim} vs {b.dim}")

    log_a = log(a)
    log_b = log(b)
    margin = lambda_min(log_a - log_b)
    scale = max(spectral_norm(log_a), spectral_norm(log_b))
    return OrderVerdict.from_margin(margin, tol.threshold(scale), OrderKind.CHAOTIC)


class OrderHypothesisError(ValueError):
    """Raised when a predicate is called on operands that violate its hypothesis."""

    pass


def lowner_heinz(
    a: HermitianMatrix,
    b: HermitianMatrix,
    alpha: float,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
    *,
    require_order: bool = True,
) -> OrderVerdict:
    """
    Test `A^α ≥ B^α`.

    For `α ∈ [0, 1]` and `A ≥ B > 0` the verdict is guaranteed to hold; for
    `α > 1` it may fail.

    Args:
        a:
            Left operand.
        b:
            Right operand.
        alpha:
            Nonnegative exponent.
        tol:
            Tolerance policy.
        require_order:
            If True, assert `A ≥ B` first.

    Returns:
        Verdict for `A^α ≥ B^α`.

    Raises:
        ValueError:
            If `alpha` is negative.
        OrderHypothesisError:
            If `require_order` is set and `A ≥ B` does not hold.
    """

    if not math.isfinite(alpha) or alpha < 0:
        raise ValueError(f"Exponent must be nonnegative, got {alpha}")

    if require_order:
        hypothesis = loewner_geq(a, b, tol)
        if not hypothesis.holds:
            raise OrderHypothesisError(f"A >= B does not hold (margin {hypothesis.margin:.3e})")

    return loewner_geq(power(a, alpha), power(b, alpha), tol)
