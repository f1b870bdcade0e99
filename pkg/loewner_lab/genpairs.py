# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

"""
Seeded generators of positive definite matrix pairs.

All generators are pure functions of their GenSpec. Random numbers come from
numpy's PCG64 bit generator seeded through a SeedSequence keyed by
`(seed, *stream)`, so the same spec produces the same bits on every platform.
"""

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from loewner_lab.orders import DEFAULT_TOLERANCE, TolerancePolicy, chaotic_geq, loewner_geq
from loewner_lab.spectra import FloatArray, HermitianMatrix, exp, spectral_norm

MAX_DIM = 64

# Relative size of the small eigenvalues of the shift used for chaotic-only pairs.
CHAOTIC_SHIFT_SPREAD = 1e-2

_SEED_MASK = (1 << 64) - 1


class Relation(str, Enum):
    ORDERED = "ordered"
    CHAOTIC = "chaotic"
    UNORDERED = "unordered"


@dataclass(frozen=True)
class GenSpec:
    """
    Parameters of a pair generator.

    Attributes:
        dim:
            Matrix dimension, 1..64.
        seed:
            64-bit seed; larger or negative values are reduced modulo 2⁶⁴.
        condition_cap:
            Eigenvalues of random positive definite matrices lie in
            `[cap^{-1/2}, cap^{1/2}]`.
        gap:
            Minimum order margin for ordered pairs; defaults to `1e-3 · ‖B‖₂`.
        stream:
            Extra key of the random stream, e.g. `(family, dim, trial)`.
        zero_shift:
            If set, ordered pairs are returned as `A = B`.
    """

    dim: int
    seed: int
    condition_cap: float = 1e4
    gap: float | None = None
    stream: tuple[int, ...] = field(default=())
    zero_shift: bool = False

    def __post_init__(self) -> None:
        if isinstance(self.dim, bool) or not isinstance(self.dim, int) or not 1 <= self.dim <= MAX_DIM:
            raise ValueError(f"dim must be an integer in 1..{MAX_DIM}, got {self.dim!r}")
        if not (math.isfinite(self.condition_cap) and self.condition_cap > 1):
            raise ValueError(f"condition_cap must be > 1, got {self.condition_cap!r}")
        if self.gap is not None and not (math.isfinite(self.gap) and self.gap >= 0):
            raise ValueError(f"gap must be >= 0, got {self.gap!r}")
        if any(k < 0 for k in self.stream):
            raise ValueError("stream keys must be nonnegative")
        object.__setattr__(self, "stream", tuple(int(k) for k in self.stream))

    def rng(self) -> np.random.Generator:
        """Return a fresh generator for this spec."""

        sequence = np.random.SeedSequence(int(self.seed) & _SEED_MASK, spawn_key=self.stream)
        return np.random.Generator(np.random.PCG64(sequence))


def _random_orthogonal(rng: np.random.Generator, dim: int) -> FloatArray:
    q, r = np.linalg.qr(rng.uniform(-1.0, 1.0, size=(dim, dim)))
    signs = np.sign(np.diagonal(r))
    signs[signs == 0] = 1.0
    return q * signs


def _random_symmetric(rng: np.random.Generator, dim: int) -> HermitianMatrix:
    # HermitianMatrix symmetrizes.
    return HermitianMatrix(rng.uniform(-1.0, 1.0, size=(dim, dim)))


def _draw_pd(rng: np.random.Generator, dim: int, condition_cap: float) -> HermitianMatrix:
    half_log = 0.5 * math.log(condition_cap)
    eigenvalues = np.exp(rng.uniform(-half_log, half_log, size=dim))
    q = _random_orthogonal(rng, dim)
    return HermitianMatrix((q * eigenvalues) @ q.T)


def random_pd(spec: GenSpec) -> HermitianMatrix:
    """
    Draw a positive definite matrix `Q·diag(λ)·Qᵀ`.

    `Q` comes from the QR factorization of a uniform(−1, 1) matrix and `λ` is
    log-uniform in `[cap^{-1/2}, cap^{1/2}]`.
    """

    return _draw_pd(spec.rng(), spec.dim, spec.condition_cap)


def random_ordered_pair(spec: GenSpec) -> tuple[HermitianMatrix, HermitianMatrix]:
    """
    Draw `(A, B)` with `A ≥ B`.

    `B` is a random positive definite matrix and `A = B + P`, where the
    eigenvalues of `P` are `gap + ‖B‖₂ · 10^u` with `u` uniform in
    `[−4, 0]`. With `zero_shift` the pair is `(B, B)`.

    Returns:
        `(A, B)` with `λ_min(A − B) ≥ gap`.
    """

    rng = spec.rng()
    b = _draw_pd(rng, spec.dim, spec.condition_cap)
    if spec.zero_shift:
        return b, b

    norm_b = spectral_norm(b)
    gap = spec.gap if spec.gap is not None else 1e-3 * norm_b
    shifts = gap + norm_b * np.power(10.0, rng.uniform(-4.0, 0.0, size=spec.dim))
    q = _random_orthogonal(rng, spec.dim)
    return HermitianMatrix(b.entries + (q * shifts) @ q.T), b


def random_chaotic_only_pair(
    spec: GenSpec,
    budget: int = 100,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> tuple[HermitianMatrix, HermitianMatrix] | None:
    """
    Draw `(A, B)` with `A ≫ B` but not `A ≥ B`.

    `B = exp(Y)` for a random symmetric `Y` with `‖Y‖₂ = ½·ln(cap)` and
    `A = exp(Y + P)`, where `P` is positive definite with one dominant
    eigenvalue. A candidate is accepted if the chaotic order holds and the
    Loewner order fails clearly.

    Args:
        spec:
            Generator parameters; `dim` must be at least 2.
        budget:
            Number of candidates to try.
        tol:
            Tolerance policy of the acceptance test.

    Returns:
        The pair, or None if the budget is exhausted.

    Raises:
        ValueError:
            If `dim` is 1, where both orders coincide.
    """

    if spec.dim < 2:
        raise ValueError("Chaotic-only pairs need dim >= 2: scalar orders coincide")

    rng = spec.rng()
    target_norm = 0.5 * math.log(spec.condition_cap)
    for _ in range(max(budget, 0)):
        y = _random_symmetric(rng, spec.dim)
        y = y.scale(target_norm / max(spectral_norm(y), 1e-300))

        c = rng.uniform(0.5, 2.0)
        weights = np.empty(spec.dim)
        weights[0] = 1.0
        weights[1:] = CHAOTIC_SHIFT_SPREAD * (1.0 + rng.uniform(0.0, 1.0, size=spec.dim - 1))
        q = _random_orthogonal(rng, spec.dim)
        p = HermitianMatrix((q * (c * weights)) @ q.T)

        a = exp(y + p)
        b = exp(y)
        if chaotic_geq(a, b, tol).holds and loewner_geq(a, b, tol).clear_failure:
            return a, b
    return None


def random_unordered_pair(
    spec: GenSpec,
    budget: int = 100,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> tuple[HermitianMatrix, HermitianMatrix] | None:
    """
    Draw independent `(A, B)` such that neither `A ≥ B` nor `B ≥ A`.

    Raises:
        ValueError:
            If `dim` is 1, where scalars are totally ordered.
    """

    if spec.dim < 2:
        raise ValueError("Unordered pairs need dim >= 2: scalars are totally ordered")

    rng = spec.rng()
    for _ in range(max(budget, 0)):
        a = _draw_pd(rng, spec.dim, spec.condition_cap)
        b = _draw_pd(rng, spec.dim, spec.condition_cap)
        if loewner_geq(a, b, tol).clear_failure and loewner_geq(b, a, tol).clear_failure:
            return a, b
    return None


def draw_pair(
    relation: Relation,
    spec: GenSpec,
    budget: int = 100,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> tuple[HermitianMatrix, HermitianMatrix] | None:
    """Draw a pair in the given relation; None if a rejection sampler runs out of budget."""

    if relation is Relation.ORDERED:
        return random_ordered_pair(spec)
    if relation is Relation.CHAOTIC:
        return random_chaotic_only_pair(spec, budget, tol)
    return random_unordered_pair(spec, budget, tol)
