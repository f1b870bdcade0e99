# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

"""
Operator equations that characterize the Furuta type orders.

Every family follows the same pattern: a left-hand operator `H` and an
invertible factor `G` are built from `A` and `B`, and the unique positive
definite `S` with `G·S·G = H` is `S = G⁻¹·H·G⁻¹`. The order in question holds
exactly when `S` is a contraction. Each report re-expands the defining
equation to reconstruct the target operator and records the relative
residual.

Dual families use the same construction on the operands `(B⁻¹, A⁻¹)`. The
order and chaotic duals unfold their solution back into `A` and `B`, so the
residual is measured against `A^p`; the complete form duals report the
solution, target and residual in the substituted operands `(B⁻¹, A⁻¹)`.
"""

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable

from loewner_lab.furuta import ParameterError, ParamSet, ValidationResult
from loewner_lab.orders import (
    DEFAULT_TOLERANCE,
    OrderVerdict,
    TolerancePolicy,
    chaotic_geq,
    loewner_geq,
)
from loewner_lab.spectra import (
    DimensionError,
    HermitianMatrix,
    SpectralError,
    congruence,
    inverse,
    power,
    relative_difference,
    require_positive_definite,
    spectral_norm,
    symmetric_product,
)

# Largest reconstruction residual a report may carry.
RESIDUAL_LIMIT = 1e-8

# Relative slack for the linear exponent constraints.
CONSTRAINT_TOLERANCE = 1e-12

# Distance to the nearest integer accepted when solving for n.
INTEGRALITY_TOLERANCE = 1e-9


class ConstraintError(ValueError):
    """Raised when parameters violate a family's ranges or exponent constraint."""

    pass


@dataclass(eq=False)
class ResidualError(SpectralError):
    """Raised when a constructed solution does not reproduce its equation.

    Attributes:
        family:
            Tag of the equation family.
        residual:
            Relative Frobenius residual of the reconstruction.
    """

    family: str
    residual: float

    def __str__(self) -> str:
        return f"{self.family}: reconstruction residual {self.residual:.3e} exceeds {RESIDUAL_LIMIT:.0e}"


class EquationFamily(str, Enum):
    ORDER_FORWARD = "order_forward"
    ORDER_DUAL = "order_dual"
    CHAOTIC_FORWARD = "chaotic_forward"
    CHAOTIC_DUAL = "chaotic_dual"
    COMPLETE_SQUARE = "complete_square"
    COMPLETE_SQUARE_DUAL = "complete_square_dual"
    COMPLETE_LARGE_R = "complete_large_r"
    COMPLETE_LARGE_R_DUAL = "complete_large_r_dual"
    COMPLETE_ROOT = "complete_root"
    COMPLETE_ROOT_DUAL = "complete_root_dual"

    @property
    def is_dual(self) -> bool:
        return self.value.endswith("_dual")

    @property
    def kind(self) -> str:
        """Family name without the forward/dual side, e.g. `order` or `complete_root`."""

        return self.value.removesuffix("_dual").removesuffix("_forward")

    @property
    def hypothesis(self) -> str:
        return "chaotic" if self.kind == "chaotic" else "ordered"


REQUIRED_FIELDS: dict[str, tuple[str, ...]] = {
    "order": ("p", "r", "s", "t", "n"),
    "chaotic": ("p", "r", "s", "t", "n"),
    "complete_square": ("p", "p0", "r", "n"),
    "complete_large_r": ("p", "p0", "r", "n"),
    "complete_root": ("p", "p0", "r", "n"),
}

# Fields complete_params may solve for, per family kind.
SOLVABLE_FIELDS: dict[str, tuple[str, ...]] = {
    "order": ("s", "n", "p"),
    "chaotic": ("s", "n", "p"),
    "complete_square": ("n", "p"),
    "complete_large_r": ("n", "p"),
    "complete_root": ("n", "p"),
}


@dataclass(frozen=True)
class SolutionReport:
    """
    Constructed solution of an operator equation.

    Attributes:
        family:
            The equation family.
        params:
            Parameters used.
        solution:
            The positive definite solution `S` (or `T` for chaotic families).
        norm:
            `‖S‖₂`.
        equation_residual:
            Relative Frobenius residual of the reconstructed target.
        contraction:
            True if `norm ≤ 1 + tolerance`.
        order_verdict:
            The order the family characterizes, evaluated on `(A, B)`.
        factorization_gap:
            Relative difference between the expanded product form of the
            equation and the power form `(G·S·G)^{n+1}`.
        approximate:
            True for reports that stand in for a limit (the chaotic witness).
    """

    family: EquationFamily
    params: ParamSet
    solution: HermitianMatrix
    norm: float
    equation_residual: float
    contraction: bool
    order_verdict: OrderVerdict
    factorization_gap: float = 0.0
    approximate: bool = False

    def to_dict(self, *, include_solution: bool = True) -> dict[str, object]:
        out: dict[str, object] = {
            "family": self.family.value,
            "params": self.params.as_dict(),
            "norm_S": self.norm,
            "equation_residual": self.equation_residual,
            "contraction": self.contraction,
            "order_margin": self.order_verdict.margin,
            "order_holds": self.order_verdict.holds,
            "factorization_gap": self.factorization_gap,
            "approximate": self.approximate,
        }
        if include_solution:
            out["S"] = self.solution.to_list()
        return out


def contraction_limit(tol: TolerancePolicy = DEFAULT_TOLERANCE) -> float:
    """Largest norm still counted as a contraction: `1 + rel + floor`."""

    return 1.0 + tol.threshold(1.0)


def douglas_contraction(h: HermitianMatrix, g: HermitianMatrix) -> tuple[HermitianMatrix, float]:
    """
    Solve `G·S·G = H` for the positive definite `S`.

    With `G` invertible the solution is unique and equals `G⁻¹·H·G⁻¹`; it is a
    contraction exactly when `G² ≥ H`.

    Args:
        h:
            Positive definite left-hand side.
        g:
            Positive definite factor.

    Returns:
        `S` and its spectral norm.

    Raises:
        DomainError:
            If `h` or `g` is not positive definite.
        DimensionError:
            If the dimensions differ.
    """

    if h.dim != g.dim:
        raise DimensionError(f"Dimension mismatch: {h.dim} vs {g.dim}")
    require_positive_definite(h, name="H")
    require_positive_definite(g, name="G")

    s = congruence(h, inverse(g))
    return s, spectral_norm(s)


def _close(lhs: float, rhs: float) -> bool:
    return abs(lhs - rhs) <= CONSTRAINT_TOLERANCE * max(1.0, abs(lhs), abs(rhs))


def _unit(kind: str) -> float:
    return 1.0 if kind == "order" else 0.0


def _constraint(family: EquationFamily, params: ParamSet) -> tuple[str, bool]:
    """The linear exponent constraint of a family and whether `params` meets it."""

    kind = family.kind
    if kind in ("order", "chaotic"):
        p, r, s, t, n = params.require("p", "r", "s", "t", "n")
        u = _unit(kind)
        name = "(p+t)s + r = (n+1)(1+t+r)" if kind == "order" else "(p+t)s + r = (n+1)(t+r)"
        return name, _close((p + t) * s + r, (n + 1) * (u + t + r))

    p, p0, r, n = params.require("p", "p0", "r", "n")
    if kind == "complete_square":
        return "p + r = (n+1)(2p0+2r)", _close(p + r, (n + 1) * (2 * p0 + 2 * r))
    if kind == "complete_large_r":
        return "p + r = (n+1)(2p0+1+r)", _close(p + r, (n + 1) * (2 * p0 + 1 + r))
    return "n(p+r) = (n+1)(p0+r)", _close(n * (p + r), (n + 1) * (p0 + r))


def validate(family: EquationFamily, params: ParamSet) -> ValidationResult:
    """
    Check the ranges and the exponent constraint of an equation family.

    Raises:
        ParameterError:
            If a required field is missing.
    """

    kind = family.kind
    params.require(*REQUIRED_FIELDS[kind])
    constraint = _constraint(family, params)

    if kind in ("order", "chaotic"):
        p, r, s, t, n = params.require("p", "r", "s", "t", "n")
        if kind == "order":
            return ValidationResult.from_checks(
                [
                    ("p ≥ 1", p >= 1),
                    ("t ≥ 0", t >= 0),
                    ("r ≥ 0", r >= 0),
                    ("s ≥ (1+t)/(p+t)", p + t > 0 and s >= (1 + t) / (p + t) - CONSTRAINT_TOLERANCE),
                    constraint,
                ]
            )
        return ValidationResult.from_checks(
            [
                ("p > 0", p > 0),
                ("r > 0", r > 0),
                ("t ≥ 0", t >= 0),
                ("n ≥ 1", n >= 1),
                constraint,
            ]
        )

    p, p0, r, n = params.require("p", "p0", "r", "n")
    order_checks = [("p > p0", p > p0), ("p0 ≥ 0", p0 >= 0)]
    if kind == "complete_square":
        return ValidationResult.from_checks([("0 ≤ r ≤ 1", 0 <= r <= 1), *order_checks, constraint])
    if kind == "complete_large_r":
        return ValidationResult.from_checks([("r ≥ 1", r >= 1), *order_checks, constraint])
    return ValidationResult.from_checks(
        [
            ("r ≥ 0", r >= 0),
            *order_checks,
            ("p ≤ 2p0 + min{1,r}", p <= 2 * p0 + min(1.0, r) + CONSTRAINT_TOLERANCE),
            ("n ≥ 1", n >= 1),
            constraint,
        ]
    )


def _defined_exponents(family: EquationFamily, params: ParamSet) -> list[tuple[str, bool]]:
    """Conditions without which the construction divides by zero."""

    kind = family.kind
    if kind in ("order", "chaotic"):
        (s,) = params.require("s")
        return [("s ≠ 0", s != 0)]
    if kind == "complete_large_r":
        p0, r = params.require("p0", "r")
        return [("p0 + r ≠ 0", p0 + r != 0)]
    if kind == "complete_root":
        (n,) = params.require("n")
        return [("n ≥ 1", n >= 1)]
    return []


def _require_valid(family: EquationFamily, params: ParamSet, *, check_ranges: bool = True) -> None:
    if check_ranges:
        result = validate(family, params)
    else:
        params.require(*REQUIRED_FIELDS[family.kind])
        result = ValidationResult.from_checks([*_defined_exponents(family, params), _constraint(family, params)])
    if not result.valid:
        raise ConstraintError(f"{family.value}: parameters {params} violate {'; '.join(result.violations)}")


def require_well_posed(family: EquationFamily, params: ParamSet) -> None:
    """
    Check that an equation is defined at `params`, ignoring the range hypotheses.

    Raises:
        ConstraintError:
            If the exponent constraint fails or an exponent divides by zero.
    """

    _require_valid(family, params, check_ranges=False)


def complete_params(family: EquationFamily, known: ParamSet) -> ParamSet:
    """
    Solve a family's exponent constraint for its single missing parameter.

    Args:
        family:
            The equation family.
        known:
            Parameters with exactly one of the solvable fields (`s`, `n`, `p`
            for order and chaotic families, `n`, `p` for complete families)
            left out.

    Returns:
        The completed ParamSet; it passes `validate`.

    Raises:
        ParameterError:
            If not exactly one solvable field is missing, or another required
            field is missing.
        ConstraintError:
            If the solution is not integral where `n` is solved for, or falls
            outside the family's ranges.
    """

    kind = family.kind
    solvable = SOLVABLE_FIELDS[kind]
    missing = [name for name in solvable if getattr(known, name) is None]
    if len(missing) != 1:
        raise ParameterError(f"{family.value}: exactly one of {', '.join(solvable)} must be left open, got {len(missing)}")
    unknown = missing[0]
    fixed = [name for name in REQUIRED_FIELDS[kind] if name != unknown]
    known.require(*fixed)

    try:
        value = _solve_for(kind, unknown, known)
    except ZeroDivisionError as exc:
        raise ConstraintError(f"{family.value}: constraint cannot be solved for {unknown}") from exc

    if unknown == "n":
        nearest = round(value)
        if not math.isfinite(value) or abs(value - nearest) > INTEGRALITY_TOLERANCE:
            raise ConstraintError(f"{family.value}: no integral n (constraint gives n = {value:.12g})")
        if nearest < 0:
            raise ConstraintError(f"{family.value}: constraint gives negative n = {nearest}")
        completed = replace(known, n=int(nearest))
    else:
        completed = replace(known, **{unknown: value})

    _require_valid(family, completed)
    return completed


def _solve_for(kind: str, unknown: str, params: ParamSet) -> float:
    if kind in ("order", "chaotic"):
        u = _unit(kind)
        p, r, s, t, n = params.p, params.r, params.s, params.t, params.n
        if unknown == "s":
            return ((n + 1) * (u + t + r) - r) / (p + t)
        if unknown == "n":
            return ((p + t) * s + r) / (u + t + r) - 1
        return ((n + 1) * (u + t + r) - r) / s - t

    p, p0, r, n = params.p, params.p0, params.r, params.n
    if kind == "complete_root":
        if unknown == "n":
            return (p0 + r) / (p - p0)
        return (n + 1) * (p0 + r) / n - r

    step = 2 * p0 + 2 * r if kind == "complete_square" else 2 * p0 + 1 + r
    if unknown == "n":
        return (p + r) / step - 1
    return (n + 1) * step - r


def symmetric_chaotic_params(p: float, t: float) -> ParamSet:
    """Chaotic parameters with `n = 1`, `r = p`, `s = (p+2t)/(p+t)`."""

    return ParamSet(p=p, t=t, r=p, s=(p + 2 * t) / (p + t), n=1)


def integer_chaotic_params(m: int, n: int) -> ParamSet:
    """Chaotic parameters with `p = 1`, `r = 1/n`, `t = 1/m`, `s = (m+n+1)/(m+1)`."""

    if m < 1 or n < 1:
        raise ParameterError(f"m and n must be positive integers, got m={m}, n={n}")
    return ParamSet(p=1.0, r=1.0 / n, t=1.0 / m, s=(m + n + 1) / (m + 1), n=n)


def order_witness_params(p: float) -> ParamSet:
    """
    Order parameters with `n = 0`, `t = 0`, `r = 0`, `s = 1/p`.

    At these parameters `S = A^{-1/2}·B·A^{-1/2}`, which is a contraction
    exactly when `A ≥ B`.
    """

    return ParamSet(p=p, t=0.0, r=0.0, s=1.0 / p, n=0)


def chaotic_witness_params(n: int) -> ParamSet:
    """Chaotic parameters with `p = 1`, `t = 0`, `r = 1/n`, `s = 1`."""

    if n < 1:
        raise ParameterError(f"n must be a positive integer, got {n}")
    return ParamSet(p=1.0, t=0.0, r=1.0 / n, s=1.0, n=n)


def _sandwich_parts(
    x: HermitianMatrix,
    y: HermitianMatrix,
    params: ParamSet,
    unit: float,
) -> tuple[HermitianMatrix, HermitianMatrix]:
    p, r, s, t, n = params.require("p", "r", "s", "t", "n")
    inner = power(congruence(power(y, p), power(x, t / 2)), s)
    h = power(congruence(inner, power(x, r / 2)), 1.0 / (n + 1))
    g = power(x, (unit + t + r) / 2)
    return h, g


def _unfold_sandwich(
    x: HermitianMatrix,
    solution: HermitianMatrix,
    params: ParamSet,
    unit: float,
) -> tuple[HermitianMatrix, HermitianMatrix]:
    """Rebuild `Y^p` from `S` in expanded product form and in power form."""

    p, r, s, t, n = params.require("p", "r", "s", "t", "n")
    edge = power(x, (unit + t) / 2)
    middle = power(x, unit + t + r)
    outer = power(x, -t / 2)

    chain: list[HermitianMatrix] = [edge, solution]
    for _ in range(n):
        chain.extend([middle, solution])
    chain.append(edge)
    expanded = symmetric_product(*chain)

    g = power(x, (unit + t + r) / 2)
    powered = congruence(power(congruence(solution, g), n + 1), power(x, -r / 2))

    return (
        congruence(power(expanded, 1.0 / s), outer),
        congruence(power(powered, 1.0 / s), outer),
    )


def _finish(
    family: EquationFamily,
    params: ParamSet,
    solution: HermitianMatrix,
    norm: float,
    target: HermitianMatrix,
    expanded: HermitianMatrix,
    powered: HermitianMatrix,
    verdict: OrderVerdict,
    tol: TolerancePolicy,
) -> SolutionReport:
    residual = relative_difference(expanded, target)
    if not residual <= RESIDUAL_LIMIT:
        raise ResidualError(family=family.value, residual=residual)
    return SolutionReport(
        family=family,
        params=params,
        solution=solution,
        norm=norm,
        equation_residual=residual,
        contraction=norm <= contraction_limit(tol),
        order_verdict=verdict,
        factorization_gap=relative_difference(expanded, powered),
    )


def _require_operands(a: HermitianMatrix, b: HermitianMatrix) -> None:
    if a.dim != b.dim:
        raise DimensionError(f"Dimension mismatch: {a.dim} vs {b.dim}")
    require_positive_definite(a, name="A")
    require_positive_definite(b, name="B")


def _solve_sandwich(
    a: HermitianMatrix,
    b: HermitianMatrix,
    params: ParamSet,
    family: EquationFamily,
    tol: TolerancePolicy,
    order: Callable[[HermitianMatrix, HermitianMatrix, TolerancePolicy], OrderVerdict],
    *,
    check_ranges: bool = True,
) -> SolutionReport:
    _require_operands(a, b)
    _require_valid(family, params, check_ranges=check_ranges)
    unit = _unit(family.kind)
    (p,) = params.require("p")

    if not family.is_dual:
        h, g = _sandwich_parts(a, b, params, unit)
        solution, norm = douglas_contraction(h, g)
        expanded, powered = _unfold_sandwich(a, solution, params, unit)
        target = power(b, p)
    else:
        # Forward construction on (B⁻¹, A⁻¹), unfolded in the original operands.
        h, g = _sandwich_parts(b, a, params, unit)
        solution, norm = douglas_contraction(inverse(h), inverse(g))
        expanded, powered = _unfold_sandwich(b, inverse(solution), params, unit)
        target = power(a, p)

    return _finish(family, params, solution, norm, target, expanded, powered, order(a, b, tol), tol)


def solve_order(
    a: HermitianMatrix,
    b: HermitianMatrix,
    params: ParamSet,
    side: EquationFamily = EquationFamily.ORDER_FORWARD,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
    *,
    check_ranges: bool = True,
) -> SolutionReport:
    """
    Construct `S` with `A^{r/2}(A^{t/2}B^pA^{t/2})^sA^{r/2} = (A^{(1+t+r)/2}·S·A^{(1+t+r)/2})^{n+1}`.

    The reconstruction checked is
    `B^p = A^{-t/2}(A^{(1+t)/2}·S·(A^{1+t+r}·S)^n·A^{(1+t)/2})^{1/s}A^{-t/2}`;
    the dual side solves the same equation with `A` and `B` exchanged and
    reports `S = G'·H'⁻¹·G'`, reconstructing `A^p`.

    Args:
        a:
            Positive definite `A`.
        b:
            Positive definite `B`.
        params:
            `p, t, r, s, n` with `(p+t)s + r = (n+1)(1+t+r)`.
        side:
            `ORDER_FORWARD` or `ORDER_DUAL`.
        tol:
            Tolerance policy for the contraction test and the verdict.

    Returns:
        The solution report; `order_verdict` is `A ≥ B`.

    Raises:
        ConstraintError:
            If the parameters are out of range or violate the constraint.
        DomainError:
            If `A` or `B` is not positive definite.
        ResidualError:
            If the reconstruction residual exceeds 1e-8.
    """

    if side.kind != "order":
        raise ValueError(f"Not an order equation: {side.value}")
    return _solve_sandwich(a, b, params, side, tol, loewner_geq, check_ranges=check_ranges)


def solve_chaotic(
    a: HermitianMatrix,
    b: HermitianMatrix,
    params: ParamSet,
    side: EquationFamily = EquationFamily.CHAOTIC_FORWARD,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
    *,
    check_ranges: bool = True,
) -> SolutionReport:
    """
    Construct `T` with `A^{r/2}(A^{t/2}B^pA^{t/2})^sA^{r/2} = (A^{(t+r)/2}·T·A^{(t+r)/2})^{n+1}`.

    Same pattern as `solve_order` with the exponent unit dropped; the order
    verdict is the chaotic order `A ≫ B`.
    """

    if side.kind != "chaotic":
        raise ValueError(f"Not a chaotic equation: {side.value}")
    return _solve_sandwich(a, b, params, side, tol, chaotic_geq, check_ranges=check_ranges)


def _solve_complete_forward(
    a: HermitianMatrix,
    b: HermitianMatrix,
    params: ParamSet,
    kind: str,
) -> tuple[HermitianMatrix, float, HermitianMatrix, HermitianMatrix, HermitianMatrix]:
    p, p0, r, n = params.require("p", "p0", "r", "n")
    a_half = power(a, r / 2)
    k0 = congruence(power(b, p0), a_half)
    w = congruence(power(b, p), a_half)

    if kind == "complete_root":
        a_half_inv = power(a, -r / 2)
        m = congruence(power(b, -p), a_half_inv)
        nn = congruence(power(b, -p0), a_half_inv)
        solution, norm = douglas_contraction(power(nn, (n + 1) / n), power(m, 0.5))

        w_half = power(w, 0.5)
        solution_inv = inverse(solution)
        chain: list[HermitianMatrix] = [w_half, solution_inv]
        for _ in range(n - 1):
            chain.extend([w, solution_inv])
        chain.append(w_half)
        expanded = symmetric_product(*chain)
        powered = power(congruence(solution_inv, w_half), n)
        return solution, norm, power(k0, n + 1), expanded, powered

    if kind == "complete_square":
        g = k0
    else:
        g = power(k0, (2 * p0 + 1 + r) / (2 * (p0 + r)))
    h = power(w, 1.0 / (n + 1))
    solution, norm = douglas_contraction(h, g)

    a_half_inv = power(a, -r / 2)
    g_squared = congruence(HermitianMatrix.identity(a.dim), g)
    chain = [a_half_inv, g, solution]
    for _ in range(n):
        chain.extend([g_squared, solution])
    chain.extend([g, a_half_inv])
    expanded = symmetric_product(*chain)
    powered = congruence(power(congruence(solution, g), n + 1), a_half_inv)
    return solution, norm, power(b, p), expanded, powered


def solve_complete(
    a: HermitianMatrix,
    b: HermitianMatrix,
    params: ParamSet,
    family: EquationFamily,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
    *,
    check_ranges: bool = True,
) -> SolutionReport:
    """
    Construct the solution of a complete form equation.

    With `K = A^{r/2}B^{p0}A^{r/2}` and `W = A^{r/2}B^pA^{r/2}`:

    - `complete_square`: `W^{1/(n+1)} = K·S·K`, reconstructing `B^p`.
    - `complete_large_r`: the same with `G = K^{(2p0+1+r)/(2(p0+r))}` in place
      of `K`.
    - `complete_root`: `(A^{-r/2}B^{-p0}A^{-r/2})^{(n+1)/n} = M^{1/2}·S·M^{1/2}`
      with `M = W⁻¹`, checking `K^{n+1} = (W^{1/2}·S⁻¹·W^{1/2})^n`.

    Dual families run the same construction on `(B⁻¹, A⁻¹)` and report the
    target and residual in those operands, so the reconstructed operator of
    `complete_square_dual` is `A^{-p}`.

    Raises:
        ConstraintError:
            If the parameters are out of range or violate the constraint.
        DomainError:
            If `A` or `B` is not positive definite.
        ResidualError:
            If the reconstruction residual exceeds 1e-8.
    """

    if not family.kind.startswith("complete"):
        raise ValueError(f"Not a complete form equation: {family.value}")
    _require_operands(a, b)
    _require_valid(family, params, check_ranges=check_ranges)

    x, y = (inverse(b), inverse(a)) if family.is_dual else (a, b)
    solution, norm, target, expanded, powered = _solve_complete_forward(x, y, params, family.kind)
    return _finish(family, params, solution, norm, target, expanded, powered, loewner_geq(a, b, tol), tol)


def solve(
    family: EquationFamily,
    a: HermitianMatrix,
    b: HermitianMatrix,
    params: ParamSet,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
    *,
    check_ranges: bool = True,
) -> SolutionReport:
    """
    Dispatch to the solver of the given family.

    With `check_ranges=False` only the exponent constraint is enforced, so
    counterexample search can solve at parameters outside the hypotheses.
    """

    if family.kind == "order":
        return solve_order(a, b, params, family, tol, check_ranges=check_ranges)
    if family.kind == "chaotic":
        return solve_chaotic(a, b, params, family, tol, check_ranges=check_ranges)
    return solve_complete(a, b, params, family, tol, check_ranges=check_ranges)


def chaotic_witness(
    a: HermitianMatrix,
    b: HermitianMatrix,
    n: int = 64,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> SolutionReport:
    """
    Approximate the `n → ∞` witness of the chaotic characterization.

    At `p = 1, t = 0, r = 1/n, s = 1` contraction for every `n` forces
    `log A ≥ log B`; a single finite `n` only approximates that limit, so the
    report is flagged approximate.
    """

    report = solve_chaotic(a, b, chaotic_witness_params(n), EquationFamily.CHAOTIC_FORWARD, tol)
    return replace(report, approximate=True)


def scaled_chaotic_check(
    a: HermitianMatrix,
    b: HermitianMatrix,
    scale: float,
    m: int,
    n: int,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> tuple[OrderVerdict, SolutionReport]:
    """
    Test `a^{n+1}·A ≫ B` through the chaotic equation.

    Args:
        a:
            Positive definite `A`.
        b:
            Positive definite `B`.
        scale:
            Positive scalar `a`.
        m:
            Positive integer selecting `t = 1/m`.
        n:
            Positive integer selecting `r = 1/n`.
        tol:
            Tolerance policy.

    Returns:
        `chaotic_geq(a^{n+1}·A, B)` and the report of `solve_chaotic` on the
        scaled pair with `integer_chaotic_params(m, n)`.
    """

    if not (math.isfinite(scale) and scale > 0):
        raise ValueError(f"Scale must be positive, got {scale}")
    scaled = a.scale(scale ** (n + 1))
    report = solve_chaotic(scaled, b, integer_chaotic_params(m, n), EquationFamily.CHAOTIC_FORWARD, tol)
    return chaotic_geq(scaled, b, tol), report
