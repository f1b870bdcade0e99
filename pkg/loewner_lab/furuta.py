# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

"""
The Furuta family of operator inequalities.

Each inequality is evaluated as a left-hand side, a right-hand side and an
OrderVerdict for `LHS ≥ RHS`. Parameters that violate the hypotheses of the
corresponding theorem are accepted on purpose: such evaluations carry no
guarantee, but they are exactly what counterexample search needs.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields, replace
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, Sequence

from loewner_lab.orders import DEFAULT_TOLERANCE, OrderVerdict, TolerancePolicy, loewner_geq
from loewner_lab.spectra import DimensionError, HermitianMatrix, congruence, power


class ParameterError(ValueError):
    """Raised for missing or malformed parameters."""

    pass


@dataclass(frozen=True)
class ParamSet:
    """
    Named exponent tuple shared by all inequality and equation families.

    Only the fields a family needs must be present. Constraint validity is not
    checked here (see `validate`), so invalid combinations are first-class
    values.
    """

    p: float | None = None
    q: float | None = None
    r: float | None = None
    s: float | None = None
    t: float | None = None
    p0: float | None = None
    n: int | None = None
    alpha: float | None = None

    def __post_init__(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if value is None:
                continue
            if f.name == "n":
                if isinstance(value, bool) or not float(value).is_integer():
                    raise ParameterError(f"n must be an integer, got {value!r}")
                if int(value) < 0:
                    raise ParameterError(f"n must be >= 0, got {value!r}")
                object.__setattr__(self, "n", int(value))
                continue
            try:
                number = float(value)
            except (TypeError, ValueError) as exc:
                raise ParameterError(f"{f.name} must be a number, got {value!r}") from exc
            if not math.isfinite(number):
                raise ParameterError(f"{f.name} must be finite, got {value!r}")
            object.__setattr__(self, f.name, number)

    @classmethod
    def from_mapping(cls, values: dict[str, Any]) -> ParamSet:
        """Build a ParamSet from a mapping, rejecting unknown keys."""

        known = {f.name for f in fields(cls)}
        unknown = sorted(k for k in values if k not in known)
        if unknown:
            raise ParameterError(f"Unknown parameter(s): {', '.join(unknown)}")
        return cls(**{k: _parse_number(k, v) for k, v in values.items()})

    @classmethod
    def parse(cls, text: str) -> ParamSet:
        """
        Parse a parameter string such as `p=2,r=1/3,n=1`.

        Values may be decimals or fractions.

        Raises:
            ParameterError:
                If the string is malformed.
        """

        values: dict[str, Any] = {}
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            if "=" not in chunk:
                raise ParameterError(f"Expected name=value, got {chunk!r}")
            name, value = (part.strip() for part in chunk.split("=", 1))
            if name in values:
                raise ParameterError(f"Parameter given twice: {name}")
            values[name] = value
        return cls.from_mapping(values)

    def require(self, *names: str) -> tuple[Any, ...]:
        """
        Return the requested fields, raising if any is missing.

        Raises:
            ParameterError:
                If a requested field is absent.
        """

        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            raise ParameterError(f"Missing required parameter(s): {', '.join(missing)}")
        return tuple(getattr(self, name) for name in names)

    def with_values(self, **changes: Any) -> ParamSet:
        return replace(self, **changes)

    def as_dict(self) -> dict[str, float | int]:
        """Return the present fields in declaration order."""

        return {f.name: getattr(self, f.name) for f in fields(self) if getattr(self, f.name) is not None}

    def __str__(self) -> str:
        return ",".join(f"{k}={v:g}" for k, v in self.as_dict().items())


def _parse_number(name: str, value: Any) -> float | int:
    if isinstance(value, str):
        try:
            number = float(Fraction(value.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParameterError(f"{name} must be a number or fraction, got {value!r}") from exc
        if name == "n" and number.is_integer():
            return int(number)
        return number
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParameterError(f"{name} must be a number, got {value!r}")
    return value


@dataclass(frozen=True)
class ValidationResult:
    """
    Outcome of a hypothesis check.

    Attributes:
        valid:
            True if every hypothesis holds.
        violations:
            Names of the violated conditions.
    """

    valid: bool
    violations: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.valid

    @classmethod
    def from_checks(cls, checks: Iterable[tuple[str, bool]]) -> ValidationResult:
        violations = tuple(name for name, ok in checks if not ok)
        return cls(valid=not violations, violations=violations)


class InequalityFamily(str, Enum):
    """
    The inequalities of the Furuta family.

    `furuta_b`:         (B^{r/2} A^p B^{r/2})^{1/q} ≥ B^{(p+r)/q}
    `furuta_a`:         A^{(p+r)/q} ≥ (A^{r/2} B^p A^{r/2})^{1/q}
    `grand_furuta`:     A^{1−t+r} ≥ (A^{r/2} (A^{−t/2} B^p A^{−t/2})^s A^{r/2})^{(1−t+r)/((p−t)s+r)}
    `complete_form`:    (A^{r/2} B^{p0} A^{r/2})^{(s+r)/(p0+r)} ≥ (A^{r/2} B^p A^{r/2})^{(s+r)/(p+r)}
    `order_sandwich`:   A^{1+t+r} ≥ (A^{r/2} (A^{t/2} B^p A^{t/2})^s A^{r/2})^{(1+t+r)/((p+t)s+r)}
    `chaotic_sandwich`: A^{t+r} ≥ (A^{r/2} (A^{t/2} B^p A^{t/2})^s A^{r/2})^{(t+r)/((p+t)s+r)}
    `lowner_heinz`:     A^α ≥ B^α
    """

    FURUTA_B = "furuta_b"
    FURUTA_A = "furuta_a"
    GRAND_FURUTA = "grand_furuta"
    COMPLETE_FORM = "complete_form"
    ORDER_SANDWICH = "order_sandwich"
    CHAOTIC_SANDWICH = "chaotic_sandwich"
    LOWNER_HEINZ = "lowner_heinz"

    @property
    def hypothesis(self) -> str:
        """Relation between A and B that the theorem assumes."""

        if self is InequalityFamily.CHAOTIC_SANDWICH:
            return "chaotic"
        return "ordered"


REQUIRED_FIELDS: dict[InequalityFamily, tuple[str, ...]] = {
    InequalityFamily.FURUTA_B: ("p", "q", "r"),
    InequalityFamily.FURUTA_A: ("p", "q", "r"),
    InequalityFamily.GRAND_FURUTA: ("p", "r", "s", "t"),
    InequalityFamily.COMPLETE_FORM: ("p", "p0", "r"),
    InequalityFamily.ORDER_SANDWICH: ("p", "r", "s", "t"),
    InequalityFamily.CHAOTIC_SANDWICH: ("p", "r", "s", "t"),
    InequalityFamily.LOWNER_HEINZ: ("alpha",),
}


def complete_form_exponent(p: float, p0: float, r: float) -> float:
    """Return the largest admissible `s = min{p, 2p0 + min{1, r}}`."""

    return min(p, 2.0 * p0 + min(1.0, r))


def validate(family: InequalityFamily, params: ParamSet) -> ValidationResult:
    """
    Check the hypotheses of an inequality for the given parameters.

    Args:
        family:
            The inequality.
        params:
            Parameter set; the family's required fields must be present.

    Returns:
        Validity plus the names of the violated conditions.

    Raises:
        ParameterError:
            If a required field is missing.
    """

    params.require(*REQUIRED_FIELDS[family])

    if family in (InequalityFamily.FURUTA_B, InequalityFamily.FURUTA_A):
        p, q, r = params.require("p", "q", "r")
        return ValidationResult.from_checks(
            [
                ("p ≥ 0", p >= 0),
                ("q ≥ 1", q >= 1),
                ("r ≥ 0", r >= 0),
                ("(1+r)q ≥ p+r", (1 + r) * q >= p + r),
            ]
        )

    if family is InequalityFamily.GRAND_FURUTA:
        p, r, s, t = params.require("p", "r", "s", "t")
        return ValidationResult.from_checks(
            [
                ("0 ≤ t ≤ 1", 0 <= t <= 1),
                ("p ≥ 1", p >= 1),
                ("s ≥ 1", s >= 1),
                ("r ≥ t", r >= t),
            ]
        )

    if family is InequalityFamily.COMPLETE_FORM:
        p, p0, r = params.require("p", "p0", "r")
        checks = [
            ("r ≥ 0", r >= 0),
            ("p > p0", p > p0),
            ("p0 ≥ 0", p0 >= 0),
            ("p0 + r > 0", p0 + r > 0),
        ]
        if params.s is not None:
            s_max = complete_form_exponent(p, p0, r)
            checks.append(("s ≤ min{p, 2p0+min{1,r}}", params.s <= s_max))
            checks.append(("s + r ≥ 0", params.s + r >= 0))
        return ValidationResult.from_checks(checks)

    if family is InequalityFamily.ORDER_SANDWICH:
        p, r, s, t = params.require("p", "r", "s", "t")
        return ValidationResult.from_checks(
            [
                ("p ≥ 1", p >= 1),
                ("t ≥ 0", t >= 0),
                ("r ≥ 0", r >= 0),
                ("s ≥ (1+t)/(p+t)", p + t > 0 and s >= (1 + t) / (p + t)),
            ]
        )

    if family is InequalityFamily.CHAOTIC_SANDWICH:
        p, r, s, t = params.require("p", "r", "s", "t")
        return ValidationResult.from_checks(
            [
                ("p > 0", p > 0),
                ("t ≥ 0", t >= 0),
                ("r ≥ 0", r >= 0),
                ("s ≥ t/(p+t)", p + t > 0 and s >= t / (p + t)),
                ("(p+t)s + r > 0", (p + t) * s + r > 0),
            ]
        )

    (alpha,) = params.require("alpha")
    return ValidationResult.from_checks([("0 ≤ α ≤ 1", 0 <= alpha <= 1)])


@dataclass(frozen=True)
class InequalityEvaluation:
    """
    Both sides of an inequality and the verdict for `lhs ≥ rhs`.

    Attributes:
        family:
            The inequality.
        params:
            Parameters used.
        lhs:
            Left-hand side.
        rhs:
            Right-hand side.
        verdict:
            `loewner_geq(lhs, rhs)`.
        validation:
            Hypothesis check of `params`; an invalid evaluation carries no
            theorem guarantee.
    """

    family: InequalityFamily
    params: ParamSet
    lhs: HermitianMatrix
    rhs: HermitianMatrix
    verdict: OrderVerdict
    validation: ValidationResult


def _ratio(numerator: float, denominator: float, what: str) -> float:
    if denominator == 0:
        raise ParameterError(f"Exponent undefined: {what} = 0")
    return numerator / denominator


def sides(
    family: InequalityFamily,
    a: HermitianMatrix,
    b: HermitianMatrix,
    params: ParamSet,
) -> tuple[HermitianMatrix, HermitianMatrix]:
    """
    Build the two sides of an inequality exactly as its display formula reads.

    Raises:
        ParameterError:
            If a required field is missing or an exponent has a zero
            denominator.
        DomainError:
            If a fractional or negative power meets a non positive definite
            argument.
    """

    if a.dim != b.dim:
        raise DimensionError(f"Dimension mismatch: {a.dim} vs {b.dim}")
    params.require(*REQUIRED_FIELDS[family])

    if family is InequalityFamily.FURUTA_B:
        p, q, r = params.require("p", "q", "r")
        lhs = power(congruence(power(a, p), power(b, r / 2)), _ratio(1, q, "q"))
        rhs = power(b, _ratio(p + r, q, "q"))
        return lhs, rhs

    if family is InequalityFamily.FURUTA_A:
        p, q, r = params.require("p", "q", "r")
        lhs = power(a, _ratio(p + r, q, "q"))
        rhs = power(congruence(power(b, p), power(a, r / 2)), _ratio(1, q, "q"))
        return lhs, rhs

    if family is InequalityFamily.GRAND_FURUTA:
        p, r, s, t = params.require("p", "r", "s", "t")
        inner = power(congruence(power(b, p), power(a, -t / 2)), s)
        outer = congruence(inner, power(a, r / 2))
        lhs = power(a, 1 - t + r)
        rhs = power(outer, _ratio(1 - t + r, (p - t) * s + r, "(p-t)s+r"))
        return lhs, rhs

    if family is InequalityFamily.COMPLETE_FORM:
        p, p0, r = params.require("p", "p0", "r")
        s = params.s if params.s is not None else complete_form_exponent(p, p0, r)
        a_half = power(a, r / 2)
        lhs = power(congruence(power(b, p0), a_half), _ratio(s + r, p0 + r, "p0+r"))
        rhs = power(congruence(power(b, p), a_half), _ratio(s + r, p + r, "p+r"))
        return lhs, rhs

    if family in (InequalityFamily.ORDER_SANDWICH, InequalityFamily.CHAOTIC_SANDWICH):
        p, r, s, t = params.require("p", "r", "s", "t")
        unit = 1.0 if family is InequalityFamily.ORDER_SANDWICH else 0.0
        inner = power(congruence(power(b, p), power(a, t / 2)), s)
        outer = congruence(inner, power(a, r / 2))
        lhs = power(a, unit + t + r)
        rhs = power(outer, _ratio(unit + t + r, (p + t) * s + r, "(p+t)s+r"))
        return lhs, rhs

    (alpha,) = params.require("alpha")
    return power(a, alpha), power(b, alpha)


def evaluate(
    family: InequalityFamily,
    a: HermitianMatrix,
    b: HermitianMatrix,
    params: ParamSet,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
) -> InequalityEvaluation:
    """
    Evaluate an inequality on a matrix pair.

    Evaluation proceeds even if `validate` fails.

    Args:
        family:
            The inequality.
        a:
            Positive definite `A`.
        b:
            Positive definite `B`.
        params:
            Parameters.
        tol:
            Tolerance policy for the final comparison.

    Returns:
        Both sides, the verdict and the hypothesis check.
    """

    lhs, rhs = sides(family, a, b, params)
    return InequalityEvaluation(
        family=family,
        params=params,
        lhs=lhs,
        rhs=rhs,
        verdict=loewner_geq(lhs, rhs, tol),
        validation=validate(family, params),
    )


@dataclass(frozen=True)
class MarginSurface:
    """
    Margins of an inequality over a two-parameter grid.

    `margins[i][j]` belongs to `row_values[i]` and `col_values[j]`.
    """

    family: InequalityFamily
    base: ParamSet
    row_field: str
    row_values: tuple[float, ...]
    col_field: str
    col_values: tuple[float, ...]
    margins: tuple[tuple[float, ...], ...]

    def rows(self) -> list[dict[str, float]]:
        """Flatten the table into row-major records."""

        out: list[dict[str, float]] = []
        for i, rv in enumerate(self.row_values):
            for j, cv in enumerate(self.col_values):
                out.append({self.row_field: rv, self.col_field: cv, "margin": self.margins[i][j]})
        return out


def margin_surface(
    family: InequalityFamily,
    a: HermitianMatrix,
    b: HermitianMatrix,
    base: ParamSet,
    row: tuple[str, Sequence[float]],
    col: tuple[str, Sequence[float]],
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
    *,
    workers: int = 1,
) -> MarginSurface:
    """
    Evaluate an inequality over a grid of two parameter fields.

    Args:
        family:
            The inequality.
        a:
            Positive definite `A`.
        b:
            Positive definite `B`.
        base:
            Parameters for every field that is not on the grid.
        row:
            Name and values of the row field.
        col:
            Name and values of the column field.
        tol:
            Tolerance policy.
        workers:
            Number of threads used to evaluate grid nodes. Results do not
            depend on it.

    Returns:
        The margin table in row-major order.

    Raises:
        ParameterError:
            If a grid field is unknown or both axes name the same field.
    """

    row_field, row_values = row
    col_field, col_values = col
    known = {f.name for f in fields(ParamSet)}
    for name in (row_field, col_field):
        if name not in known:
            raise ParameterError(f"Unknown grid field: {name}")
    if row_field == col_field:
        raise ParameterError("Grid fields must differ")

    nodes = [base.with_values(**{row_field: rv, col_field: cv}) for rv in row_values for cv in col_values]

    def _margin(params: ParamSet) -> float:
        return evaluate(family, a, b, params, tol).verdict.margin

    if workers > 1 and len(nodes) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            flat = list(pool.map(_margin, nodes))
    else:
        flat = [_margin(params) for params in nodes]

    width = len(col_values)
    margins = tuple(tuple(flat[i * width : (i + 1) * width]) for i in range(len(row_values))) if width else tuple(() for _ in row_values)
    return MarginSurface(
        family=family,
        base=base,
        row_field=row_field,
        row_values=tuple(float(v) for v in row_values),
        col_field=col_field,
        col_values=tuple(float(v) for v in col_values),
        margins=margins,
    )
