# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

import pytest
from hypothesis import given, seed
from hypothesis import strategies as st

from loewner_lab.furuta import (
    InequalityFamily,
    ParameterError,
    ParamSet,
    complete_form_exponent,
    evaluate,
    margin_surface,
    sides,
    validate,
)
from loewner_lab.genpairs import GenSpec, random_chaotic_only_pair, random_ordered_pair
from loewner_lab.harness import default_grid
from loewner_lab.spectra import DimensionError, HermitianMatrix
from tests.helpers import rotated_diagonal, scalar, value

positive_scalars = st.floats(min_value=0.3, max_value=3.0)


def closed_form(family: InequalityFamily, a: float, b: float, params: ParamSet) -> tuple[float, float]:
    """Both sides of an inequality for commuting 1×1 operands."""

    p, q, r, s, t, p0, alpha = params.p, params.q, params.r, params.s, params.t, params.p0, params.alpha
    if family is InequalityFamily.FURUTA_B:
        return (b**r * a**p) ** (1 / q), b ** ((p + r) / q)
    if family is InequalityFamily.FURUTA_A:
        return a ** ((p + r) / q), (a**r * b**p) ** (1 / q)
    if family is InequalityFamily.GRAND_FURUTA:
        return a ** (1 - t + r), (a**r * (a**-t * b**p) ** s) ** ((1 - t + r) / ((p - t) * s + r))
    if family is InequalityFamily.COMPLETE_FORM:
        s = s if s is not None else complete_form_exponent(p, p0, r)
        return (a**r * b**p0) ** ((s + r) / (p0 + r)), (a**r * b**p) ** ((s + r) / (p + r))
    if family in (InequalityFamily.ORDER_SANDWICH, InequalityFamily.CHAOTIC_SANDWICH):
        u = 1.0 if family is InequalityFamily.ORDER_SANDWICH else 0.0
        return a ** (u + t + r), (a**r * (a**t * b**p) ** s) ** ((u + t + r) / ((p + t) * s + r))
    return a**alpha, b**alpha


GRID_CASES = [(family, params) for family in InequalityFamily for params in default_grid(family)]


def test_parse_accepts_fractions_and_integers():
    params = ParamSet.parse(" p=2, r=1/3 ,n=1")

    assert params.p == 2.0
    assert params.r == pytest.approx(1 / 3)
    assert params.n == 1 and isinstance(params.n, int)
    assert params.q is None


@pytest.mark.parametrize("text", ["p2", "x=1", "p=1,p=2", "n=1.5", "n=-1", "p=abc", "r=1/0", "p=inf"])
def test_parse_rejects_malformed_input(text):
    with pytest.raises(ParameterError):
        ParamSet.parse(text)


def test_params_render_and_require():
    params = ParamSet(p=2, r=0.5)

    assert str(params) == "p=2,r=0.5"
    assert params.as_dict() == {"p": 2.0, "r": 0.5}
    assert params.require("p", "r") == (2.0, 0.5)
    with pytest.raises(ParameterError, match="q"):
        params.require("p", "q")
    assert params.with_values(q=3).q == 3.0


def test_from_mapping_rejects_unknown_keys():
    with pytest.raises(ParameterError, match="unknown"):
        ParamSet.from_mapping({"p": 1, "unknown": 2})
    with pytest.raises(ParameterError):
        ParamSet.from_mapping({"p": True})


@pytest.mark.parametrize(
    "family, params, violation",
    [
        (InequalityFamily.FURUTA_B, ParamSet(p=5, q=1, r=0), "(1+r)q ≥ p+r"),
        (InequalityFamily.FURUTA_A, ParamSet(p=1, q=0.5, r=0), "q ≥ 1"),
        (InequalityFamily.GRAND_FURUTA, ParamSet(p=2, s=1, t=1.5, r=2), "0 ≤ t ≤ 1"),
        (InequalityFamily.GRAND_FURUTA, ParamSet(p=2, s=1, t=0.5, r=0.25), "r ≥ t"),
        (InequalityFamily.COMPLETE_FORM, ParamSet(p=1, p0=1, r=1), "p > p0"),
        (InequalityFamily.COMPLETE_FORM, ParamSet(p=3, p0=0, r=1, s=2), "s ≤ min{p, 2p0+min{1,r}}"),
        (InequalityFamily.ORDER_SANDWICH, ParamSet(p=2, t=0, r=0, s=0.25), "s ≥ (1+t)/(p+t)"),
        (InequalityFamily.CHAOTIC_SANDWICH, ParamSet(p=0, t=0, r=1, s=1), "p > 0"),
        (InequalityFamily.LOWNER_HEINZ, ParamSet(alpha=2), "0 ≤ α ≤ 1"),
    ],
)
def test_validate_names_the_violated_condition(family, params, violation):
    result = validate(family, params)

    assert not result.valid
    assert not result
    assert violation in result.violations


@pytest.mark.parametrize("family, params", GRID_CASES)
def test_default_grids_satisfy_hypotheses(family, params):
    assert validate(family, params).valid


def test_validate_needs_required_fields():
    with pytest.raises(ParameterError):
        validate(InequalityFamily.FURUTA_B, ParamSet(p=1, q=1))


def test_complete_form_exponent():
    assert complete_form_exponent(3, 1, 1) == 3
    assert complete_form_exponent(5, 0.5, 0.25) == pytest.approx(1.25)


@pytest.mark.parametrize("family", list(InequalityFamily))
@seed(20260301)
@given(data=st.data(), a=positive_scalars, b=positive_scalars)
def test_scalar_sides_match_closed_form(family, data, a, b):
    params = data.draw(st.sampled_from(default_grid(family)))
    lhs, rhs = sides(family, scalar(a), scalar(b), params)
    expected_lhs, expected_rhs = closed_form(family, a, b, params)

    assert value(lhs) == pytest.approx(expected_lhs, rel=1e-12)
    assert value(rhs) == pytest.approx(expected_rhs, rel=1e-12)

    margin = evaluate(family, scalar(a), scalar(b), params).verdict.margin
    assert margin == pytest.approx(expected_lhs - expected_rhs, rel=1e-9, abs=1e-12 * max(expected_lhs, expected_rhs))


@pytest.mark.parametrize("family", [f for f in InequalityFamily if f.hypothesis == "ordered"])
@seed(20260302)
@given(seed_value=st.integers(min_value=0, max_value=2**32), dim=st.integers(min_value=1, max_value=4))
def test_ordered_families_hold_on_ordered_pairs(family, seed_value, dim):
    a, b = random_ordered_pair(GenSpec(dim=dim, seed=seed_value, condition_cap=100.0))

    for params in default_grid(family):
        assert evaluate(family, a, b, params).verdict.holds, params


@seed(20260303)
@given(seed_value=st.integers(min_value=0, max_value=2**32), dim=st.integers(min_value=2, max_value=4))
def test_chaotic_sandwich_holds_on_chaotic_pairs(seed_value, dim):
    pair = random_chaotic_only_pair(GenSpec(dim=dim, seed=seed_value, condition_cap=100.0), budget=50)
    if pair is None:
        return
    a, b = pair

    for params in default_grid(InequalityFamily.CHAOTIC_SANDWICH):
        assert evaluate(InequalityFamily.CHAOTIC_SANDWICH, a, b, params).verdict.holds, params


def test_invalid_parameters_are_still_evaluated():
    evaluation = evaluate(InequalityFamily.FURUTA_B, scalar(2.0), scalar(1.0), ParamSet(p=5, q=1, r=0))

    assert not evaluation.validation.valid
    assert value(evaluation.lhs) == pytest.approx(32.0)
    assert value(evaluation.rhs) == pytest.approx(1.0)
    assert evaluation.verdict.holds


@pytest.mark.parametrize(
    "family, params, denominator",
    [
        (InequalityFamily.FURUTA_B, ParamSet(p=1, q=0, r=0), "q = 0"),
        (InequalityFamily.FURUTA_A, ParamSet(p=1, q=0, r=1), "q = 0"),
        (InequalityFamily.GRAND_FURUTA, ParamSet(p=1, s=1, t=1, r=0), "(p-t)s+r = 0"),
        (InequalityFamily.COMPLETE_FORM, ParamSet(p=1, p0=0, r=0, s=1), "p0+r = 0"),
        (InequalityFamily.ORDER_SANDWICH, ParamSet(p=1, s=0, t=0, r=0), "(p+t)s+r = 0"),
    ],
)
def test_zero_exponent_denominators_are_parameter_errors(family, params, denominator):
    with pytest.raises(ParameterError) as excinfo:
        evaluate(family, scalar(2.0), scalar(1.0), params)

    assert denominator in str(excinfo.value)


def test_sides_reject_mismatched_operands():
    with pytest.raises(DimensionError):
        sides(InequalityFamily.LOWNER_HEINZ, HermitianMatrix.identity(2), scalar(1.0), ParamSet(alpha=0.5))


def test_margin_surface_matches_pointwise_evaluation():
    a = rotated_diagonal((2.0, 5.0), 0.4)
    b = rotated_diagonal((1.0, 3.0), 1.1)
    base = ParamSet(q=2.0)

    surface = margin_surface(InequalityFamily.FURUTA_B, a, b, base, ("p", [1.0, 2.0, 3.0]), ("r", [0.0, 1.0]))

    assert len(surface.margins) == 3 and all(len(row) == 2 for row in surface.margins)
    expected = evaluate(InequalityFamily.FURUTA_B, a, b, ParamSet(p=2.0, q=2.0, r=1.0)).verdict.margin
    assert surface.margins[1][1] == expected

    records = surface.rows()
    assert len(records) == 6
    assert records[3] == {"p": 2.0, "r": 1.0, "margin": expected}


def test_margin_surface_does_not_depend_on_workers():
    a = rotated_diagonal((2.0, 5.0), 0.4)
    b = rotated_diagonal((1.0, 3.0), 1.1)
    row = ("p", [0.5, 1.0, 2.0, 4.0])
    col = ("q", [1.0, 2.0, 3.0])

    serial = margin_surface(InequalityFamily.FURUTA_A, a, b, ParamSet(r=1.0), row, col)
    threaded = margin_surface(InequalityFamily.FURUTA_A, a, b, ParamSet(r=1.0), row, col, workers=4)

    assert serial.margins == threaded.margins


@pytest.mark.parametrize("row, col", [(("x", [1.0]), ("p", [1.0])), (("p", [1.0]), ("p", [2.0]))])
def test_margin_surface_rejects_bad_axes(row, col):
    with pytest.raises(ParameterError):
        margin_surface(InequalityFamily.FURUTA_B, scalar(2.0), scalar(1.0), ParamSet(q=1, r=0), row, col)
