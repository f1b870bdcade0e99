# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, seed
from hypothesis import strategies as st

from loewner_lab.genpairs import GenSpec, random_ordered_pair
from loewner_lab.orders import (
    DEFAULT_TOLERANCE,
    OrderHypothesisError,
    OrderKind,
    OrderVerdict,
    TolerancePolicy,
    chaotic_geq,
    loewner_geq,
    lowner_heinz,
)
from loewner_lab.spectra import DimensionError, DomainError, HermitianMatrix
from tests.helpers import rotated_diagonal, scalar

# A ≥ B holds with A − B singular, but A² ≥ B² fails.
HEINZ_A = HermitianMatrix(np.array([[2.0, 1.0], [1.0, 1.0]]))
HEINZ_B = HermitianMatrix(np.array([[1.0, 0.0], [0.0, 0.0]]))


def test_loewner_order_holds_with_positive_margin():
    verdict = loewner_geq(HermitianMatrix.diagonal([2.0, 3.0]), HermitianMatrix.identity(2))

    assert verdict.holds
    assert verdict.margin == pytest.approx(1.0)
    assert verdict.order_kind is OrderKind.LOEWNER


def test_loewner_order_failure_reports_margin():
    verdict = loewner_geq(HermitianMatrix.diagonal([2.0, 0.5]), HermitianMatrix.identity(2))

    assert not verdict.holds
    assert verdict.margin == pytest.approx(-0.5)
    assert verdict.clear_failure


def test_equal_operands_are_ordered_both_ways():
    a = rotated_diagonal((0.5, 3.0), 0.7)

    assert loewner_geq(a, a).holds
    assert chaotic_geq(a, a).holds


def test_tolerance_accepts_tiny_negative_margins():
    a = scalar(1.0 - 1e-10)
    b = scalar(1.0)

    verdict = loewner_geq(a, b)
    assert verdict.holds
    assert not verdict.clear_failure
    assert verdict.tolerance == pytest.approx(DEFAULT_TOLERANCE.threshold(1.0))

    strict = loewner_geq(a, b, TolerancePolicy(rel=1e-12, floor=1e-15))
    assert not strict.holds


def test_tolerance_policy_rejects_nonpositive_values():
    with pytest.raises(ValueError):
        TolerancePolicy(rel=0.0)
    with pytest.raises(ValueError):
        TolerancePolicy(floor=-1.0)


def test_verdict_invariant_is_enforced():
    with pytest.raises(ValueError):
        OrderVerdict(holds=True, margin=-1.0, tolerance=1e-8, order_kind=OrderKind.LOEWNER)

    verdict = OrderVerdict.from_margin(-1e-9, 1e-8, OrderKind.CHAOTIC)
    assert verdict.to_dict() == {"holds": True, "margin": -1e-9, "tolerance": 1e-8, "order_kind": "chaotic"}


def test_dimension_mismatch_is_rejected():
    with pytest.raises(DimensionError):
        loewner_geq(HermitianMatrix.identity(2), HermitianMatrix.identity(3))
    with pytest.raises(DimensionError):
        chaotic_geq(HermitianMatrix.identity(2), HermitianMatrix.identity(3))


def test_chaotic_order_needs_positive_definite_operands():
    with pytest.raises(DomainError):
        chaotic_geq(HermitianMatrix.identity(2), HermitianMatrix.diagonal([1.0, 0.0]))


def test_orders_agree_on_commuting_operands():
    b = HermitianMatrix.diagonal([1.0, np.e])
    a = HermitianMatrix.diagonal([np.e**0.5, np.e**2])

    assert chaotic_geq(a, b).holds
    assert loewner_geq(a, b).holds
    assert not chaotic_geq(b, a).holds


def test_scalar_orders_coincide():
    assert loewner_geq(scalar(3.0), scalar(2.0)).holds == chaotic_geq(scalar(3.0), scalar(2.0)).holds
    assert chaotic_geq(scalar(np.e), scalar(1.0)).margin == pytest.approx(1.0)


def test_lowner_heinz_fails_above_one():
    verdict = lowner_heinz(HEINZ_A, HEINZ_B, 2.0)

    assert not verdict.holds
    assert verdict.margin == pytest.approx(3.0 - np.sqrt(10.0))


def test_lowner_heinz_checks_its_hypothesis():
    with pytest.raises(OrderHypothesisError):
        lowner_heinz(HEINZ_B, HEINZ_A, 0.5)

    unchecked = lowner_heinz(HermitianMatrix.identity(2), HermitianMatrix.diagonal([2.0, 2.0]), 0.5, require_order=False)
    assert not unchecked.holds


def test_lowner_heinz_rejects_negative_exponent():
    with pytest.raises(ValueError):
        lowner_heinz(HEINZ_A, HEINZ_A, -0.5)


@seed(20260201)
@given(
    seed_value=st.integers(min_value=0, max_value=2**32),
    dim=st.integers(min_value=1, max_value=4),
    alpha=st.floats(min_value=0.0, max_value=1.0),
)
def test_lowner_heinz_holds_on_ordered_pairs(seed_value, dim, alpha):
    a, b = random_ordered_pair(GenSpec(dim=dim, seed=seed_value, condition_cap=100.0))

    assert lowner_heinz(a, b, alpha).holds
