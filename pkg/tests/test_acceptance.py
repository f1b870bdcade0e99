# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

"""Acceptance-size campaigns; `pytest -m "not slow"` skips them."""

import pytest

from loewner_lab.config import CampaignConfig
from loewner_lab.equations import EquationFamily
from loewner_lab.furuta import InequalityFamily
from loewner_lab.harness import default_grid, run_campaign

pytestmark = pytest.mark.slow

DIMS = (2, 3, 4, 6)


@pytest.mark.parametrize("family", list(InequalityFamily))
def test_inequalities_hold_on_five_hundred_pairs(family):
    cfg = CampaignConfig(families=(family,), dims=DIMS, trials=150, seed=2026)

    report = run_campaign(cfg, workers=4)
    stats = report.stats(family)

    assert report.violation_count == 0
    assert stats.failed == 0
    assert stats.checked // len(default_grid(family)) >= 500


@pytest.mark.parametrize("family", list(EquationFamily))
def test_equations_reconstruct_on_three_hundred_pairs(family):
    cfg = CampaignConfig(families=(family,), dims=DIMS, trials=100, seed=2026, condition_cap=10.0)

    report = run_campaign(cfg, workers=4)
    stats = report.stats(family)

    assert report.violation_count == 0
    assert stats.held == stats.checked
    assert stats.checked // len(default_grid(family)) >= 300
    assert stats.residual_max is not None and stats.residual_max <= 1e-8
    assert not any("ResidualError" in message for message in stats.error_messages)
