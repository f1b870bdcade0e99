# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

"""
Counterexample search action.

Either searches for a clearly failing instance at the given parameters or,
with `--replay`, regenerates an instance from a fingerprint (taken from a
witness, a violation dump or a report) and evaluates it again.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from loewner_lab.actions.base import parse_int_list, parse_params_arg
from loewner_lab.cli_io import progress, warn
from loewner_lab.config import CampaignConfig, ConfigError, default_tolerance, parse_family
from loewner_lab.equations import ConstraintError
from loewner_lab.furuta import ParameterError
from loewner_lab.harness import Fingerprint, reproduce, search_counterexample
from loewner_lab.yaml_io import read_yaml_mapping


@dataclass(frozen=True)
class SearchAction:
    """`search` subcommand."""

    name: str = "search"
    help: str = "Search for a counterexample, or replay an instance fingerprint"
    requires_config: bool = False

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--family", help="Family tag")
        parser.add_argument("--params", help="Parameters, e.g. p=5,q=1,r=0")
        parser.add_argument("--budget", type=int, default=10000, help="Maximum number of pairs (default: 10000)")
        parser.add_argument("--seed", type=int, default=0, help="Generator seed (default: 0)")
        parser.add_argument("--dims", default="2", help="Dimensions to cycle through (default: 2)")
        parser.add_argument("--condition-cap", type=float, default=100.0, help="Generator condition cap (default: 100)")
        parser.add_argument(
            "--replay",
            help="YAML/JSON file holding a fingerprint (a witness, a violation dump or a report)",
        )

    def run(self, args: argparse.Namespace, config: CampaignConfig | None) -> None:
        """
        Execute the search or the replay.

        Raises:
            ConfigError:
                If arguments are missing or invalid.
        """

        _ = config
        tol = default_tolerance()

        if args.replay:
            fingerprint = Fingerprint.from_dict(_find_fingerprint(read_yaml_mapping(Path(args.replay))))
            replay = reproduce(fingerprint, tol)
            if not replay.digest_matches:
                warn("regenerated pair differs from the recorded digest")
            payload: dict[str, Any] = {
                "fingerprint": fingerprint.to_dict(),
                "held": replay.outcome.held,
                "margin": replay.outcome.margin,
                "digest_matches": replay.digest_matches,
            }
            sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
            return

        if not args.family or args.params is None:
            raise ConfigError("search needs --family and --params (or --replay)")
        family = parse_family(args.family)
        params = parse_params_arg(args.params)
        dims = parse_int_list(args.dims, option="--dims")

        progress(f"Searching {family.value} at {params}: budget {args.budget}, dims {list(dims)}, seed {args.seed}")
        try:
            result = search_counterexample(
                family,
                params,
                args.budget,
                args.seed,
                dims=dims,
                condition_cap=args.condition_cap,
                tol=tol,
                progress=progress,
            )
        except (ParameterError, ConstraintError) as exc:
            raise ConfigError(str(exc)) from exc

        sys.stdout.write(json.dumps(result.to_dict(), sort_keys=True, indent=2) + "\n")


def _find_fingerprint(raw: dict[str, Any]) -> dict[str, Any]:
    """Locate a fingerprint in a witness, a violation dump, a report or a bare fingerprint."""

    if "fingerprint" in raw and isinstance(raw["fingerprint"], dict):
        return raw["fingerprint"]
    if "witness" in raw and isinstance(raw["witness"], dict):
        return _find_fingerprint(raw["witness"])
    violations = raw.get("violations")
    if isinstance(violations, list) and violations and isinstance(violations[0], dict):
        return _find_fingerprint(violations[0])
    families = raw.get("families")
    if isinstance(families, list):
        for entry in families:
            if isinstance(entry, dict) and isinstance(entry.get("worst_instance"), dict):
                return entry["worst_instance"]
    if "family" in raw and "stream" in raw:
        return raw
    raise ConfigError("No instance fingerprint found in replay file")
