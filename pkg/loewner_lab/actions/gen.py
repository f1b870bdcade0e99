# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

"""
Pair generator action.

Prints a seeded matrix pair `A`, `B` in the matrix text format: two matrices
separated by a blank line.
"""

import argparse
import sys
from dataclasses import dataclass

from loewner_lab.cli_io import progress
from loewner_lab.config import CampaignConfig, ConfigError, default_tolerance
from loewner_lab.genpairs import GenSpec, Relation, draw_pair
from loewner_lab.matrix_io import format_matrices
from loewner_lab.spectra import SpectralError


@dataclass(frozen=True)
class GenAction:
    """`gen` subcommand."""

    name: str = "gen"
    help: str = "Print a seeded matrix pair"
    requires_config: bool = False

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--dim", type=int, required=True, help="Matrix dimension (1..64)")
        parser.add_argument("--seed", type=int, required=True, help="Generator seed")
        parser.add_argument(
            "--relation",
            choices=[r.value for r in Relation],
            default=Relation.ORDERED.value,
            help="Relation between A and B (default: ordered)",
        )
        parser.add_argument("--condition-cap", type=float, default=1e4, help="Eigenvalue ratio cap (default: 1e4)")
        parser.add_argument("--gap", type=float, help="Minimum order margin of ordered pairs (default: 1e-3·‖B‖₂)")
        parser.add_argument("--zero-shift", action="store_true", help="Ordered mode only: emit A = B")
        parser.add_argument("--budget", type=int, default=100, help="Candidates for rejection sampling (default: 100)")

    def run(self, args: argparse.Namespace, config: CampaignConfig | None) -> None:
        """
        Execute the generator.

        Raises:
            ConfigError:
                If the generator parameters are invalid.
            SpectralError:
                If a rejection sampler exhausts its budget.
        """

        _ = config
        relation = Relation(args.relation)
        try:
            spec = GenSpec(
                dim=args.dim,
                seed=args.seed,
                condition_cap=args.condition_cap,
                gap=args.gap,
                zero_shift=bool(args.zero_shift),
            )
            pair = draw_pair(relation, spec, args.budget, default_tolerance())
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

        if pair is None:
            raise SpectralError(f"No {relation.value} pair found within {args.budget} candidate(s)")

        progress(f"Generated {relation.value} pair: dim {spec.dim}, seed {spec.seed}")
        sys.stdout.write(format_matrices(*pair))
