# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

"""
Template configuration generator.

This action writes a ready-to-edit `campaign.yaml` file into the current
directory (or a user-specified path).
"""

import argparse
from dataclasses import dataclass
from pathlib import Path

from loewner_lab.cli_io import progress
from loewner_lab.config import CampaignConfig, ConfigError


@dataclass(frozen=True)
class TemplateAction:
    """
    `template` subcommand.

    This action does not require a config because it produces one.
    """

    name: str = "template"
    help: str = "Write a template campaign.yaml config"
    requires_config: bool = False

    _TEMPLATE_YAML: str = "\n".join(
        [
            "# Families to check. Use the string 'all' for every family.",
            "# Inequalities: furuta_b, furuta_a, grand_furuta, complete_form,",
            "#   order_sandwich, chaotic_sandwich, lowner_heinz",
            "# Equations: order_forward, order_dual, chaotic_forward, chaotic_dual,",
            "#   complete_square(_dual), complete_large_r(_dual), complete_root(_dual)",
            "families: [furuta_b, furuta_a, order_forward, chaotic_forward]",
            "",
            "# Matrix dimensions (1..64) and random pairs per family and dimension",
            "dims: [1, 2, 3]",
            "trials: 20",
            "",
            "# Campaign seed; identical seeds give identical reports",
            "seed: 0",
            "",
            "# Optional: tolerance of every comparison (defaults shown).",
            "# LOEWNER_LAB_TOL_REL / LOEWNER_LAB_TOL_FLOOR override the defaults.",
            "# tolerance:",
            "#   rel: 1.0e-8",
            "#   floor: 1.0e-12",
            "",
            "# Eigenvalue ratio cap of the pair generators",
            "condition_cap: 100",
            "",
            "# Optional: minimum order margin of ordered pairs (default: 1e-3·‖B‖₂).",
            "# gap: 0.0",
            "# Optional: generate every pair as A = B; all margins are then zero.",
            "# zero_shift: false",
            "",
            "# Optional: parameter sets per family. Families without an entry use",
            "# built-in grids that satisfy the hypotheses of their theorem.",
            "# Entries are mappings or 'name=value,...' strings; values may be fractions.",
            "param_grid:",
            "  furuta_b:",
            "    - {p: 2, q: 2, r: 0}",
            "    - p=3,q=2,r=1",
            "    # Entries violating the hypotheses must be flagged. Their failures",
            "    # are counted but never reported as violations.",
            "    - {p: 5, q: 1, r: 0, allow_invalid: true}",
            "  order_forward:",
            "    # Leave exactly one of s, n, p open to have it solved from the",
            "    # exponent constraint.",
            "    - {p: 3, t: 0, r: 1, s: 1}",
            "    - p=2,t=0,r=0,s=1/2,n=0",
            "",
            "# Optional: report file; the format follows the suffix (json, csv, ods)",
            "# unless 'format' is given. Without outfile the report goes to stdout.",
            "outfile: report.json",
            "# format: json",
            "",
        ]
    )

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """
        Register CLI arguments for the `template` subcommand.

        Args:
            parser:
                Subparser for this command.

        Returns:
            None
        """

        parser.add_argument(
            "path",
            nargs="?",
            default="campaign.yaml",
            help="Destination path for the template (default: ./campaign.yaml)",
        )
        parser.add_argument(
            "-f",
            "--force",
            action="store_true",
            help="Allow overwriting an existing file",
        )

    def run(self, args: argparse.Namespace, config: CampaignConfig | None) -> None:
        """
        Execute the template writer.

        Raises:
            ConfigError:
                If the destination exists and `--force` is not set.
        """

        _ = config
        dest = Path(args.path)
        self._write_template(dest, force=bool(args.force))
        progress(f"Wrote template config to: {dest}")

    def _write_template(self, dest: Path, *, force: bool) -> None:
        if dest.exists() and not force:
            raise ConfigError(f"Refusing to overwrite existing file: {dest} (use --force)")

        dest.parent.mkdir(parents=True, exist_ok=True)
        dest.write_text(self._TEMPLATE_YAML, encoding="utf-8")
