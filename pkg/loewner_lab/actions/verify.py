# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

"""
Verification campaign action.

Runs a campaign from `campaign.yaml` (or the built-in default campaign),
writes the report and exits with a violation error if a valid-parameter grid
entry failed. Violating instances are dumped in full so they can be replayed.
"""

import argparse
import sys
from dataclasses import dataclass, replace
from pathlib import Path

from loewner_lab.actions.base import parse_int_list
from loewner_lab.cli_io import confirm_overwrite, progress, warn
from loewner_lab.config import (
    REPORT_FORMATS,
    CampaignConfig,
    ConfigError,
    default_tolerance,
    report_format_for,
)
from loewner_lab.harness import (
    CampaignReport,
    default_campaign,
    emit_report,
    render_report,
    require_no_violations,
    run_campaign,
)
from loewner_lab.matrix_io import format_matrices
from loewner_lab.yaml_io import write_yaml_mapping


@dataclass(frozen=True)
class VerifyAction:
    """
    `verify` subcommand.

    With `--default-campaign` no config is loaded and every family runs on
    its built-in grid.
    """

    name: str = "verify"
    help: str = "Run a verification campaign"
    requires_config: bool = True

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """
        Register CLI arguments for the `verify` subcommand.

        Args:
            parser:
                Subparser for this command.

        Returns:
            None
        """

        parser.add_argument(
            "--default-campaign",
            action="store_true",
            help="Check every family on its built-in parameter grid instead of reading a config",
        )
        parser.add_argument("--seed", type=int, help="Override the campaign seed")
        parser.add_argument("--trials", type=int, help="Override the number of trials")
        parser.add_argument("--dims", help="Override the dimensions, e.g. 1,2,3")
        parser.add_argument("-o", "--output", help="Report file (default: outfile from the config, else stdout)")
        parser.add_argument("--format", choices=REPORT_FORMATS, help="Report format (default: from the file suffix)")
        parser.add_argument(
            "--no-wall-time",
            action="store_true",
            help="Leave the wall time out of the report, making it byte-stable across runs",
        )
        parser.add_argument("--dump", help="Write all violating instances to this YAML file")
        parser.add_argument("--workers", type=int, default=1, help="Worker threads (default: 1)")
        parser.add_argument(
            "-f",
            "--force",
            action="store_true",
            help="Overwrite the report file if it already exists",
        )

    def run(self, args: argparse.Namespace, config: CampaignConfig | None) -> None:
        """
        Execute the campaign.

        Raises:
            ConfigError:
                If the config is invalid or the report cannot be written.
            CampaignViolation:
                If a valid-parameter grid entry failed.
        """

        if args.default_campaign:
            cfg = default_campaign(tolerance=default_tolerance())
        elif config is not None:
            cfg = config
        else:
            raise ConfigError("verify needs a config (or --default-campaign)")

        if args.seed is not None:
            cfg = replace(cfg, seed=args.seed)
        if args.trials is not None:
            if args.trials < 1:
                raise ConfigError("--trials must be >= 1")
            cfg = replace(cfg, trials=args.trials)
        if args.dims:
            cfg = replace(cfg, dims=parse_int_list(args.dims, option="--dims"))
        if args.workers < 1:
            raise ConfigError("--workers must be >= 1")

        outfile = Path(args.output) if args.output else cfg.outfile
        fmt = args.format or (report_format_for(outfile) if args.output else cfg.format)
        if outfile is None and fmt == "ods":
            raise ConfigError("ODS reports need an output file (--output)")
        if outfile is not None and not confirm_overwrite(outfile, force=bool(args.force)):
            progress(f"Keeping existing file: {outfile}")
            return

        progress(
            f"Running campaign: {len(cfg.families)} famil{'y' if len(cfg.families) == 1 else 'ies'}, "
            f"dims {list(cfg.dims)}, {cfg.trials} trial(s), seed {cfg.seed}"
        )
        report = run_campaign(cfg, progress=progress, workers=args.workers)

        include_wall_time = not args.no_wall_time
        if outfile is None:
            sys.stdout.write(render_report(report, fmt, include_wall_time=include_wall_time))
        else:
            emit_report(report, outfile, fmt, include_wall_time=include_wall_time)
            progress(f"Wrote {fmt} report: {outfile}")

        for stats in report.families:
            if stats.errors:
                warn(f"{stats.family}: {stats.errors} instance(s) raised, e.g. {stats.error_messages[0]}")

        if report.violation_count:
            self._dump(report, Path(args.dump) if args.dump else None)
        require_no_violations(report)

    def _dump(self, report: CampaignReport, dest: Path | None) -> None:
        worst = min(report.violations, key=lambda v: v.margin)
        warn(f"worst violation {worst.fingerprint.to_dict()} margin {worst.margin:.6e}")
        sys.stderr.write("A:\n" + format_matrices(worst.a) + "B:\n" + format_matrices(worst.b))
        if dest is not None:
            write_yaml_mapping(dest, {"violations": [v.to_dict() for v in report.violations]})
            progress(f"Wrote {report.violation_count} violating instance(s) to: {dest}")
