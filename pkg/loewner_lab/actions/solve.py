# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

"""
Single-instance action.

Solves one operator equation (or evaluates one inequality) on matrices read
from files and prints the result as JSON.
"""

import argparse
import json
import sys
from dataclasses import dataclass

from loewner_lab.actions.base import parse_params_arg, read_operand
from loewner_lab.cli_io import progress, warn
from loewner_lab.config import CampaignConfig, ConfigError, default_tolerance, parse_family
from loewner_lab.equations import (
    SOLVABLE_FIELDS,
    ConstraintError,
    EquationFamily,
    complete_params,
    solve,
)
from loewner_lab.furuta import ParameterError, evaluate


@dataclass(frozen=True)
class SolveAction:
    """`solve` subcommand."""

    name: str = "solve"
    help: str = "Solve one operator equation (or evaluate one inequality) and print JSON"
    requires_config: bool = False

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--family", required=True, help="Equation or inequality family tag")
        parser.add_argument("--A", dest="a_path", required=True, help="File holding the matrix A")
        parser.add_argument("--B", dest="b_path", required=True, help="File holding the matrix B")
        parser.add_argument(
            "--params",
            required=True,
            help="Parameters, e.g. p=3,t=0,r=1,s=1. For equations one of s/n/p may be left out.",
        )
        parser.add_argument(
            "--no-solution",
            action="store_true",
            help="Leave the solution matrix out of the JSON output",
        )

    def run(self, args: argparse.Namespace, config: CampaignConfig | None) -> None:
        """
        Execute the solver.

        Raises:
            ConfigError:
                If the family, parameters or matrices are invalid.
        """

        _ = config
        family = parse_family(args.family)
        params = parse_params_arg(args.params)
        a = read_operand(args.a_path, name="A")
        b = read_operand(args.b_path, name="B")
        tol = default_tolerance()

        try:
            if isinstance(family, EquationFamily):
                open_fields = [f for f in SOLVABLE_FIELDS[family.kind] if getattr(params, f) is None]
                if len(open_fields) == 1:
                    params = complete_params(family, params)
                    progress(f"Completed parameters: {params}")
                report = solve(family, a, b, params, tol)
                payload = report.to_dict(include_solution=not args.no_solution)
            else:
                evaluation = evaluate(family, a, b, params, tol)
                if not evaluation.validation.valid:
                    warn(f"parameters violate {'; '.join(evaluation.validation.violations)}; no theorem guarantee")
                payload = {
                    "family": family.value,
                    "params": params.as_dict(),
                    "valid": evaluation.validation.valid,
                    "violations": list(evaluation.validation.violations),
                    **evaluation.verdict.to_dict(),
                }
        except (ParameterError, ConstraintError) as exc:
            raise ConfigError(str(exc)) from exc

        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
