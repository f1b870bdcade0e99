# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

"""
Margin surface action.

Evaluates an inequality over a grid of two parameters and prints the margins
as CSV (one row per grid node, row-major).
"""

import argparse
import csv
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from loewner_lab.actions.base import parse_params_arg, read_operand
from loewner_lab.config import CampaignConfig, ConfigError, default_tolerance, parse_family
from loewner_lab.furuta import InequalityFamily, ParameterError, margin_surface


def parse_axis(text: str, *, option: str) -> tuple[str, tuple[float, ...]]:
    """
    Parse an axis such as `p=1:3:5` (5 evenly spaced values from 1 to 3).

    Raises:
        ConfigError:
            If the axis is malformed.
    """

    name, sep, spec = text.partition("=")
    parts = spec.split(":")
    if not sep or not name.strip() or len(parts) != 3:
        raise ConfigError(f"{option} must look like name=start:stop:count, got {text!r}")
    try:
        start, stop = (float(Fraction(p.strip())) for p in parts[:2])
        count = int(parts[2])
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"{option}: {exc}") from exc
    if count < 1:
        raise ConfigError(f"{option}: count must be >= 1")
    return name.strip(), tuple(float(v) for v in np.linspace(start, stop, count))


@dataclass(frozen=True)
class SurfaceAction:
    """`surface` subcommand."""

    name: str = "surface"
    help: str = "Print the margin surface of an inequality over two parameters as CSV"
    requires_config: bool = False

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--family", required=True, help="Inequality family tag")
        parser.add_argument("--A", dest="a_path", required=True, help="File holding the matrix A")
        parser.add_argument("--B", dest="b_path", required=True, help="File holding the matrix B")
        parser.add_argument("--params", default="", help="Values of the parameters that are not on the grid")
        parser.add_argument("--row", required=True, help="Row axis, e.g. p=1:4:7")
        parser.add_argument("--col", required=True, help="Column axis, e.g. q=1:3:5")
        parser.add_argument("--workers", type=int, default=1, help="Worker threads (default: 1)")

    def run(self, args: argparse.Namespace, config: CampaignConfig | None) -> None:
        """
        Execute the surface evaluation.

        Raises:
            ConfigError:
                If an argument is invalid or the family is not an inequality.
        """

        _ = config
        family = parse_family(args.family)
        if not isinstance(family, InequalityFamily):
            raise ConfigError(f"surface needs an inequality family, got {family.value}")
        base = parse_params_arg(args.params)
        row = parse_axis(args.row, option="--row")
        col = parse_axis(args.col, option="--col")
        a = read_operand(args.a_path, name="A")
        b = read_operand(args.b_path, name="B")

        try:
            surface = margin_surface(family, a, b, base, row, col, default_tolerance(), workers=max(1, args.workers))
        except ParameterError as exc:
            raise ConfigError(str(exc)) from exc

        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow([surface.row_field, surface.col_field, "margin"])
        for record in surface.rows():
            writer.writerow([record[surface.row_field], record[surface.col_field], record["margin"]])
