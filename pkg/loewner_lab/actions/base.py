# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

"""
Shared action interface.

Actions implement a small protocol so the CLI can dynamically register arguments
and dispatch execution based on the selected subcommand. The helpers below turn
user input errors into ConfigError so that they map to the usage exit code.
"""

import argparse
from pathlib import Path
from typing import Protocol

from loewner_lab.config import CampaignConfig, ConfigError
from loewner_lab.furuta import ParameterError, ParamSet
from loewner_lab.matrix_io import ParserError, read_matrix
from loewner_lab.spectra import HermitianMatrix


class Action(Protocol):
    """
    Interface for a CLI action (subcommand).

    Implementations are expected to:
    - Provide a `name` used as the subcommand.
    - Provide a short `help` string for `--help`.
    - Declare whether they require a valid campaign config.
    """

    name: str
    help: str
    requires_config: bool

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """
        Register action-specific CLI arguments.

        Args:
            parser:
                The subparser dedicated to this action.

        Returns:
            None
        """

    def run(self, args: argparse.Namespace, config: CampaignConfig | None) -> None:
        """
        Execute the action.

        Args:
            args:
                Parsed arguments for this subcommand.
            config:
                Loaded configuration, if `requires_config` is True.

        Returns:
            None
        """


def read_operand(path: str, *, name: str) -> HermitianMatrix:
    """
    Read a single matrix operand given on the command line.

    Raises:
        ConfigError:
            If the file cannot be read or parsed.
    """

    try:
        return read_matrix(Path(path))
    except ParserError as exc:
        raise ConfigError(f"Invalid matrix {name}: {exc}") from exc


def parse_params_arg(text: str | None) -> ParamSet:
    """
    Parse a `--params` argument such as `p=2,r=1/3`.

    Raises:
        ConfigError:
            If the string is malformed.
    """

    try:
        return ParamSet.parse(text or "")
    except ParameterError as exc:
        raise ConfigError(f"Invalid --params: {exc}") from exc


def parse_int_list(text: str, *, option: str) -> tuple[int, ...]:
    """Parse a comma-separated list of integers such as `2,3`."""

    try:
        values = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise ConfigError(f"{option} must be a comma-separated list of integers, got {text!r}") from exc
    if not values:
        raise ConfigError(f"{option} must not be empty")
    return values
