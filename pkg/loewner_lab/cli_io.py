# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

"""
Small CLI interaction helpers.

These helpers centralize terminal interaction behavior so actions can stay
focused on their core job.

Stdout is reserved for machine-readable payloads (reports, matrices, CSV), so
progress lines and warnings go to stderr. Overwriting files follows a
safety-first approach:
- In interactive terminals, actions may prompt the user for confirmation.
- In non-interactive contexts (CI, pipes), actions require an explicit `--force`.
"""

import sys
from pathlib import Path

from loewner_lab.config import ConfigError


def progress(message: str) -> None:
    """Print a progress line to stderr."""

    print(message, file=sys.stderr, flush=True)


def warn(message: str) -> None:
    """Print a `WARNING:` line to stderr."""

    print(f"WARNING: {message}", file=sys.stderr, flush=True)


def is_interactive_tty() -> bool:
    """
    Determine whether we can safely prompt the user.

    Returns:
        True if both stdin and stderr are connected to a TTY.
    """

    try:
        return sys.stdin.isatty() and sys.stderr.isatty()
    except Exception:  # noqa: BLE001
        return False


def prompt_yes_no(question: str, *, default_no: bool = True) -> bool:
    """
    Ask the user a yes/no question on stderr.

    Args:
        question:
            Prompt text without the trailing choice suffix.
        default_no:
            If true, empty input is treated as "no".

    Returns:
        True if the user answered yes.

    Raises:
        RuntimeError:
            If the prompt cannot be shown in a non-interactive session.
    """

    if not is_interactive_tty():
        raise RuntimeError("Cannot prompt in non-interactive mode")

    suffix = "[y/N]" if default_no else "[Y/n]"
    while True:
        print(f"{question} {suffix} ", end="", file=sys.stderr, flush=True)
        answer = sys.stdin.readline().strip().lower()
        if not answer:
            return not default_no
        if answer in {"y", "yes"}:
            return True
        if answer in {"n", "no"}:
            return False


def prompt_overwrite(path: Path) -> bool:
    """
    Ask the user whether to overwrite an existing file.

    Args:
        path:
            The file path that would be overwritten.

    Returns:
        True if the user agreed to overwrite.
    """

    return prompt_yes_no(f"Output file already exists: {path}. Overwrite?", default_no=True)


def confirm_overwrite(path: Path, *, force: bool) -> bool:
    """
    Decide whether an output file may be written.

    Returns:
        True if `path` does not exist, `force` is set, or the user agreed.

    Raises:
        ConfigError:
            If the file exists, `force` is not set and no prompt is possible.
    """

    if not path.exists() or force:
        return True
    if not is_interactive_tty():
        raise ConfigError(
            f"Output file already exists: {path}. Refusing to overwrite in non-interactive mode. "
            "Use --force to overwrite."
        )
    return prompt_overwrite(path)
