# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

"""
Campaign configuration loading and validation.

This module reads `campaign.yaml` (JSON is accepted as well, being a subset of
YAML), validates every key and resolves parameter grids so that the harness
can rely on a typed config object.
"""

import math
import os
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

import yaml

from loewner_lab.equations import (
    SOLVABLE_FIELDS,
    ConstraintError,
    EquationFamily,
    complete_params,
)
from loewner_lab.equations import validate as validate_equation
from loewner_lab.furuta import InequalityFamily, ParameterError, ParamSet, ValidationResult
from loewner_lab.furuta import validate as validate_inequality
from loewner_lab.orders import TolerancePolicy

FamilyTag = InequalityFamily | EquationFamily

# Fixed order of all families; a family's index is part of its PRNG stream key.
ALL_FAMILIES: tuple[FamilyTag, ...] = (*InequalityFamily, *EquationFamily)

REPORT_FORMATS = ("json", "csv", "ods")

DEFAULT_CONFIG_NAME = "campaign.yaml"

ENV_CONFIG = "LOEWNER_LAB_CONFIG"
ENV_TOL_REL = "LOEWNER_LAB_TOL_REL"
ENV_TOL_FLOOR = "LOEWNER_LAB_TOL_FLOOR"


class ConfigError(RuntimeError):
    """
    Raised when the configuration or other user input is missing, invalid, or
    cannot be parsed.
    """

    pass


@dataclass(frozen=True)
class GridEntry:
    """
    One parameter set of a campaign grid.

    Attributes:
        params:
            The parameters.
        allow_invalid:
            If True, the entry may violate the theorem's hypotheses; its
            failures are counted but never reported as violations.
    """

    params: ParamSet
    allow_invalid: bool = False


@dataclass(frozen=True)
class CampaignConfig:
    """
    Validated campaign configuration.

    Attributes:
        families:
            Families to check, in campaign order.
        dims:
            Matrix dimensions.
        trials:
            Random pairs per family and dimension.
        seed:
            Campaign seed.
        tolerance:
            Tolerance policy for every comparison.
        condition_cap:
            Condition cap of the pair generators.
        gap:
            Minimum order margin of ordered pairs; None uses the generator
            default `1e-3·‖B‖₂`.
        zero_shift:
            Generate every pair as `A = B`, where all margins are zero.
        param_grid:
            Explicit grid entries per family. Families without an entry use
            the harness defaults.
        outfile:
            Optional report path.
        format:
            Report format (`json`, `csv` or `ods`).
        config_path:
            File the config was read from, if any.
    """

    families: tuple[FamilyTag, ...]
    dims: tuple[int, ...] = (2, 3)
    trials: int = 20
    seed: int = 0
    tolerance: TolerancePolicy = field(default_factory=TolerancePolicy)
    condition_cap: float = 100.0
    gap: float | None = None
    zero_shift: bool = False
    param_grid: dict[FamilyTag, tuple[GridEntry, ...]] = field(default_factory=dict)
    outfile: Path | None = None
    format: str = "json"
    config_path: Path | None = None

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ConfigError("'trials' must be >= 1")
        for tag, entries in self.param_grid.items():
            for entry in entries:
                if not entry.allow_invalid and not validate_family(tag, entry.params).valid:
                    raise ConfigError(
                        f"param_grid.{tag.value}: {entry.params} violates the hypotheses; "
                        "set allow_invalid: true to keep it"
                    )


def parse_family(tag: str) -> FamilyTag:
    """
    Resolve a family tag.

    Raises:
        ConfigError:
            If the tag is unknown.
    """

    value = tag.strip().lower() if isinstance(tag, str) else tag
    for family in ALL_FAMILIES:
        if family.value == value:
            return family
    known = ", ".join(f.value for f in ALL_FAMILIES)
    raise ConfigError(f"Unknown family '{tag}'. Known families: {known}")


def family_code(family: FamilyTag) -> int:
    return ALL_FAMILIES.index(family)


def validate_family(family: FamilyTag, params: ParamSet) -> ValidationResult:
    """Dispatch to `furuta.validate` or `equations.validate`."""

    if isinstance(family, InequalityFamily):
        return validate_inequality(family, params)
    return validate_equation(family, params)


def default_tolerance() -> TolerancePolicy:
    """
    Return the default tolerance, honouring the environment overrides.

    Raises:
        ConfigError:
            If an environment override is not a positive number.
    """

    rel = _env_float(ENV_TOL_REL, TolerancePolicy.rel)
    floor = _env_float(ENV_TOL_FLOOR, TolerancePolicy.floor)
    return _tolerance(rel, floor, context="environment")


def _env_float(name: str, default: float) -> float:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        return float(raw)
    except ValueError as exc:
        raise ConfigError(f"{name} must be a number, got {raw!r}") from exc


def _tolerance(rel: Any, floor: Any, *, context: str) -> TolerancePolicy:
    try:
        return TolerancePolicy(rel=float(rel), floor=float(floor))
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"Invalid tolerance ({context}): {exc}") from exc


def find_config_path(cli_path: str | None) -> Path:
    """
    Determine which config file to use.

    Args:
        cli_path:
            Optional config path provided on the command line.

    Returns:
        `cli_path` if given, else `$LOEWNER_LAB_CONFIG` if set, else
        `./campaign.yaml` (not necessarily existing).
    """

    if cli_path:
        return Path(cli_path)

    env_path = os.environ.get(ENV_CONFIG)
    if env_path:
        return Path(env_path)

    return Path.cwd() / DEFAULT_CONFIG_NAME


def load_config(path: Path) -> CampaignConfig:
    """
    Load and validate a campaign configuration file.

    Args:
        path:
            Path to the YAML or JSON config file.

    Returns:
        A validated CampaignConfig instance.

    Raises:
        ConfigError:
            If the file is missing, unreadable, cannot be parsed, or contains
            invalid values.
    """

    if not path.exists():
        raise ConfigError(
            f"No {DEFAULT_CONFIG_NAME} found in current directory and no --config provided. "
            "Use the 'template' command to create one or pass --config PATH."
        )
    if not path.is_file():
        raise ConfigError(f"Config path is not a file: {path}")

    try:
        raw = yaml.safe_load(path.read_text(encoding="utf-8"))
    except Exception as exc:  # noqa: BLE001
        raise ConfigError(f"Failed to read config: {path}: {exc}") from exc

    if not isinstance(raw, dict):
        raise ConfigError("Config must contain a mapping at the top level")

    cfg = parse_config(raw, base_dir=path.parent.resolve())
    return replace(cfg, config_path=path.resolve())


def parse_config(raw: dict[str, Any], *, base_dir: Path | None = None) -> CampaignConfig:
    """
    Validate a raw config mapping.

    Args:
        raw:
            Parsed YAML/JSON mapping.
        base_dir:
            Directory relative paths are resolved against.

    Returns:
        A validated CampaignConfig.

    Raises:
        ConfigError:
            If a key is unknown or a value is invalid.
    """

    known = {
        "families",
        "dims",
        "trials",
        "seed",
        "tolerance",
        "condition_cap",
        "gap",
        "zero_shift",
        "param_grid",
        "outfile",
        "format",
    }
    unknown = sorted(str(k) for k in raw if k not in known)
    if unknown:
        raise ConfigError(f"Config contains unknown key(s): {', '.join(unknown)}")
    if "families" not in raw:
        raise ConfigError("Config is missing required key: families")

    families = _parse_families(raw.get("families"))
    dims = _parse_dims(raw.get("dims", list(CampaignConfig.dims)))

    trials = raw.get("trials", CampaignConfig.trials)
    if isinstance(trials, bool) or not isinstance(trials, int) or trials < 1:
        raise ConfigError("'trials' must be an integer >= 1")

    seed = raw.get("seed", CampaignConfig.seed)
    if isinstance(seed, bool) or not isinstance(seed, int):
        raise ConfigError("'seed' must be an integer")

    tolerance = _parse_tolerance(raw.get("tolerance"))

    cap = raw.get("condition_cap", CampaignConfig.condition_cap)
    if isinstance(cap, bool) or not isinstance(cap, (int, float)) or not math.isfinite(cap) or cap <= 1:
        raise ConfigError("'condition_cap' must be a number > 1")

    gap = raw.get("gap")
    if gap is not None and (
        isinstance(gap, bool) or not isinstance(gap, (int, float)) or not math.isfinite(gap) or gap < 0
    ):
        raise ConfigError("'gap' must be a number >= 0 if provided")

    zero_shift = raw.get("zero_shift", False)
    if not isinstance(zero_shift, bool):
        raise ConfigError("'zero_shift' must be true or false")

    param_grid = _parse_param_grid(raw.get("param_grid"), families)

    outfile = raw.get("outfile")
    outfile_path: Path | None = None
    if outfile is not None:
        if not isinstance(outfile, str) or not outfile.strip():
            raise ConfigError("'outfile' must be a non-empty string if provided")
        outfile_path = ((base_dir or Path.cwd()) / outfile).resolve()

    fmt = raw.get("format")
    if fmt is None:
        fmt = report_format_for(outfile_path)
    if fmt not in REPORT_FORMATS:
        raise ConfigError(f"'format' must be one of: {', '.join(REPORT_FORMATS)}")

    return CampaignConfig(
        families=families,
        dims=dims,
        trials=trials,
        seed=seed,
        tolerance=tolerance,
        condition_cap=float(cap),
        gap=None if gap is None else float(gap),
        zero_shift=zero_shift,
        param_grid=param_grid,
        outfile=outfile_path,
        format=fmt,
    )


def report_format_for(path: Path | None) -> str:
    """Guess the report format from a file suffix (JSON if unknown)."""

    if path is not None and path.suffix.lower().lstrip(".") in REPORT_FORMATS:
        return path.suffix.lower().lstrip(".")
    return "json"


def _parse_families(value: Any) -> tuple[FamilyTag, ...]:
    if value == "all":
        return ALL_FAMILIES
    if not isinstance(value, list):
        raise ConfigError("'families' must be a list of family tags or the string 'all'")

    families: list[FamilyTag] = []
    for item in value:
        family = parse_family(str(item))
        if family in families:
            raise ConfigError(f"Family listed twice: {family.value}")
        families.append(family)
    return tuple(families)


def _parse_dims(value: Any) -> tuple[int, ...]:
    if not isinstance(value, list) or not value:
        raise ConfigError("'dims' must be a non-empty list of integers")
    dims: list[int] = []
    for item in value:
        if isinstance(item, bool) or not isinstance(item, int) or not 1 <= item <= 64:
            raise ConfigError(f"Each dimension must be an integer in 1..64, got {item!r}")
        dims.append(item)
    return tuple(dims)


def _parse_tolerance(value: Any) -> TolerancePolicy:
    if value is None:
        return default_tolerance()
    if not isinstance(value, dict):
        raise ConfigError("'tolerance' must be a mapping with 'rel' and/or 'floor'")
    extra = sorted(str(k) for k in value if k not in ("rel", "floor"))
    if extra:
        raise ConfigError(f"tolerance contains unknown key(s): {', '.join(extra)}")
    base = default_tolerance()
    return _tolerance(value.get("rel", base.rel), value.get("floor", base.floor), context="tolerance")


def _parse_param_grid(value: Any, families: tuple[FamilyTag, ...]) -> dict[FamilyTag, tuple[GridEntry, ...]]:
    if value is None:
        return {}
    if not isinstance(value, dict):
        raise ConfigError("'param_grid' must be a mapping from family tag to a list of parameter sets")

    grid: dict[FamilyTag, tuple[GridEntry, ...]] = {}
    for tag, entries in value.items():
        family = parse_family(str(tag))
        if family not in families:
            raise ConfigError(f"param_grid names family '{family.value}' which is not in 'families'")
        if not isinstance(entries, list) or not entries:
            raise ConfigError(f"param_grid.{family.value} must be a non-empty list")
        grid[family] = tuple(
            parse_grid_entry(family, entry, context=f"param_grid.{family.value}[{idx}]")
            for idx, entry in enumerate(entries, start=1)
        )
    return grid


def parse_grid_entry(family: FamilyTag, value: Any, *, context: str) -> GridEntry:
    """
    Parse one grid entry.

    Entries are mappings (`{p: 2, q: 2, r: 0}`) or strings (`"p=2,q=2,r=0"`);
    mappings may carry `allow_invalid: true`. For equation families an entry
    that leaves exactly one of the solvable fields open is completed through
    `equations.complete_params`.

    Raises:
        ConfigError:
            If the entry cannot be parsed, completed or validated.
    """

    allow_invalid = False
    try:
        if isinstance(value, str):
            params = ParamSet.parse(value)
        elif isinstance(value, dict):
            values = dict(value)
            flag = values.pop("allow_invalid", False)
            if not isinstance(flag, bool):
                raise ConfigError(f"{context}: allow_invalid must be a boolean")
            allow_invalid = flag
            params = ParamSet.from_mapping(values)
        else:
            raise ConfigError(f"{context}: expected a mapping or a 'name=value,...' string")

        if isinstance(family, EquationFamily):
            open_fields = [name for name in SOLVABLE_FIELDS[family.kind] if getattr(params, name) is None]
            if len(open_fields) == 1:
                params = complete_params(family, params)

        validity = validate_family(family, params)
    except (ParameterError, ConstraintError) as exc:
        raise ConfigError(f"{context}: {exc}") from exc

    if not validity.valid and not allow_invalid:
        raise ConfigError(
            f"{context}: {params} violates {'; '.join(validity.violations)} (set allow_invalid: true to keep it)"
        )
    return GridEntry(params=params, allow_invalid=allow_invalid)
