# Loewner Lab
# © 2026 Loewner Lab contributors
#
# This source code is licensed under the BSD 3-Clause License found in the
# LICENSE file in the root directory of this source tree.

from __future__ import annotations

"""
Verification campaigns and counterexample search.

A campaign runs every configured family over dims × trials random pairs in the
relation the family's theorem assumes, and every parameter set of its grid.
Each trial draws from its own PRNG stream keyed by `(family, dim, trial)`, so
reports do not depend on the number of worker threads. Numeric failures are
recorded per instance and never abort a campaign.
"""

import csv
import io
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from loewner_lab.config import (
    ALL_FAMILIES,
    CampaignConfig,
    ConfigError,
    FamilyTag,
    GridEntry,
    family_code,
    parse_family,
    validate_family,
)
from loewner_lab.equations import (
    ConstraintError,
    EquationFamily,
    chaotic_witness_params,
    contraction_limit,
    integer_chaotic_params,
    require_well_posed,
    solve,
    symmetric_chaotic_params,
)
from loewner_lab.furuta import InequalityFamily, ParameterError, ParamSet, evaluate
from loewner_lab.genpairs import GenSpec, Relation, draw_pair
from loewner_lab.hash_utils import matrix_digest
from loewner_lab.orders import DEFAULT_TOLERANCE, TolerancePolicy
from loewner_lab.report_ods import write_ods
from loewner_lab.spectra import HermitianMatrix, SpectralError

ProgressFn = Callable[[str], None]

# Candidates a rejection sampler may draw for one trial.
PAIR_BUDGET = 200

# First key of search streams; campaign streams start with a family code.
SEARCH_STREAM = 1_000_003

REPORT_COLUMNS = (
    "family",
    "checked",
    "held",
    "failed",
    "errors",
    "worst_margin",
    "residual_max",
    "residual_mean",
)


class CampaignViolation(RuntimeError):
    """Raised when a campaign over valid parameters found failures."""

    pass


_INEQUALITY_GRIDS: dict[InequalityFamily, tuple[ParamSet, ...]] = {
    InequalityFamily.FURUTA_B: tuple(
        ParamSet(p=p, q=q, r=r)
        for p, q, r in [(2, 2, 0), (1, 1, 0), (2, 1.5, 1), (3, 2, 1), (0.5, 1, 0), (4, 2.5, 1), (2, 1.5, 2), (1.5, 1.25, 1)]
    ),
    InequalityFamily.GRAND_FURUTA: tuple(
        ParamSet(p=p, s=s, t=t, r=r)
        for p, s, t, r in [(1, 1, 0, 0), (2, 1, 0, 1), (2, 2, 0.5, 0.5), (1.5, 1, 1, 1), (3, 1.5, 0.25, 1), (2, 1, 1, 2)]
    ),
    InequalityFamily.COMPLETE_FORM: tuple(
        ParamSet(p=p, p0=p0, r=r) for p, p0, r in [(3, 1, 1), (2, 0.5, 0.5), (1, 0, 1), (4, 1, 2), (1.5, 1, 0)]
    ),
    InequalityFamily.ORDER_SANDWICH: tuple(
        ParamSet(p=p, t=t, r=r, s=s)
        for p, t, r, s in [(1, 0, 0, 1), (2, 0, 1, 0.5), (2, 1, 1, 1), (3, 0.5, 0, 1), (1.5, 1, 0.5, 0.9), (2, 0, 0, 0.5)]
    ),
    InequalityFamily.CHAOTIC_SANDWICH: tuple(
        ParamSet(p=p, t=t, r=r, s=s) for p, t, r, s in [(1, 0, 1, 1), (2, 1, 1, 1), (0.5, 1, 0.5, 1), (1, 0.5, 0, 1), (3, 0, 2, 0.5)]
    ),
    InequalityFamily.LOWNER_HEINZ: tuple(ParamSet(alpha=a) for a in (0.0, 0.25, 0.5, 0.75, 1.0)),
}
_INEQUALITY_GRIDS[InequalityFamily.FURUTA_A] = _INEQUALITY_GRIDS[InequalityFamily.FURUTA_B]

_EQUATION_GRIDS: dict[str, tuple[ParamSet, ...]] = {
    "order": tuple(
        ParamSet(p=p, t=t, r=r, s=s, n=n)
        for p, t, r, s, n in [(2, 0, 0, 0.5, 0), (3, 0, 1, 1, 1), (1, 0, 0, 1, 0), (2, 1, 1, 5 / 3, 1), (2, 0.5, 0.5, 0.6, 0)]
    ),
    "chaotic": (
        ParamSet(p=1, t=0, r=1, s=1, n=1),
        symmetric_chaotic_params(2.0, 1.0),
        integer_chaotic_params(2, 3),
        ParamSet(p=1, t=0, r=0.5, s=1, n=2),
        chaotic_witness_params(64),
    ),
    "complete_square": tuple(
        ParamSet(p0=p0, r=r, n=n, p=(n + 1) * (2 * p0 + 2 * r) - r)
        for p0, r, n in [(0, 1, 0), (0.5, 0.5, 0), (0.25, 0.5, 1), (0, 0.5, 1)]
    ),
    "complete_large_r": tuple(
        ParamSet(p0=p0, r=r, n=n, p=(n + 1) * (2 * p0 + 1 + r) - r) for p0, r, n in [(0, 1, 0), (0.5, 1, 0), (0, 2, 0), (0, 1, 1)]
    ),
    "complete_root": tuple(
        ParamSet(p0=p0, p=p, r=r, n=n) for p0, p, r, n in [(0.5, 1, 0, 1), (0, 1, 1, 1), (1, 2, 1, 2), (0.5, 1.5, 0.5, 1), (1, 2, 0, 1)]
    ),
}


def default_grid(family: FamilyTag) -> tuple[ParamSet, ...]:
    """Built-in parameter sets of a family; all satisfy its hypotheses."""

    if isinstance(family, InequalityFamily):
        return _INEQUALITY_GRIDS[family]
    return _EQUATION_GRIDS[family.kind]


def grid_for(cfg: CampaignConfig, family: FamilyTag) -> tuple[GridEntry, ...]:
    """Configured grid of a family, falling back to the built-in one."""

    configured = cfg.param_grid.get(family)
    if configured:
        return configured
    return tuple(GridEntry(params=p) for p in default_grid(family))


def default_campaign(
    *,
    seed: int = 0,
    trials: int = 20,
    dims: tuple[int, ...] = (1, 2, 3, 4),
    tolerance: TolerancePolicy = DEFAULT_TOLERANCE,
) -> CampaignConfig:
    """Every family on its built-in grid."""

    return CampaignConfig(families=ALL_FAMILIES, dims=dims, trials=trials, seed=seed, tolerance=tolerance)


def relation_for(family: FamilyTag, dim: int) -> Relation:
    """Pair relation a family's theorem assumes; chaotic-only pairs do not exist at dim 1."""

    if family.hypothesis == "chaotic" and dim >= 2:
        return Relation.CHAOTIC
    return Relation.ORDERED


@dataclass(frozen=True)
class Fingerprint:
    """
    Everything needed to regenerate and re-evaluate one instance.

    Attributes:
        family:
            Family tag.
        params:
            Parameters of the instance.
        seed:
            Generator seed.
        dim:
            Matrix dimension.
        stream:
            PRNG stream key.
        condition_cap:
            Generator condition cap.
        relation:
            Generated pair relation.
        digest:
            MD5 of the pair's bits.
        gap:
            Minimum order margin of ordered pairs, None for the default.
        zero_shift:
            Whether ordered pairs were generated as `A = B`.
    """

    family: str
    params: dict[str, float | int]
    seed: int
    dim: int
    stream: tuple[int, ...]
    condition_cap: float
    relation: str
    digest: str = ""
    gap: float | None = None
    zero_shift: bool = False

    def spec(self) -> GenSpec:
        return GenSpec(
            dim=self.dim,
            seed=self.seed,
            condition_cap=self.condition_cap,
            gap=self.gap,
            stream=self.stream,
            zero_shift=self.zero_shift,
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "params": dict(self.params),
            "seed": self.seed,
            "dim": self.dim,
            "stream": list(self.stream),
            "condition_cap": self.condition_cap,
            "relation": self.relation,
            "digest": self.digest,
            "gap": self.gap,
            "zero_shift": self.zero_shift,
        }

    @classmethod
    def from_dict(cls, raw: dict[str, Any]) -> Fingerprint:
        """
        Rebuild a fingerprint from its dict form.

        Raises:
            ConfigError:
                If a key is missing or malformed.
        """

        try:
            return cls(
                family=parse_family(str(raw["family"])).value,
                params=dict(raw["params"]),
                seed=int(raw["seed"]),
                dim=int(raw["dim"]),
                stream=tuple(int(k) for k in raw["stream"]),
                condition_cap=float(raw["condition_cap"]),
                relation=Relation(str(raw["relation"])).value,
                digest=str(raw.get("digest", "")),
                gap=None if raw.get("gap") is None else float(raw["gap"]),
                zero_shift=bool(raw.get("zero_shift", False)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"Malformed instance fingerprint: {exc}") from exc


@dataclass(frozen=True)
class InstanceOutcome:
    """
    Result of one family evaluation on one pair.

    For equation families the margin is `1 − ‖S‖`, so it is negative exactly
    when the solution is not a contraction.
    """

    held: bool
    margin: float
    clear_failure: bool
    residual: float | None = None


def evaluate_instance(
    family: FamilyTag,
    a: HermitianMatrix,
    b: HermitianMatrix,
    params: ParamSet,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
    *,
    check_ranges: bool = True,
) -> InstanceOutcome:
    """
    Evaluate an inequality or solve an equation and reduce it to a margin.

    `check_ranges=False` lets equations be solved outside their hypotheses;
    inequalities are always evaluated.
    """

    if isinstance(family, InequalityFamily):
        verdict = evaluate(family, a, b, params, tol).verdict
        return InstanceOutcome(held=verdict.holds, margin=verdict.margin, clear_failure=verdict.clear_failure)

    report = solve(family, a, b, params, tol, check_ranges=check_ranges)
    margin = 1.0 - report.norm
    slack = contraction_limit(tol) - 1.0
    return InstanceOutcome(
        held=report.contraction,
        margin=margin,
        clear_failure=margin < -10.0 * slack,
        residual=report.equation_residual,
    )


@dataclass(frozen=True)
class Violation:
    """A failed instance of a valid-parameter grid entry, with its pair."""

    fingerprint: Fingerprint
    margin: float
    a: HermitianMatrix
    b: HermitianMatrix

    def to_dict(self) -> dict[str, Any]:
        return {
            "fingerprint": self.fingerprint.to_dict(),
            "margin": self.margin,
            "A": self.a.to_list(),
            "B": self.b.to_list(),
        }


@dataclass(frozen=True)
class FamilyStats:
    """
    Aggregated counts of one family.

    `checked == held + failed`; instances that raised are counted in `errors`
    only.
    """

    family: str
    checked: int = 0
    held: int = 0
    failed: int = 0
    errors: int = 0
    worst_margin: float | None = None
    worst_instance: dict[str, Any] | None = None
    residual_max: float | None = None
    residual_mean: float | None = None
    error_messages: tuple[str, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "checked": self.checked,
            "held": self.held,
            "failed": self.failed,
            "errors": self.errors,
            "worst_margin": self.worst_margin,
            "worst_instance": self.worst_instance,
            "residual_max": self.residual_max,
            "residual_mean": self.residual_mean,
            "error_messages": list(self.error_messages),
        }

    @classmethod
    def from_dict(cls, raw: dict[str, Any]) -> FamilyStats:
        return cls(
            family=str(raw["family"]),
            checked=int(raw["checked"]),
            held=int(raw["held"]),
            failed=int(raw["failed"]),
            errors=int(raw.get("errors", 0)),
            worst_margin=raw.get("worst_margin"),
            worst_instance=raw.get("worst_instance"),
            residual_max=raw.get("residual_max"),
            residual_mean=raw.get("residual_mean"),
            error_messages=tuple(raw.get("error_messages") or ()),
        )


@dataclass(frozen=True)
class CampaignReport:
    seed: int
    families: tuple[FamilyStats, ...] = ()
    violations: tuple[Violation, ...] = ()
    violation_count: int = 0
    wall_time: float | None = None

    def stats(self, family: FamilyTag | str) -> FamilyStats:
        tag = family if isinstance(family, str) else family.value
        for entry in self.families:
            if entry.family == tag:
                return entry
        raise KeyError(tag)

    def to_dict(self, *, include_wall_time: bool = True) -> dict[str, Any]:
        out: dict[str, Any] = {
            "seed": self.seed,
            "families": [f.to_dict() for f in self.families],
            "violation_count": self.violation_count,
            "violations": [v.fingerprint.to_dict() | {"margin": v.margin} for v in self.violations],
        }
        if include_wall_time and self.wall_time is not None:
            out["wall_time"] = self.wall_time
        return out

    @classmethod
    def from_dict(cls, raw: dict[str, Any]) -> CampaignReport:
        """Rebuild the counts of a report; violation pairs are not part of the JSON form."""

        return cls(
            seed=int(raw["seed"]),
            families=tuple(FamilyStats.from_dict(f) for f in raw.get("families", [])),
            violation_count=int(raw.get("violation_count", 0)),
            wall_time=raw.get("wall_time"),
        )


@dataclass(frozen=True)
class _TrialResult:
    outcomes: tuple[tuple[GridEntry, Fingerprint, InstanceOutcome | str], ...] = ()
    pair: tuple[HermitianMatrix, HermitianMatrix] | None = None
    error: str | None = None


@dataclass
class _Accumulator:
    family: FamilyTag
    checked: int = 0
    held: int = 0
    failed: int = 0
    errors: int = 0
    worst_margin: float | None = None
    worst_instance: dict[str, Any] | None = None
    residuals: list[float] = field(default_factory=list)
    error_messages: list[str] = field(default_factory=list)

    def add_error(self, message: str) -> None:
        self.errors += 1
        if message not in self.error_messages:
            self.error_messages.append(message)

    def add(self, fingerprint: Fingerprint, outcome: InstanceOutcome) -> None:
        self.checked += 1
        if outcome.held:
            self.held += 1
        else:
            self.failed += 1
        if self.worst_margin is None or outcome.margin < self.worst_margin:
            self.worst_margin = outcome.margin
            self.worst_instance = fingerprint.to_dict()
        if outcome.residual is not None:
            self.residuals.append(outcome.residual)

    def freeze(self) -> FamilyStats:
        return FamilyStats(
            family=self.family.value,
            checked=self.checked,
            held=self.held,
            failed=self.failed,
            errors=self.errors,
            worst_margin=self.worst_margin,
            worst_instance=self.worst_instance,
            residual_max=max(self.residuals) if self.residuals else None,
            residual_mean=sum(self.residuals) / len(self.residuals) if self.residuals else None,
            error_messages=tuple(self.error_messages),
        )


def _run_trial(
    cfg: CampaignConfig,
    family: FamilyTag,
    entries: tuple[GridEntry, ...],
    dim: int,
    trial: int,
) -> _TrialResult:
    # A = B satisfies every order, so zero-shift campaigns draw ordered pairs only.
    relation = Relation.ORDERED if cfg.zero_shift else relation_for(family, dim)
    spec = GenSpec(
        dim=dim,
        seed=cfg.seed,
        condition_cap=cfg.condition_cap,
        gap=cfg.gap,
        stream=(family_code(family), dim, trial),
        zero_shift=cfg.zero_shift,
    )
    try:
        pair = draw_pair(relation, spec, PAIR_BUDGET, cfg.tolerance)
    except SpectralError as exc:
        return _TrialResult(error=f"generator: {exc}")
    if pair is None:
        return _TrialResult(error=f"generator: no {relation.value} pair within {PAIR_BUDGET} candidates")

    a, b = pair
    digest = matrix_digest(a, b)
    outcomes: list[tuple[GridEntry, Fingerprint, InstanceOutcome | str]] = []
    for entry in entries:
        fingerprint = Fingerprint(
            family=family.value,
            params=entry.params.as_dict(),
            seed=cfg.seed,
            dim=dim,
            stream=spec.stream,
            condition_cap=cfg.condition_cap,
            relation=relation.value,
            digest=digest,
            gap=cfg.gap,
            zero_shift=cfg.zero_shift,
        )
        try:
            outcome: InstanceOutcome | str = evaluate_instance(
                family, a, b, entry.params, cfg.tolerance, check_ranges=not entry.allow_invalid
            )
        except (SpectralError, ConstraintError, ParameterError) as exc:
            outcome = f"{type(exc).__name__}: {exc}"
        outcomes.append((entry, fingerprint, outcome))
    return _TrialResult(outcomes=tuple(outcomes), pair=pair)


def run_campaign(
    cfg: CampaignConfig,
    *,
    progress: ProgressFn | None = None,
    workers: int = 1,
) -> CampaignReport:
    """
    Run a verification campaign.

    Args:
        cfg:
            Validated campaign configuration.
        progress:
            Optional callback receiving one line per family.
        workers:
            Number of threads evaluating trials. The report does not depend
            on it.

    Returns:
        The aggregated report. Failures of grid entries that satisfy their
        hypotheses are listed as violations; the caller decides whether they
        abort the run.
    """

    started = time.perf_counter()
    families: list[FamilyStats] = []
    violations: list[Violation] = []

    for family in cfg.families:
        entries = grid_for(cfg, family)
        tasks = [(dim, trial) for dim in cfg.dims for trial in range(cfg.trials)]
        if progress is not None:
            progress(f"Checking {family.value}: {len(tasks)} pair(s) × {len(entries)} parameter set(s)")

        def _task(task: tuple[int, int], family: FamilyTag = family, entries: tuple[GridEntry, ...] = entries) -> _TrialResult:
            return _run_trial(cfg, family, entries, task[0], task[1])

        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_task, tasks))
        else:
            results = [_task(task) for task in tasks]

        acc = _Accumulator(family)
        for result in results:
            if result.error is not None:
                acc.add_error(result.error)
                continue
            for entry, fingerprint, outcome in result.outcomes:
                if isinstance(outcome, str):
                    acc.add_error(outcome)
                    continue
                acc.add(fingerprint, outcome)
                if not outcome.held and not entry.allow_invalid:
                    assert result.pair is not None
                    violations.append(Violation(fingerprint, outcome.margin, result.pair[0], result.pair[1]))
        families.append(acc.freeze())

    return CampaignReport(
        seed=cfg.seed,
        families=tuple(families),
        violations=tuple(violations),
        violation_count=len(violations),
        wall_time=time.perf_counter() - started,
    )


@dataclass(frozen=True)
class Witness:
    fingerprint: Fingerprint
    margin: float
    a: HermitianMatrix
    b: HermitianMatrix

    def to_dict(self) -> dict[str, Any]:
        return {
            "fingerprint": self.fingerprint.to_dict(),
            "margin": self.margin,
            "A": self.a.to_list(),
            "B": self.b.to_list(),
        }


@dataclass(frozen=True)
class SearchResult:
    """
    Outcome of a counterexample search.

    Attributes:
        witness:
            First clearly failing instance, or None. None means inconclusive,
            never that the inequality holds.
        attempts:
            Number of pairs evaluated.
        advisory:
            Set when the parameters satisfy the hypotheses, where a witness
            would contradict the theorem.
        errors:
            Attempts whose evaluation raised a numeric error; they are skipped.
    """

    witness: Witness | None
    attempts: int
    advisory: str | None = None
    errors: int = 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "found": self.witness is not None,
            "attempts": self.attempts,
            "advisory": self.advisory,
            "errors": self.errors,
            "witness": self.witness.to_dict() if self.witness is not None else None,
        }


def search_counterexample(
    family: FamilyTag,
    params: ParamSet,
    budget: int,
    seed: int,
    *,
    dims: tuple[int, ...] = (2,),
    condition_cap: float = 100.0,
    tol: TolerancePolicy = DEFAULT_TOLERANCE,
    progress: ProgressFn | None = None,
) -> SearchResult:
    """
    Rejection-sample pairs until an instance fails clearly.

    Attempt `k` draws a pair of dimension `dims[k % len(dims)]` in the relation
    the family assumes and evaluates it; the first instance with margin below
    −10× the tolerance is returned.

    Args:
        family:
            Family to probe.
        params:
            Parameters; invalid ones are the point of a search.
        budget:
            Maximum number of pairs.
        seed:
            Generator seed.
        dims:
            Dimensions to cycle through.
        condition_cap:
            Generator condition cap.
        tol:
            Tolerance policy.
        progress:
            Optional callback for the vacuity advisory and a final summary.

    Returns:
        The search result.

    Equation families are solved without their range hypotheses, but the
    exponent constraint must hold for the equation to be defined. Attempts
    that raise a numeric error are counted and skipped.

    Raises:
        ValueError:
            If `budget` is negative or `dims` is empty.
        ConstraintError:
            If an equation is not defined at `params`.
        ParameterError:
            If a required field is missing or an exponent is undefined.
    """

    if budget < 0:
        raise ValueError("budget must be >= 0")
    if not dims:
        raise ValueError("dims must not be empty")

    if isinstance(family, EquationFamily):
        require_well_posed(family, params)

    advisory = None
    if validate_family(family, params).valid:
        advisory = f"{family.value}: {params} satisfies the hypotheses, so the search is vacuous"
        if progress is not None:
            progress(f"WARNING: {advisory}")

    code = family_code(family)
    errors = 0
    for attempt in range(budget):
        dim = dims[attempt % len(dims)]
        relation = relation_for(family, dim)
        spec = GenSpec(dim=dim, seed=seed, condition_cap=condition_cap, stream=(SEARCH_STREAM, code, attempt))
        pair = draw_pair(relation, spec, PAIR_BUDGET, tol)
        if pair is None:
            continue
        a, b = pair
        try:
            outcome = evaluate_instance(family, a, b, params, tol, check_ranges=False)
        except SpectralError:
            errors += 1
            continue
        if outcome.clear_failure:
            fingerprint = Fingerprint(
                family=family.value,
                params=params.as_dict(),
                seed=seed,
                dim=dim,
                stream=spec.stream,
                condition_cap=condition_cap,
                relation=relation.value,
                digest=matrix_digest(a, b),
            )
            if progress is not None:
                progress(f"Found witness after {attempt + 1} attempt(s), margin {outcome.margin:.3e}")
            return SearchResult(Witness(fingerprint, outcome.margin, a, b), attempt + 1, advisory, errors)

    if progress is not None:
        progress(f"No witness within {budget} attempt(s); inconclusive")
    return SearchResult(None, budget, advisory, errors)


@dataclass(frozen=True)
class Replay:
    outcome: InstanceOutcome
    a: HermitianMatrix
    b: HermitianMatrix
    digest_matches: bool


def reproduce(fingerprint: Fingerprint, tol: TolerancePolicy = DEFAULT_TOLERANCE) -> Replay:
    """
    Regenerate an instance from its fingerprint and evaluate it again.

    Raises:
        ConfigError:
            If the generator cannot reproduce a pair.
    """

    family = parse_family(fingerprint.family)
    pair = draw_pair(Relation(fingerprint.relation), fingerprint.spec(), PAIR_BUDGET, tol)
    if pair is None:
        raise ConfigError(f"Could not regenerate the {fingerprint.relation} pair of this fingerprint")
    a, b = pair
    outcome = evaluate_instance(family, a, b, ParamSet.from_mapping(fingerprint.params), tol, check_ranges=False)
    digest_matches = not fingerprint.digest or fingerprint.digest == matrix_digest(a, b)
    return Replay(outcome=outcome, a=a, b=b, digest_matches=digest_matches)


def _format_cell(value: Any) -> Any:
    return "" if value is None else value


def report_rows(report: CampaignReport) -> list[dict[str, Any]]:
    """One row per family with the REPORT_COLUMNS keys."""

    return [{key: f.to_dict()[key] for key in REPORT_COLUMNS} for f in report.families]


def render_report(report: CampaignReport, fmt: str = "json", *, include_wall_time: bool = True) -> str:
    """
    Serialize a report as JSON or CSV text.

    Identical reports render to identical text; with `include_wall_time`
    unset the output is byte-stable across runs.
    """

    if fmt == "json":
        return json.dumps(report.to_dict(include_wall_time=include_wall_time), sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(REPORT_COLUMNS)
        for row in report_rows(report):
            writer.writerow([_format_cell(row[key]) for key in REPORT_COLUMNS])
        return buffer.getvalue()
    raise ValueError(f"Unsupported text report format: {fmt}")


def emit_report(
    report: CampaignReport,
    path: Path,
    fmt: str = "json",
    *,
    include_wall_time: bool = True,
) -> None:
    """
    Write a report as JSON, CSV or ODS.

    The ODS workbook holds a `Families` sheet (one row per family) and a
    `Violations` sheet.

    Raises:
        ValueError:
            If the format is unknown.
        OSError:
            If the file cannot be written.
    """

    path.parent.mkdir(parents=True, exist_ok=True)
    if fmt in ("json", "csv"):
        path.write_text(render_report(report, fmt, include_wall_time=include_wall_time), encoding="utf-8")
        return
    if fmt != "ods":
        raise ValueError(f"Unsupported report format: {fmt}")

    family_rows = [[_format_cell(row[key]) for key in REPORT_COLUMNS] for row in report_rows(report)]
    violation_columns = ["family", "dim", "stream", "params", "margin"]
    violation_rows = [
        [
            v.fingerprint.family,
            v.fingerprint.dim,
            " ".join(str(k) for k in v.fingerprint.stream),
            ",".join(f"{k}={x:g}" for k, x in v.fingerprint.params.items()),
            v.margin,
        ]
        for v in report.violations
    ]
    write_ods(
        path,
        [
            ("Families", list(REPORT_COLUMNS), family_rows),
            ("Violations", violation_columns, violation_rows),
        ],
    )


def read_report(path: Path) -> CampaignReport:
    """
    Read a JSON report back.

    Raises:
        ConfigError:
            If the file is not a report.
    """

    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
        return CampaignReport.from_dict(raw)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise ConfigError(f"Failed to read report '{path}': {exc}") from exc


def require_no_violations(report: CampaignReport) -> None:
    """
    Raises:
        CampaignViolation:
            If the report lists violations.
    """

    if report.violation_count:
        worst = min(report.violations, key=lambda v: v.margin)
        raise CampaignViolation(
            f"{report.violation_count} violation(s) in valid-parameter campaign; "
            f"worst: {worst.fingerprint.family} dim={worst.fingerprint.dim} margin={worst.margin:.3e}"
        )
