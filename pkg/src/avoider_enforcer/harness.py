"""Experiment orchestration: tournaments, bound verification, reports.

Reports are line-oriented ``key=value`` records plus a summary, one
machine-readable line per match, so runs diff cleanly.  The same config
and base seed always produce a byte-identical report; per-match seeds are
``base_seed + match_index``.  Failed asserted bounds export a transcript
that reproduces the offending match standalone.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace

from .board import AuditLevel, Mode
from .bounds import BoundSpec, get_bound
from .errors import ConfigError, TranscriptParseError
from .match import MatchResult, replay_transcript, run_match
from .properties import get_property
from .registry import resolve_strategy
from .transcript import Transcript, format_transcript, parse_transcript


@dataclass(frozen=True)
class ExperimentConfig:
    ns: tuple[int, ...]
    property_id: str
    avoider: str
    enforcer: str
    repetitions: int = 1
    seed: int = 0
    mode: Mode = Mode.STOP_AT_LOSS
    audit: AuditLevel = AuditLevel.NONE
    bounds: tuple[str, ...] = ()

    def validate(self) -> "ExperimentConfig":
        if not self.ns:
            raise ConfigError("config needs at least one n")
        if self.repetitions < 1:
            raise ConfigError("repetitions must be >= 1")
        get_property(self.property_id)
        resolve_strategy(self.avoider)
        resolve_strategy(self.enforcer)
        for name in self.bounds:
            get_bound(name)
        return self

    def line(self) -> str:
        parts = [
            f"n={','.join(str(n) for n in self.ns)}",
            f"property={self.property_id}",
            f"avoider={self.avoider}",
            f"enforcer={self.enforcer}",
            f"repetitions={self.repetitions}",
            f"seed={self.seed}",
            f"mode={self.mode.value}",
            f"audit={self.audit.value}",
        ]
        if self.bounds:
            parts.append(f"bounds={','.join(self.bounds)}")
        return " ".join(parts)


def parse_config(text: str) -> ExperimentConfig:
    """Parse the ``key=value`` config grammar (one pair per line or many per
    line; ``#`` starts a comment)."""
    fields: dict[str, str] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        for token in line.split():
            key, sep, value = token.partition("=")
            if not sep:
                raise ConfigError(f"malformed config token {token!r}")
            fields[key] = value
    try:
        ns = tuple(int(x) for x in fields.pop("n").split(","))
    except KeyError:
        raise ConfigError("config is missing n") from None
    except ValueError as exc:
        raise ConfigError(f"bad n list: {exc}") from None
    config = ExperimentConfig(
        ns=ns,
        property_id=fields.pop("property", ""),
        avoider=fields.pop("avoider", ""),
        enforcer=fields.pop("enforcer", ""),
        repetitions=int(fields.pop("repetitions", "1")),
        seed=int(fields.pop("seed", "0")),
        mode=Mode(fields.pop("mode", Mode.STOP_AT_LOSS.value)),
        audit=AuditLevel(fields.pop("audit", AuditLevel.NONE.value)),
        bounds=tuple(b for b in fields.pop("bounds", "").split(",") if b),
    )
    if fields:
        raise ConfigError(f"unknown config keys: {', '.join(sorted(fields))}")
    return config.validate()


@dataclass
class MatchRow:
    index: int
    n: int
    seed: int
    loss_round: int | None
    violations: int
    fault: str | None
    result: MatchResult

    def line(self) -> str:
        loss = "none" if self.loss_round is None else str(self.loss_round)
        fault = self.fault or "none"
        return (
            f"match index={self.index} n={self.n} seed={self.seed} "
            f"loss_round={loss} violations={self.violations} fault={fault}"
        )


@dataclass
class BoundVerdict:
    bound: BoundSpec
    n: int
    worst_loss: int | None
    worst_margin: float | None
    passed: bool | None  # None for margin-only specs
    failing_seeds: list[int] = field(default_factory=list)
    transcript_paths: list[str] = field(default_factory=list)

    def line(self) -> str:
        if self.passed is None:
            margin = "none" if self.worst_margin is None else f"{self.worst_margin:.6g}"
            return (
                f"margin name={self.bound.name} n={self.n} value={margin} "
                f"formula={self.bound.formula.replace(' ', '')}"
            )
        worst = "none" if self.worst_loss is None else str(self.worst_loss)
        margin = "none" if self.worst_margin is None else f"{self.worst_margin:.6g}"
        out = (
            f"bound name={self.bound.name} n={self.n} direction={self.bound.direction} "
            f"value={self.bound.value(self.n):.6g} worst={worst} margin={margin} "
            f"pass={str(self.passed).lower()}"
        )
        if self.failing_seeds:
            out += f" failing_seeds={','.join(str(s) for s in self.failing_seeds)}"
        if self.transcript_paths:
            out += f" transcripts={','.join(self.transcript_paths)}"
        return out


@dataclass
class Report:
    config: ExperimentConfig
    rows: list[MatchRow]
    verdicts: list[BoundVerdict]

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts if v.passed is not None) and not any(
            row.fault for row in self.rows
        )

    def lines(self) -> list[str]:
        out = [f"config {self.config.line()}"]
        out.extend(row.line() for row in self.rows)
        out.extend(v.line() for v in self.verdicts)
        asserted = [v for v in self.verdicts if v.passed is not None]
        out.append(
            f"summary matches={len(self.rows)} "
            f"bounds_pass={sum(1 for v in asserted if v.passed)} "
            f"bounds_fail={sum(1 for v in asserted if not v.passed)} "
            f"faults={sum(1 for r in self.rows if r.fault)}"
        )
        return out

    def text(self) -> str:
        return "\n".join(self.lines()) + "\n"


def run_experiment(
    config: ExperimentConfig, *, failure_dir: str | None = None
) -> Report:
    """Run repetitions x |ns| matches and evaluate the attached bounds.

    Matches are independent (per-index seeds), so results are identical
    whether they run sequentially or in parallel; this runner is sequential
    and aggregates in index order.
    """
    config.validate()
    avoider = resolve_strategy(config.avoider)
    enforcer = resolve_strategy(config.enforcer)
    rows: list[MatchRow] = []
    index = 0
    for n in config.ns:
        for _ in range(config.repetitions):
            seed = config.seed + index
            result = run_match(
                n,
                avoider,
                enforcer,
                config.property_id,
                mode=config.mode,
                seed=seed,
                audit_level=config.audit,
            )
            fault = None
            if result.fault is not None:
                fault = f"{result.fault.player.value}:{result.fault.reason}"
            rows.append(
                MatchRow(
                    index=index,
                    n=n,
                    seed=seed,
                    loss_round=result.loss_round,
                    violations=len(result.invariant_violations),
                    fault=fault,
                    result=result,
                )
            )
            index += 1
    bounds = [get_bound(name) for name in config.bounds]
    verdicts = verify_bounds(rows, bounds, failure_dir=failure_dir)
    return Report(config=config, rows=rows, verdicts=verdicts)


def verify_bounds(
    rows: list[MatchRow],
    bounds: list[BoundSpec],
    *,
    failure_dir: str | None = None,
) -> list[BoundVerdict]:
    """One verdict per (bound, n) with the worst-case margin.

    Margin-only specs report the minimum margin and never pass or fail.
    For asserted bounds every failing row is listed, and when
    ``failure_dir`` is given its transcript is exported for standalone
    replay.
    """
    verdicts = []
    ns = sorted({row.n for row in rows})
    for bound in bounds:
        for n in ns:
            group = [row for row in rows if row.n == n]
            margins = [
                m
                for row in group
                if (m := bound.margin(n, row.loss_round)) is not None
            ]
            worst_margin = min(margins) if margins else None
            if not bound.asserted:
                verdicts.append(
                    BoundVerdict(
                        bound=bound,
                        n=n,
                        worst_loss=None,
                        worst_margin=worst_margin,
                        passed=None,
                    )
                )
                continue
            failing = [
                row for row in group if not bound.satisfied(n, row.loss_round) or row.fault
            ]
            losses = [row.loss_round for row in group if row.loss_round is not None]
            if bound.direction == "lower":
                worst = min(losses) if losses else None
            else:
                worst = max(losses) if losses else None
            paths = []
            if failing and failure_dir is not None:
                os.makedirs(failure_dir, exist_ok=True)
                for row in failing:
                    path = os.path.join(
                        failure_dir, f"{bound.name}_n{n}_seed{row.seed}.transcript"
                    )
                    export_transcript(row.result, path)
                    paths.append(path)
            verdicts.append(
                BoundVerdict(
                    bound=bound,
                    n=n,
                    worst_loss=worst,
                    worst_margin=worst_margin,
                    passed=not failing,
                    failing_seeds=[row.seed for row in failing],
                    transcript_paths=paths,
                )
            )
    return verdicts


def export_transcript(result: MatchResult | Transcript, path: str) -> None:
    transcript = result.transcript() if isinstance(result, MatchResult) else result
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_transcript(transcript))


def import_transcript(path: str) -> MatchResult:
    """Parse and replay a transcript file into a MatchResult.

    Malformed lines raise :class:`TranscriptParseError` with the line
    number; illegal play raises :class:`ReplayError`.
    """
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    return replay_transcript(parse_transcript(text))
