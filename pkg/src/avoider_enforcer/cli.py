"""Command-line interface.

Subcommands:

* ``play``        one match, optionally exporting its transcript
* ``tournament``  run an experiment config and verify its bounds
* ``solve``       exact game value on a tiny board
* ``verify``      re-check the bound verdicts recorded in a report file

Exit code 0 iff every asserted bound passes (and no strategy faulted).
"""

from __future__ import annotations

import argparse
import sys

from .board import AuditLevel, Mode, edge_count
from .bounds import get_bound
from .errors import GameError
from .harness import (
    ExperimentConfig,
    export_transcript,
    parse_config,
    run_experiment,
    verify_bounds,
)
from .match import run_match
from .properties import PROPERTY_IDS, brute_force_extremal, get_property
from .registry import resolve_strategy
from .solver import solve_tau_e, verify_observation1


def _add_play(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("play", help="run a single match")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--avoider", required=True)
    p.add_argument("--enforcer", required=True)
    p.add_argument("--property", dest="property_id", required=True, choices=PROPERTY_IDS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.STOP_AT_LOSS.value)
    p.add_argument("--audit", choices=[a.value for a in AuditLevel], default=AuditLevel.NONE.value)
    p.add_argument("--transcript", help="write the transcript to this path")


def _add_tournament(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("tournament", help="run an experiment config")
    p.add_argument("--config", required=True, help="key=value config file")
    p.add_argument("--report", help="write the report here instead of stdout")
    p.add_argument("--failures", help="directory for failing-match transcripts")


def _add_solve(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("solve", help="exact value on a tiny board (n <= 6)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--property", dest="property_id", required=True, choices=PROPERTY_IDS)
    p.add_argument(
        "--large-ok",
        action="store_true",
        help="allow n = 6 (about 14M positions; minutes of runtime)",
    )


def _add_verify(sub: argparse._SubParsersAction) -> None:
    p = sub.add_parser("verify", help="re-check the verdicts in a report file")
    p.add_argument("--report", required=True)


def cmd_play(args: argparse.Namespace) -> int:
    result = run_match(
        args.n,
        resolve_strategy(args.avoider),
        resolve_strategy(args.enforcer),
        args.property_id,
        mode=Mode(args.mode),
        seed=args.seed,
        audit_level=AuditLevel(args.audit),
    )
    loss = "none" if result.loss_round is None else str(result.loss_round)
    fault = "none" if result.fault is None else f"{result.fault.player.value}:{result.fault.reason}"
    print(
        f"n={result.n} property={result.property_id} avoider={result.avoider_name} "
        f"enforcer={result.enforcer_name} seed={result.seed} loss_round={loss} "
        f"rounds_played={result.final_state.round} "
        f"violations={len(result.invariant_violations)} fault={fault}"
    )
    for violation in result.invariant_violations:
        print(f"violation {violation}")
    if args.transcript:
        export_transcript(result, args.transcript)
    return 0 if result.fault is None else 1


def cmd_tournament(args: argparse.Namespace) -> int:
    with open(args.config, "r", encoding="utf-8") as handle:
        config = parse_config(handle.read())
    report = run_experiment(config, failure_dir=args.failures)
    text = report.text()
    if args.report:
        with open(args.report, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report.passed else 1


def cmd_solve(args: argparse.Namespace) -> int:
    n = args.n
    if n == 6 and not args.large_ok:
        print("n=6 needs --large-ok (about 14M positions)", file=sys.stderr)
        return 2
    record = verify_observation1(n, args.property_id)
    print(record.line())
    return 0 if record.passed else 1


def cmd_verify(args: argparse.Namespace) -> int:
    """Recompute worst losses from the match lines and compare with the
    recorded bound verdicts."""
    with open(args.report, "r", encoding="utf-8") as handle:
        lines = [line.rstrip("\n") for line in handle if line.strip()]
    matches: list[tuple[int, int | None]] = []
    recorded: list[dict[str, str]] = []
    for line in lines:
        kind, _, rest = line.partition(" ")
        fields = dict(token.partition("=")[::2] for token in rest.split())
        if kind == "match":
            loss = None if fields["loss_round"] == "none" else int(fields["loss_round"])
            matches.append((int(fields["n"]), loss))
        elif kind == "bound":
            recorded.append(fields)
    ok = True
    for fields in recorded:
        bound = get_bound(fields["name"])
        n = int(fields["n"])
        group = [loss for (gn, loss) in matches if gn == n]
        actual = all(bound.satisfied(n, loss) for loss in group)
        claimed = fields["pass"] == "true"
        agree = actual == claimed
        ok &= actual and agree
        print(
            f"verify name={fields['name']} n={n} recorded={str(claimed).lower()} "
            f"recomputed={str(actual).lower()} agree={str(agree).lower()}"
        )
    if not recorded:
        print("verify no bound lines found")
    return 0 if ok or not recorded else 1


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="avoider-enforcer",
        description="Avoider-Enforcer games on the edges of K_n: engine, "
        "strategies, exact solver, bound verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    _add_play(sub)
    _add_tournament(sub)
    _add_solve(sub)
    _add_verify(sub)
    args = parser.parse_args(argv)
    handlers = {
        "play": cmd_play,
        "tournament": cmd_tournament,
        "solve": cmd_solve,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except GameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
