"""Match referee: alternation, loss detection, transcripts, audits.

The referee owns termination.  After every Avoider move it consults the
property tracker; ``loss_round`` is the first round whose Avoider graph
satisfies the losing property.  Properties without an exact incremental
tracker (non-planarity) are resolved after the fact by binary search over
Avoider's edge sequence, which is sound because the property is monotone;
in STOP_AT_LOSS mode the transcript is then truncated at the losing move.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .board import (
    AuditLevel,
    Edge,
    GameState,
    Mode,
    Player,
    apply_move,
    new_game,
)
from .errors import GameError, ReplayError
from .properties import LosingProperty, first_satisfied_round, get_property
from .transcript import Move, Transcript

StrategyFactory = Callable[[int, random.Random], "object"]


@dataclass
class AuditRecord:
    round: int
    source: str
    message: str

    def __str__(self) -> str:
        return f"round {self.round} [{self.source}]: {self.message}"


@dataclass
class Fault:
    player: Player
    round: int
    edge: object
    reason: str


@dataclass
class MatchResult:
    n: int
    property_id: str
    avoider_name: str
    enforcer_name: str
    seed: int
    mode: Mode
    loss_round: int | None
    moves: list[Move]
    final_state: GameState
    invariant_violations: list[AuditRecord] = field(default_factory=list)
    fault: Fault | None = None

    def transcript(self) -> Transcript:
        return Transcript(
            n=self.n,
            property_id=self.property_id,
            avoider=self.avoider_name,
            enforcer=self.enforcer_name,
            seed=self.seed,
            moves=list(self.moves),
        )

    def avoider_sequence(self) -> list[Edge]:
        return [e for _, p, e in self.moves if p is Player.AVOIDER]


def _rng_for(seed: int, side: str) -> random.Random:
    return random.Random(f"{seed}:{side}")


def _replay_state(n: int, moves: list[Move]) -> GameState:
    state = new_game(n)
    for _, _, edge in moves:
        apply_move(state, edge)
    return state


def _drain(strategy, sink: list[AuditRecord]) -> None:
    pending = getattr(strategy, "violations", None)
    if pending:
        sink.extend(pending)
        strategy.violations = []


def run_match(
    n: int,
    avoider: StrategyFactory,
    enforcer: StrategyFactory,
    prop: str | LosingProperty,
    *,
    mode: Mode = Mode.STOP_AT_LOSS,
    seed: int = 0,
    audit_level: AuditLevel = AuditLevel.NONE,
) -> MatchResult:
    """Play one match from the empty board.

    ``avoider`` and ``enforcer`` are factories ``(n, rng) -> strategy`` so
    each match gets fresh private memory; strategy classes whose
    constructor takes ``(n, rng)`` can be passed directly.  With identical
    arguments the transcript is reproduced byte for byte.
    """
    prop = get_property(prop)
    state = new_game(n)
    av = avoider(n, _rng_for(seed, "avoider"))
    en = enforcer(n, _rng_for(seed, "enforcer"))
    for strategy in (av, en):
        strategy.audit_level = audit_level

    tracker = prop.make_tracker(n)
    moves: list[Move] = []
    avoider_seq: list[Edge] = []
    violations: list[AuditRecord] = []
    loss_round: int | None = None
    fault: Fault | None = None
    # For deferred properties: longest prefix known not to satisfy, and the
    # next prefix length worth a full check.
    known_false = 0
    next_check = 9
    full_audit = audit_level is AuditLevel.FULL

    while state.unclaimed_count:
        mover = state.next_player
        strategy = av if mover is Player.AVOIDER else en
        other = en if mover is Player.AVOIDER else av
        edge = strategy.choose(state)
        try:
            edge = state.validate_edge(edge)
            claimed = not state.is_unclaimed(*edge)
        except GameError as exc:
            fault = Fault(mover, state.round, edge, str(exc))
            break
        if claimed:
            fault = Fault(mover, state.round, edge, "returned a claimed edge")
            break
        apply_move(state, edge)
        moves.append((state.round, mover, edge))

        if mover is Player.AVOIDER:
            avoider_seq.append(edge)
            tracker.add(edge)
            if loss_round is None:
                if prop.tracker_exact:
                    if tracker.satisfied():
                        loss_round = state.round
                else:
                    hit = tracker.satisfied()  # certain by edge count
                    if not hit and len(avoider_seq) >= next_check:
                        if prop.check(avoider_seq, n):
                            hit = True
                        else:
                            known_false = len(avoider_seq)
                            next_check = known_false + min(known_false, 256)
                    if hit:
                        loss_round = first_satisfied_round(prop, n, avoider_seq)
            if loss_round is not None and mode is Mode.STOP_AT_LOSS:
                _drain(strategy, violations)
                break

        other.observe(state, edge)
        _drain(av, violations)
        _drain(en, violations)
        if full_audit:
            for problem in state.check_invariants():
                violations.append(AuditRecord(state.round, "referee", problem))

    # A deferred property may have satisfied quietly before the match ended.
    if loss_round is None and not prop.tracker_exact:
        loss_round = first_satisfied_round(prop, n, avoider_seq)
        if loss_round is not None and known_false >= loss_round:
            violations.append(
                AuditRecord(loss_round, "referee", "deferred check was not monotone")
            )

    if mode is Mode.STOP_AT_LOSS and loss_round is not None:
        kept = [
            (rnd, player, edge)
            for rnd, player, edge in moves
            if rnd < loss_round or (rnd == loss_round and player is Player.AVOIDER)
        ]
        if len(kept) != len(moves):
            moves = kept
            state = _replay_state(n, moves)
        violations = [v for v in violations if v.round <= loss_round]

    _drain(av, violations)
    _drain(en, violations)
    return MatchResult(
        n=n,
        property_id=prop.id,
        avoider_name=getattr(av, "name", "avoider"),
        enforcer_name=getattr(en, "name", "enforcer"),
        seed=seed,
        mode=mode,
        loss_round=loss_round,
        moves=moves,
        final_state=state,
        invariant_violations=violations,
        fault=fault,
    )


def avoider_loss_round(
    transcript: Transcript, prop: str | LosingProperty | None = None
) -> int | None:
    """Re-score a transcript offline: first round Avoider's graph satisfies
    the property, or None.

    Replays the transcript through the referee's legality checks (illegal
    transcripts raise ReplayError) and then uses from-scratch property
    checks, independently of the incremental trackers used live.
    """
    prop = get_property(transcript.property_id if prop is None else prop)
    state = new_game(transcript.n)
    avoider_seq: list[Edge] = []
    for rnd, player, edge in transcript.moves:
        if player is not state.next_player:
            raise ReplayError(f"move {edge} out of turn at round {rnd}")
        try:
            apply_move(state, edge)
        except GameError as exc:
            raise ReplayError(f"round {rnd}: {exc}") from exc
        if state.round != rnd:
            raise ReplayError(f"recorded round {rnd} != replayed round {state.round}")
        if player is Player.AVOIDER:
            avoider_seq.append(edge)
    return first_satisfied_round(prop, transcript.n, avoider_seq)


def replay_transcript(transcript: Transcript) -> MatchResult:
    """Rebuild a MatchResult (loss round, final state) from a transcript."""
    loss = avoider_loss_round(transcript)
    return MatchResult(
        n=transcript.n,
        property_id=transcript.property_id,
        avoider_name=transcript.avoider,
        enforcer_name=transcript.enforcer,
        seed=transcript.seed,
        mode=Mode.PLAY_OUT,
        loss_round=loss,
        moves=list(transcript.moves),
        final_state=_replay_state(transcript.n, transcript.moves),
    )
