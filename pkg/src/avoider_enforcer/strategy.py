"""Strategy interface.

A strategy is a per-match decision procedure with private memory.  The
referee calls ``choose`` on the player to move and ``observe`` on the
opponent after each applied move.  Strategies report invariant breaches by
appending :class:`~avoider_enforcer.match.AuditRecord` objects to
``violations``; the referee drains that list into the match result.
"""

from __future__ import annotations

import random

from .board import AuditLevel, Edge, GameState
from .match import AuditRecord


class Strategy:
    name = "strategy"

    def __init__(self, n: int, rng: random.Random | None = None):
        self.n = n
        self.rng = rng if rng is not None else random.Random(0)
        self.audit_level = AuditLevel.NONE
        self.violations: list[AuditRecord] = []

    def choose(self, state: GameState) -> Edge:
        raise NotImplementedError

    def observe(self, state: GameState, edge: Edge) -> None:
        """Called after the opponent's move has been applied to ``state``."""

    def note(self, state: GameState, message: str) -> None:
        self.violations.append(AuditRecord(state.round, self.name, message))

    @property
    def auditing(self) -> bool:
        return self.audit_level is not AuditLevel.NONE


class ScriptedStrategy(Strategy):
    """Plays a fixed move list; used by exhaustive audits and replays."""

    name = "scripted"

    def __init__(self, n: int, rng=None, script: list[Edge] = ()):  # noqa: D401
        super().__init__(n, rng)
        self.script = list(script)
        self.cursor = 0

    def exhausted(self) -> bool:
        return self.cursor >= len(self.script)

    def choose(self, state: GameState) -> Edge:
        edge = self.script[self.cursor]
        self.cursor += 1
        return edge
