"""Exact game values on tiny boards by full game-tree search.

``solve_tau_e`` computes the least number of rounds within which Enforcer
can force Avoider's graph to satisfy the losing property, under optimal
play from both sides, or None when Avoider can survive the whole game.
Positions are memoized on a packed ternary key over the C(n, 2) edges
(unclaimed / Avoider / Enforcer); the side to move is implied by the claim
counts.  Once Avoider's graph satisfies the property the branch value is
the current round, by monotonicity.

``exhaustive_strategy_audit`` plays a fixed deterministic strategy against
*every* opponent move sequence and reports the worst case, which validates
a strategy against all opponents rather than a pool.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .board import Edge, Player, edge_count, new_game, apply_move
from .errors import CapacityExceededError
from .match import StrategyFactory
from .properties import LosingProperty, get_property

SOLVER_MAX_EDGES = 15  # n <= 6
AUDIT_MAX_N = 5

_INFINITE = 1 << 20


@dataclass
class SolverResult:
    n: int
    property_id: str
    tau_e: int | None  # None means Avoider wins (never loses)
    optimal_avoider_first: list[Edge]
    optimal_enforcer_reply: list[Edge]

    @property
    def finite(self) -> bool:
        return self.tau_e is not None


class _TinySolver:
    def __init__(self, n: int, prop: LosingProperty, move_order: list[int] | None = None):
        self.n = n
        self.prop = prop
        self.edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
        self.m = len(self.edges)
        if self.m > SOLVER_MAX_EDGES:
            raise CapacityExceededError(
                f"K_{n} has {self.m} edges; the exact solver is capped at "
                f"{SOLVER_MAX_EDGES} (n <= 6)"
            )
        self.order = list(range(self.m)) if move_order is None else list(move_order)
        self.pow3 = [3**i for i in range(self.m)]
        # 0 = unknown, 1 = never loses, r + 1 = first loss at round r.
        self.memo = bytearray(3**self.m)
        self.sat_cache: dict[int, bool] = {}

    def satisfied(self, avoider_mask: int) -> bool:
        hit = self.sat_cache.get(avoider_mask)
        if hit is None:
            subset = [self.edges[i] for i in range(self.m) if (avoider_mask >> i) & 1]
            hit = self.prop.check(subset, self.n)
            self.sat_cache[avoider_mask] = hit
        return hit

    def value(self, avoider_mask: int, enforcer_mask: int) -> int:
        """Game value (first-loss round, or the infinite sentinel)."""
        key = 0
        for i in range(self.m):
            if (avoider_mask >> i) & 1:
                key += self.pow3[i]
            elif (enforcer_mask >> i) & 1:
                key += 2 * self.pow3[i]
        return self._search(avoider_mask, enforcer_mask, key)

    def _search(self, avoider_mask: int, enforcer_mask: int, key: int) -> int:
        stored = self.memo[key]
        if stored:
            return _INFINITE if stored == 1 else stored - 1
        claimed = avoider_mask | enforcer_mask
        count = claimed.bit_count()
        if count == self.m:
            result = _INFINITE
        elif count % 2 == 0:  # Avoider to move: prefers never losing, then late
            result = -1
            for i in self.order:
                if (claimed >> i) & 1:
                    continue
                child_avoider = avoider_mask | (1 << i)
                if self.satisfied(child_avoider):
                    child = child_avoider.bit_count()
                else:
                    child = self._search(
                        child_avoider, enforcer_mask, key + self.pow3[i]
                    )
                if child > result:
                    result = child
                    if result == _INFINITE:
                        break
        else:  # Enforcer to move: minimizes the first-loss round
            result = _INFINITE
            for i in self.order:
                if (claimed >> i) & 1:
                    continue
                child = self._search(
                    avoider_mask, enforcer_mask | (1 << i), key + 2 * self.pow3[i]
                )
                if child < result:
                    result = child
        self.memo[key] = 1 if result == _INFINITE else result + 1
        return result


def solve_tau_e(
    n: int, prop: str | LosingProperty, *, move_order: list[int] | None = None
) -> SolverResult:
    """Exact minimum forcing time for Enforcer on K_n, or None if Avoider wins."""
    prop = get_property(prop)
    solver = _TinySolver(n, prop, move_order)
    root = solver.value(0, 0)
    best_first = []
    for i in range(solver.m):
        child_avoider = 1 << i
        if solver.satisfied(child_avoider):
            child = 1
        else:
            child = solver._search(child_avoider, 0, solver.pow3[i])
        if child == root:
            best_first.append(solver.edges[i])
    replies: list[Edge] = []
    if best_first and solver.m > 1:
        first_index = solver.edges.index(best_first[0])
        base_avoider = 1 << first_index
        best_reply_value = None
        for j in range(solver.m):
            if j == first_index:
                continue
            child = solver._search(
                base_avoider, 1 << j, solver.pow3[first_index] + 2 * solver.pow3[j]
            )
            if best_reply_value is None or child < best_reply_value:
                best_reply_value = child
                replies = [solver.edges[j]]
            elif child == best_reply_value:
                replies.append(solver.edges[j])
    return SolverResult(
        n=n,
        property_id=prop.id,
        tau_e=None if root == _INFINITE else root,
        optimal_avoider_first=best_first,
        optimal_enforcer_reply=replies,
    )


@dataclass
class ObservationRecord:
    """Outcome of checking the extremal sandwich on one (n, property)."""

    n: int
    property_id: str
    extremal: int
    tau_e: int | None
    lower: int
    upper: int
    passed: bool

    def line(self) -> str:
        tau = "inf" if self.tau_e is None else str(self.tau_e)
        return (
            f"n={self.n} property={self.property_id} ex={self.extremal} "
            f"tau_e={tau} sandwich={self.lower}..{self.upper} "
            f"pass={str(self.passed).lower()}"
        )


def verify_observation1(n: int, prop: str | LosingProperty) -> ObservationRecord:
    """Check ceil(ex/2) + 1 <= tau_E <= ex + 1 with both sides exact.

    ``ex`` comes from brute-force subset enumeration and ``tau_E`` from the
    exhaustive solver.  When tau_E is infinite the consistency condition is
    that Avoider's ceil(C(n,2)/2) claims fit inside an extremal witness,
    i.e. ceil(C(n,2)/2) <= ex.
    """
    from .properties import brute_force_extremal

    prop = get_property(prop)
    ex = brute_force_extremal(prop, n)
    result = solve_tau_e(n, prop)
    lower = (ex + 1) // 2 + 1
    upper = ex + 1
    if result.tau_e is None:
        passed = (edge_count(n) + 1) // 2 <= ex
    else:
        passed = lower <= result.tau_e <= upper
    return ObservationRecord(
        n=n,
        property_id=prop.id,
        extremal=ex,
        tau_e=result.tau_e,
        lower=lower,
        upper=upper,
        passed=passed,
    )


@dataclass
class AuditOutcome:
    """Worst case of one strategy against every opponent line.

    ``worst_finite_loss`` is the minimum (Avoider side) or maximum
    (Enforcer side) over branches where a loss occurred; ``no_loss_branches``
    counts opponent lines where Avoider never lost.
    """

    n: int
    property_id: str
    side: Player
    worst_finite_loss: int | None
    no_loss_branches: int
    branches: int

    def forces_always(self) -> bool:
        """Enforcer-side reading: every branch ends in an Avoider loss."""
        return self.no_loss_branches == 0


def exhaustive_strategy_audit(
    n: int,
    strategy: StrategyFactory,
    side: Player,
    prop: str | LosingProperty,
) -> AuditOutcome:
    """Play ``strategy`` on ``side`` against all opponent move sequences.

    The strategy must be deterministic (it receives a fixed-seed RNG); each
    opponent decision point branches over every unclaimed edge, with the
    prefix replayed so the strategy's private memory is rebuilt per branch.
    """
    if n > AUDIT_MAX_N:
        raise CapacityExceededError(f"exhaustive audit is capped at n <= {AUDIT_MAX_N}")
    prop = get_property(prop)
    losses: list[int] = []
    no_loss = 0

    def play(script: list[Edge]):
        """Replay; returns ('branch', moves) at an unscripted opponent turn,
        or ('leaf', loss_round) at exhaustion or first loss."""
        state = new_game(n)
        player = strategy(n, random.Random(0))
        cursor = 0
        avoider_edges: list[Edge] = []
        while state.unclaimed_count:
            if state.next_player is side:
                edge = player.choose(state)
            else:
                if cursor == len(script):
                    options = []
                    for u in range(n):
                        cand = (
                            (state.full_mask ^ state.claimed_row[u]) & state.above[u]
                        )
                        v = cand
                        while v:
                            low = v & -v
                            options.append((u, low.bit_length() - 1))
                            v ^= low
                    return "branch", options
                edge = script[cursor]
                cursor += 1
            mover = state.next_player
            apply_move(state, edge)
            if mover is Player.AVOIDER:
                avoider_edges.append(edge)
                if prop.check(avoider_edges, n):
                    return "leaf", len(avoider_edges)
            if mover is not side:
                player.observe(state, edge)
        return "leaf", None

    stack: list[list[Edge]] = [[]]
    branches = 0
    while stack:
        script = stack.pop()
        kind, payload = play(script)
        if kind == "leaf":
            branches += 1
            if payload is None:
                no_loss += 1
            else:
                losses.append(payload)
        else:
            for edge in payload:
                stack.append(script + [edge])

    if side is Player.AVOIDER:
        worst = min(losses) if losses else None
    else:
        worst = max(losses) if losses else None
    return AuditOutcome(
        n=n,
        property_id=prop.id,
        side=side,
        worst_finite_loss=worst,
        no_loss_branches=no_loss,
        branches=branches,
    )
