"""Board state and move legality for unbiased games on the edges of K_n.

Two players, Avoider and Enforcer, alternately claim unclaimed edges of the
complete graph on ``n`` vertices, Avoider first.  ``GameState`` keeps the
claimed edge sets plus per-vertex bitmask rows so strategies can scan for
eligible edges in O(n) big-int operations instead of O(n^2) pair loops.
"""

from __future__ import annotations

from enum import Enum

from .errors import IllegalMoveError, InvalidEdgeError, InvalidParameterError

Edge = tuple[int, int]


class Player(Enum):
    AVOIDER = "A"
    ENFORCER = "E"

    @property
    def opponent(self) -> "Player":
        return Player.ENFORCER if self is Player.AVOIDER else Player.AVOIDER


class Mode(Enum):
    """Referee behaviour once Avoider's graph satisfies the losing property.

    STOP_AT_LOSS halts the match at the losing move; PLAY_OUT continues to
    board exhaustion (the loss round is still the first satisfaction).
    """

    STOP_AT_LOSS = "stop_at_loss"
    PLAY_OUT = "play_out"


class AuditLevel(Enum):
    NONE = "none"
    CHECKPOINTS = "checkpoints"
    FULL = "full"


def edge_count(n: int) -> int:
    return n * (n - 1) // 2


def lowest_bit(mask: int) -> int:
    """Index of the least significant set bit; ``mask`` must be nonzero."""
    return (mask & -mask).bit_length() - 1


def iter_bits(mask: int):
    """Yield set-bit indices of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class GameState:
    """Mutable position of a single match.

    Invariants (checked by :meth:`check_invariants`):

    * ``avoider_edges`` and ``enforcer_edges`` are disjoint subsets of E(K_n);
    * ``len(avoider_edges) - len(enforcer_edges)`` is 0 or 1 (Avoider first);
    * ``round == len(avoider_edges)`` (completed Avoider moves).

    ``claimed_row[u]`` is the bitmask of vertices v such that (u, v) is
    claimed by either player; ``avoider_row``/``enforcer_row`` split it by
    owner.  ``virgin_mask`` holds vertices with no claimed incident edge.
    """

    __slots__ = (
        "n",
        "avoider_edges",
        "enforcer_edges",
        "round",
        "next_player",
        "claimed_row",
        "avoider_row",
        "enforcer_row",
        "virgin_mask",
        "unclaimed_count",
        "full_mask",
        "above",
        "_cursor",
    )

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 2:
            raise InvalidParameterError(f"need an integer n >= 2, got {n!r}")
        self.n = n
        self.avoider_edges: set[Edge] = set()
        self.enforcer_edges: set[Edge] = set()
        self.round = 0
        self.next_player = Player.AVOIDER
        self.claimed_row = [0] * n
        self.avoider_row = [0] * n
        self.enforcer_row = [0] * n
        self.full_mask = (1 << n) - 1
        self.virgin_mask = self.full_mask
        self.unclaimed_count = edge_count(n)
        # above[u]: bitmask of vertices strictly greater than u.
        self.above = [self.full_mask ^ ((1 << (u + 1)) - 1) for u in range(n)]
        self._cursor = 0

    def is_unclaimed(self, u: int, v: int) -> bool:
        return not (self.claimed_row[u] >> v) & 1

    def validate_edge(self, edge: Edge) -> Edge:
        """Check canonical orientation and range; return the edge."""
        try:
            u, v = edge
        except (TypeError, ValueError):
            raise InvalidEdgeError(f"not an edge pair: {edge!r}") from None
        if not (isinstance(u, int) and isinstance(v, int)):
            raise InvalidEdgeError(f"edge endpoints must be ints: {edge!r}")
        if not (0 <= u < v < self.n):
            raise InvalidEdgeError(
                f"edge {edge!r} is not canonical (need 0 <= u < v < {self.n})"
            )
        return (u, v)

    def least_unclaimed_edge(self, exclude: int | None = None) -> Edge | None:
        """Lexicographically least unclaimed edge, optionally avoiding a vertex.

        Uses a monotone row cursor: once every edge (u, v) with v > u is
        claimed, row u is never rescanned.
        """
        u = self._cursor
        n = self.n
        while u < n - 1:
            open_above = (self.full_mask ^ self.claimed_row[u]) & self.above[u]
            if not open_above:
                if u == self._cursor:
                    self._cursor += 1
                u += 1
                continue
            if exclude is not None:
                if u == exclude:
                    u += 1
                    continue
                open_above &= ~(1 << exclude)
                if not open_above:
                    u += 1
                    continue
            return (u, lowest_bit(open_above))
        return None

    def check_invariants(self) -> list[str]:
        """Return human-readable descriptions of violated state invariants."""
        problems = []
        overlap = self.avoider_edges & self.enforcer_edges
        if overlap:
            problems.append(f"claimed sets overlap on {sorted(overlap)[:3]}")
        diff = len(self.avoider_edges) - len(self.enforcer_edges)
        if diff not in (0, 1):
            problems.append(f"|A| - |E| = {diff}, expected 0 or 1")
        if self.round != len(self.avoider_edges):
            problems.append(
                f"round {self.round} != avoider edge count {len(self.avoider_edges)}"
            )
        for u, v in list(self.avoider_edges)[:8] + list(self.enforcer_edges)[:8]:
            if not (0 <= u < v < self.n):
                problems.append(f"non-canonical edge ({u}, {v})")
        return problems


def new_game(n: int) -> GameState:
    """Fresh position: empty edge sets, round 0, Avoider to move."""
    return GameState(n)


def legal_moves(state: GameState) -> list[Edge]:
    """All unclaimed edges in canonical (lexicographic) order."""
    out = []
    for u in range(state.n - 1):
        open_above = (state.full_mask ^ state.claimed_row[u]) & state.above[u]
        for v in iter_bits(open_above):
            out.append((u, v))
    return out


def apply_move(state: GameState, edge: Edge) -> GameState:
    """Claim ``edge`` for ``state.next_player``; mutates and returns ``state``."""
    u, v = state.validate_edge(edge)
    if not state.is_unclaimed(u, v):
        raise IllegalMoveError(f"edge ({u}, {v}) is already claimed")
    mover = state.next_player
    if mover is Player.AVOIDER:
        state.avoider_edges.add((u, v))
        state.avoider_row[u] |= 1 << v
        state.avoider_row[v] |= 1 << u
        state.round += 1
    else:
        state.enforcer_edges.add((u, v))
        state.enforcer_row[u] |= 1 << v
        state.enforcer_row[v] |= 1 << u
    state.claimed_row[u] |= 1 << v
    state.claimed_row[v] |= 1 << u
    state.virgin_mask &= ~((1 << u) | (1 << v))
    state.unclaimed_count -= 1
    state.next_player = mover.opponent
    return state
