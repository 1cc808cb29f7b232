"""Enforcer strategies and generic adversaries.

* :class:`OddCycleEnforcer` forces a non-bipartite Avoider graph within
  n^2/8 + n/2 + 1 rounds by always attacking the bipartition of one of
  Avoider's components.
* :class:`ConnectivityEnforcer` forces a connected spanning Avoider graph
  within C(n-1, 2)/2 + 2*ceil(log2 n) + 1 rounds via the safe/dangerous
  edge discipline with staged degree control.
* :class:`RandomAdversary`, :class:`LexAdversary` and :class:`GreedyAttack`
  are opponents for stress-testing; they can play either side.
"""

from __future__ import annotations

from .board import Edge, GameState, edge_count, iter_bits, lowest_bit
from .errors import ConfigError
from .strategy import Strategy
from .tracking import ComponentTracker, ParityUnionFind


class OddCycleEnforcer(Strategy):
    """Claims an edge across the bipartition of one of Avoider's components.

    When no such edge exists the least unclaimed edge is taken and counted
    as "possibly bad"; that situation forces Avoider to merge two of his
    components, so it can occur at most n - 1 times before Avoider runs out
    of safe moves.
    """

    name = "odd_cycle_enforcer"

    def __init__(self, n: int, rng=None):
        super().__init__(n, rng)
        self.parity = ParityUnionFind(n)
        self.possibly_bad = 0
        self.closed = False  # latched once Avoider's graph has an odd cycle

    def observe(self, state: GameState, edge: Edge) -> None:
        if self.closed:
            return
        self.parity.add_edge(*edge)
        if self.parity.odd_cycle:
            self.closed = True

    def choose(self, state: GameState) -> Edge:
        if not self.closed:
            parity = self.parity
            for u in range(self.n):
                root, side = parity.find(u)
                if parity.size[root] < 2:
                    continue
                opposite = parity.sides[root][side ^ 1]
                cand = opposite & ~state.claimed_row[u] & state.above[u]
                if cand:
                    return (u, lowest_bit(cand))
            self.possibly_bad += 1
            if self.possibly_bad > self.n - 1:
                self.note(state, f"possibly-bad count reached {self.possibly_bad}")
        return state.least_unclaimed_edge()


class ConnectivityEnforcer(Strategy):
    """Safe-first Enforcer with staged control of its dangerous degree.

    An unclaimed edge is *safe* when its endpoints share an Avoider
    component, *dangerous* otherwise.  Safe edges are claimed whenever one
    exists.  Dangerous play runs in k = ceil(log2 n) stages; during stage i
    a dangerous edge is only claimed if both endpoint degrees in the current
    dangerous graph stay at most 2i, and the stage advances when no such
    edge exists.  After stage k any dangerous edge is allowed.  The
    classification is recomputed against Avoider's current components at
    decision time, because merges turn dangerous edges safe.
    """

    name = "connectivity_enforcer"

    def __init__(self, n: int, rng=None):
        super().__init__(n, rng)
        self.components = ComponentTracker(n)
        self.k = max(1, (n - 1).bit_length())  # ceil(log2 n)
        self.stage = 1
        self.phase = 1
        self.dangerous_claimed: list[Edge] = []
        self.phase2_claims = 0
        self.component_counts: dict[int, int] = {}  # stage -> count at its end
        self.internal_unclaimed = 0
        self.await_merge = False
        self.max_dangerous_degree = 0

    # -- avoider bookkeeping -------------------------------------------------

    def observe(self, state: GameState, edge: Edge) -> None:
        u, v = edge
        comps = self.components
        before = comps.components
        ru, rv = comps.find(u), comps.find(v)
        if ru == rv:
            self.internal_unclaimed -= 1
            comps.union(u, v)
        else:
            small, big = (ru, rv) if comps.size[ru] <= comps.size[rv] else (rv, ru)
            small_mask, big_mask = comps.mask[small], comps.mask[big]
            crossing_open = 0
            for x in iter_bits(small_mask):
                crossing_open += (big_mask & ~state.claimed_row[x]).bit_count()
            self.internal_unclaimed += crossing_open
            comps.union(u, v)
        if self.await_merge:
            if comps.components >= before:
                self.note(
                    state,
                    "avoider move after a dangerous claim did not merge components",
                )
            self.await_merge = False

    # -- move selection --------------------------------------------------------

    def choose(self, state: GameState) -> Edge:
        if self.internal_unclaimed > 0:
            move = self._safe_edge(state)
            if move is not None:
                self.internal_unclaimed -= 1
                return move
            self.note(state, "internal-unclaimed count positive but no safe edge")
            self.internal_unclaimed = 0
        return self._dangerous_edge(state)

    def _safe_edge(self, state: GameState) -> Edge | None:
        comps = self.components
        for u in range(self.n):
            mask = comps.mask[comps.find(u)]
            cand = mask & ~state.claimed_row[u] & state.above[u]
            if cand:
                return (u, lowest_bit(cand))
        return None

    def _dangerous_degrees(self, state: GameState) -> list[int]:
        """Current degrees in the dangerous graph; prunes edges gone safe."""
        comps = self.components
        still = []
        degree = [0] * self.n
        for u, v in self.dangerous_claimed:
            if comps.find(u) != comps.find(v):
                still.append((u, v))
                degree[u] += 1
                degree[v] += 1
        self.dangerous_claimed = still
        top = max(degree) if still else 0
        if top > self.max_dangerous_degree:
            self.max_dangerous_degree = top
            if top > 4 * self.k:
                self.note(state, f"dangerous degree {top} exceeds 4k = {4 * self.k}")
        return degree

    def _dangerous_edge(self, state: GameState) -> Edge:
        degree = self._dangerous_degrees(state)
        comps = self.components
        while self.phase == 1:
            cap = 2 * self.stage
            allowed = 0
            for v in range(self.n):
                if degree[v] < cap:
                    allowed |= 1 << v
            for u in iter_bits(allowed):
                cand = (
                    allowed
                    & ~state.claimed_row[u]
                    & state.above[u]
                    & ~comps.mask[comps.find(u)]
                )
                if cand:
                    return self._claim_dangerous(state, (u, lowest_bit(cand)))
            # No compliant dangerous edge: close this stage and move on.
            self.component_counts[self.stage] = comps.components
            bound = self.n * 2 ** (-self.stage) + 2 * self.stage
            if comps.components > bound:
                self.note(
                    state,
                    f"stage {self.stage} ended with {comps.components} components "
                    f"> {bound:.2f}",
                )
            self.stage += 1
            if self.stage > self.k:
                self.phase = 2
        for u in range(self.n):
            cand = (
                ~state.claimed_row[u]
                & state.above[u]
                & state.full_mask
                & ~comps.mask[comps.find(u)]
            )
            if cand:
                self.phase2_claims += 1
                if self.phase2_claims > 2 * self.k:
                    self.note(
                        state, f"phase-2 dangerous claims reached {self.phase2_claims}"
                    )
                return self._claim_dangerous(state, (u, lowest_bit(cand)))
        # Unreachable while the internal-unclaimed counter is exact: no
        # dangerous edge plus no internal edge means the board is empty.
        return state.least_unclaimed_edge()

    def _claim_dangerous(self, state: GameState, edge: Edge) -> Edge:
        self.dangerous_claimed.append(edge)
        if state.unclaimed_count > 1:
            self.await_merge = True
        return edge


class RandomAdversary(Strategy):
    """Uniform over unclaimed edges, reproducible from the match seed.

    Keeps a shrinking candidate list with rejection of stale entries, so a
    full match costs O(E) draws overall and every draw is uniform on the
    currently unclaimed edges.
    """

    name = "adversary:random"

    def __init__(self, n: int, rng=None):
        super().__init__(n, rng)
        self.candidates = [(u, v) for u in range(n) for v in range(u + 1, n)]

    def choose(self, state: GameState) -> Edge:
        candidates = self.candidates
        while True:
            i = self.rng.randrange(len(candidates))
            edge = candidates[i]
            candidates[i] = candidates[-1]
            candidates.pop()
            if state.is_unclaimed(*edge):
                return edge


class LexAdversary(Strategy):
    """Always the lexicographically least unclaimed edge."""

    name = "adversary:lex"

    def choose(self, state: GameState) -> Edge:
        return state.least_unclaimed_edge()


GREEDY_TARGETS = ("non_planar", "non_bipartite", "connected_spanning", "min_degree_one")


class GreedyAttack(Strategy):
    """Deterministic heuristic attacker, harder on structure than random play.

    Engineering addition (not part of any proved bound).  Scoring by target:

    * ``non_planar``: prefer edges whose endpoints both carry opponent
      degree 1 or 2, consuming star leaves and path endpoints the opponent
      still needs.
    * ``non_bipartite`` (and no target): prefer edges between two vertices
      with no claimed edge at all, burning the fresh-vertex supply.
    * ``connected_spanning`` / ``min_degree_one``: prefer edges inside one
      of the opponent's components, consuming its safe internal moves.

    Ties and fallbacks resolve to the least unclaimed edge.
    """

    def __init__(self, n: int, rng=None, target: str | None = None):
        super().__init__(n, rng)
        if target is not None and target not in GREEDY_TARGETS:
            raise ConfigError(f"unknown greedy target {target!r}")
        self.target = target
        self.name = "adversary:greedy" if target is None else f"adversary:greedy:{target}"
        self.opponent_components: ComponentTracker | None = (
            ComponentTracker(n) if target in ("connected_spanning", "min_degree_one") else None
        )

    def observe(self, state: GameState, edge: Edge) -> None:
        if self.opponent_components is not None:
            self.opponent_components.union(*edge)

    def choose(self, state: GameState) -> Edge:
        move = None
        if self.target == "non_planar":
            move = self._within_mask(state, self._leafy_mask(state))
        elif self.opponent_components is not None:
            move = self._inside_component(state)
        else:
            move = self._within_mask(state, state.virgin_mask)
        return move if move is not None else state.least_unclaimed_edge()

    def _leafy_mask(self, state: GameState) -> int:
        mask = 0
        for v in range(self.n):
            if 1 <= state.avoider_row[v].bit_count() <= 2:
                mask |= 1 << v
        return mask

    def _within_mask(self, state: GameState, mask: int) -> Edge | None:
        for u in iter_bits(mask):
            cand = mask & ~state.claimed_row[u] & state.above[u]
            if cand:
                return (u, lowest_bit(cand))
        return None

    def _inside_component(self, state: GameState) -> Edge | None:
        comps = self.opponent_components
        for u in range(self.n):
            mask = comps.mask[comps.find(u)]
            cand = mask & ~state.claimed_row[u] & state.above[u]
            if cand:
                return (u, lowest_bit(cand))
        return None
