"""Monotone losing properties on subgraphs of K_n.

Each property bundles a from-scratch checker, closed-form extremal numbers
(the largest edge count of a K_n subgraph *without* the property), an
explicit extremal witness set, and a per-match incremental tracker for the
referee.  A brute-force enumerator over all edge subsets serves as the
oracle for the closed forms on tiny boards.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from .board import Edge, edge_count
from .errors import CapacityExceededError, ConfigError
from .tracking import (
    EdgeBudgetTracker,
    MinDegreeTracker,
    OddCycleTracker,
    SpanningTracker,
)

NON_PLANAR = "non_planar"
NON_BIPARTITE = "non_bipartite"
CONNECTED_SPANNING = "connected_spanning"
MIN_DEGREE_ONE = "min_degree_one"

PROPERTY_IDS = (NON_PLANAR, NON_BIPARTITE, CONNECTED_SPANNING, MIN_DEGREE_ONE)

# Exhaustive enumeration cap: all subsets of E(K_n).
BRUTE_FORCE_MAX_EDGES = 21


def is_planar(edges: Iterable[Edge], n: int) -> bool:
    """True iff the graph embeds in the plane.

    Edge-count certificate first (> 3n - 6 edges is never planar), then a
    full left-right planarity test.  Isolated vertices are irrelevant.
    """
    edges = list(edges)
    if n >= 3 and len(edges) > 3 * n - 6:
        return False
    if len(edges) < 9:
        return True  # the smallest non-planar graph, K_{3,3}, has 9 edges
    graph = nx.Graph()
    graph.add_edges_from(edges)
    ok, _ = nx.check_planarity(graph, counterexample=False)
    return ok


def is_bipartite(edges: Iterable[Edge], n: int) -> bool:
    """True iff the graph contains no odd cycle (BFS 2-coloring)."""
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    color: dict[int, int] = {}
    for start in adj:
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            x = queue.pop()
            for y in adj[x]:
                if y not in color:
                    color[y] = color[x] ^ 1
                    queue.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def is_connected_spanning(edges: Iterable[Edge], n: int) -> bool:
    """True iff the graph is connected and touches all n vertices."""
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    count = 0
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
        count += 1
    if count < n - 1:
        return False
    seen = {0}
    queue = [0]
    while queue:
        x = queue.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == n


def has_min_degree_one(edges: Iterable[Edge], n: int) -> bool:
    """True iff no vertex of K_n is isolated in the graph."""
    covered = 0
    for u, v in edges:
        covered |= (1 << u) | (1 << v)
    return covered == (1 << n) - 1


def _ex_non_planar(n: int) -> int:
    # Below 3 vertices every graph is planar; the formula would go negative.
    return 3 * n - 6 if n >= 3 else edge_count(n)


def _ex_non_bipartite(n: int) -> int:
    return n * n // 4


def _ex_spanning(n: int) -> int:
    return edge_count(n - 1)


def _witness_non_planar(n: int) -> list[Edge]:
    """Maximal planar witness: vertices 0 and 1 joined to everything, plus a
    path through 2..n-1 (a stacked double fan with 3n - 6 edges)."""
    if n < 3:
        return [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = [(0, v) for v in range(1, n)]
    edges += [(1, v) for v in range(2, n)]
    edges += [(v, v + 1) for v in range(2, n - 1)]
    return edges


def _witness_non_bipartite(n: int) -> list[Edge]:
    """Complete balanced bipartite graph, sides {0..ceil(n/2)-1} and the rest."""
    half = (n + 1) // 2
    return [(u, v) for u in range(half) for v in range(half, n)]


def _witness_spanning(n: int) -> list[Edge]:
    """K_{n-1} on vertices 0..n-2, leaving vertex n-1 isolated."""
    return [(u, v) for u in range(n - 1) for v in range(u + 1, n - 1)]


@dataclass(frozen=True)
class LosingProperty:
    """A monotone graph property Avoider must avoid.

    ``check`` never flips true -> false when edges are added.  The witness
    returned by ``extremal_set`` has exactly ``extremal_number`` edges and
    does not satisfy the property.
    """

    id: str
    check: Callable[[Iterable[Edge], int], bool]
    extremal_number: Callable[[int], int]
    extremal_set: Callable[[int], list[Edge]]
    make_tracker: Callable[[int], object]
    tracker_exact: bool


PROPERTIES: dict[str, LosingProperty] = {
    NON_PLANAR: LosingProperty(
        id=NON_PLANAR,
        check=lambda edges, n: not is_planar(edges, n),
        extremal_number=_ex_non_planar,
        extremal_set=_witness_non_planar,
        make_tracker=EdgeBudgetTracker,
        tracker_exact=False,
    ),
    NON_BIPARTITE: LosingProperty(
        id=NON_BIPARTITE,
        check=lambda edges, n: not is_bipartite(edges, n),
        extremal_number=_ex_non_bipartite,
        extremal_set=_witness_non_bipartite,
        make_tracker=OddCycleTracker,
        tracker_exact=True,
    ),
    CONNECTED_SPANNING: LosingProperty(
        id=CONNECTED_SPANNING,
        check=is_connected_spanning,
        extremal_number=_ex_spanning,
        extremal_set=_witness_spanning,
        make_tracker=SpanningTracker,
        tracker_exact=True,
    ),
    MIN_DEGREE_ONE: LosingProperty(
        id=MIN_DEGREE_ONE,
        check=has_min_degree_one,
        extremal_number=_ex_spanning,
        extremal_set=_witness_spanning,
        make_tracker=MinDegreeTracker,
        tracker_exact=True,
    ),
}


def get_property(prop: str | LosingProperty) -> LosingProperty:
    if isinstance(prop, LosingProperty):
        return prop
    try:
        return PROPERTIES[prop]
    except KeyError:
        raise ConfigError(
            f"unknown property {prop!r}; expected one of {', '.join(PROPERTY_IDS)}"
        ) from None


def extremal_number(prop: str | LosingProperty, n: int) -> int:
    return get_property(prop).extremal_number(n)


def extremal_set(prop: str | LosingProperty, n: int) -> list[Edge]:
    return sorted(get_property(prop).extremal_set(n))


def brute_force_extremal(prop: str | LosingProperty, n: int) -> int:
    """Exact extremal number by enumerating every edge subset of K_n.

    Oracle for the closed forms; only subsets larger than the best witness
    so far are actually checked.
    """
    prop = get_property(prop)
    m = edge_count(n)
    if m > BRUTE_FORCE_MAX_EDGES:
        raise CapacityExceededError(
            f"K_{n} has {m} edges; enumeration is capped at {BRUTE_FORCE_MAX_EDGES}"
        )
    all_edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    best = 0
    for mask in range(1 << m):
        size = mask.bit_count()
        if size <= best:
            continue
        subset = [all_edges[i] for i in range(m) if (mask >> i) & 1]
        if not prop.check(subset, n):
            best = size
    return best


def first_satisfied_round(
    prop: str | LosingProperty, n: int, avoider_sequence: list[Edge]
) -> int | None:
    """Smallest r with ``check`` true on the first r Avoider edges, or None.

    Binary search over prefixes, sound because the property is monotone and
    edges are only ever added.  Independent of the incremental trackers.
    """
    prop = get_property(prop)
    total = len(avoider_sequence)
    if total == 0 or not prop.check(avoider_sequence, n):
        return None
    lo, hi = 0, total  # check(seq[:lo]) false, check(seq[:hi]) true
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if prop.check(avoider_sequence[:mid], n):
            hi = mid
        else:
            lo = mid
    return hi
