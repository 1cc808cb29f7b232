"""Shared independent oracles for the test suite.

These deliberately avoid the package's incremental trackers and memoized
solver so that tests compare two genuinely different routes.
"""

from __future__ import annotations

import itertools

import pytest

from avoider_enforcer import Player, edge_count


def bfs_bipartite(edges, n):
    """2-coloring by DFS over an adjacency dict; no union-find involved."""
    adj = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    color = {}
    for s in adj:
        if s in color:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in color:
                    color[y] = color[x] ^ 1
                    stack.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def bfs_component_count(edges, n):
    adj = {v: [] for v in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = set()
    comps = 0
    for s in range(n):
        if s in seen:
            continue
        comps += 1
        seen.add(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return comps


def isolated_count(edges, n):
    covered = set()
    for u, v in edges:
        covered.add(u)
        covered.add(v)
    return n - len(covered)


def all_edges(n):
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def first_loss_by_scan(check, n, avoider_sequence):
    """Linear-scan oracle for the first satisfied prefix."""
    for r in range(1, len(avoider_sequence) + 1):
        if check(avoider_sequence[:r], n):
            return r
    return None


def plain_minimax(n, check):
    """Memo-free, pruning-free game value; oracle for the packed solver.

    Returns the first-loss round under optimal play, or None if Avoider
    can always survive.  Exponential: keep n <= 4.
    """
    edges = all_edges(n)
    infinite = 10**6

    def rec(avoider, enforcer):
        claimed = avoider | enforcer
        remaining = [e for e in edges if e not in claimed]
        if not remaining:
            return infinite
        if len(avoider) == len(enforcer):  # Avoider's turn
            best = -1
            for e in remaining:
                nxt = avoider | {e}
                value = len(nxt) if check(nxt, n) else rec(nxt, enforcer)
                best = max(best, value)
            return best
        return min(rec(avoider, enforcer | {e}) for e in remaining)

    value = rec(frozenset(), frozenset())
    return None if value == infinite else value


def enumerate_matches(n, avoider_policy, enforcer_policy):
    """Yield the avoider edge sequence of every distinct play order where
    each side follows its policy; policies returning None branch over all
    unclaimed edges."""
    edges = all_edges(n)

    def walk(avoider, enforcer, order):
        claimed = set(avoider) | set(enforcer)
        remaining = [e for e in edges if e not in claimed]
        if not remaining:
            yield list(avoider)
            return
        to_move = Player.AVOIDER if len(avoider) == len(enforcer) else Player.ENFORCER
        policy = avoider_policy if to_move is Player.AVOIDER else enforcer_policy
        pick = policy(avoider, enforcer, remaining) if policy else None
        options = [pick] if pick is not None else remaining
        for e in options:
            if to_move is Player.AVOIDER:
                yield from walk(avoider + [e], enforcer, order + [e])
            else:
                yield from walk(avoider, enforcer + [e], order + [e])

    yield from walk([], [], [])


@pytest.fixture
def rng_seeds():
    return list(range(20))
