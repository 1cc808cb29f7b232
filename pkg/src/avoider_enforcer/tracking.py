"""Incremental graph-property trackers.

Each tracker consumes one edge at a time and answers whether a monotone
property already holds, in near-constant amortized time.  Trackers are
per-match objects and are never shared.
"""

from __future__ import annotations

from .board import Edge, edge_count


class ComponentTracker:
    """Union-find over n vertices with per-root vertex bitmasks.

    ``components`` drops by exactly one per merging edge and is unchanged
    by an edge inside a component.
    """

    def __init__(self, n: int):
        self.n = n
        self.parent = list(range(n))
        self.rank = [0] * n
        self.mask = [1 << v for v in range(n)]
        self.size = [1] * n
        self.components = n

    def find(self, v: int) -> int:
        parent = self.parent
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    def union(self, u: int, v: int) -> bool:
        """Join the components of u and v; True if they were distinct."""
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            return False
        if self.rank[ru] < self.rank[rv]:
            ru, rv = rv, ru
        elif self.rank[ru] == self.rank[rv]:
            self.rank[ru] += 1
        self.parent[rv] = ru
        self.mask[ru] |= self.mask[rv]
        self.size[ru] += self.size[rv]
        self.components -= 1
        return True

    def same(self, u: int, v: int) -> bool:
        return self.find(u) == self.find(v)

    def component_mask(self, v: int) -> int:
        return self.mask[self.find(v)]


class ParityUnionFind:
    """Union-find with a parity bit per link, detecting odd cycles exactly.

    ``find`` returns (root, parity of the path to the root); an edge between
    two vertices of equal parity in one component closes an odd cycle and
    latches ``odd_cycle``.  Each root carries bitmasks of its two bipartition
    sides, so the unique bipartition of every component is available.
    """

    def __init__(self, n: int):
        self.n = n
        self.parent = list(range(n))
        self.rank = [0] * n
        self.parity = [0] * n
        # sides[root] = [mask of parity-0 vertices, mask of parity-1 vertices]
        self.sides = [[1 << v, 0] for v in range(n)]
        self.size = [1] * n
        self.components = n
        self.odd_cycle = False

    def find(self, v: int) -> tuple[int, int]:
        parent, parity = self.parent, self.parity
        root, p = v, 0
        while parent[root] != root:
            p ^= parity[root]
            root = parent[root]
        # Second pass: point every vertex on the path at the root.
        cur, cp = v, p
        while parent[cur] != root:
            nxt, np_ = parent[cur], parity[cur]
            parent[cur] = root
            parity[cur] = cp
            cp ^= np_
            cur = nxt
        return root, p

    def add_edge(self, u: int, v: int) -> bool:
        """Record edge (u, v); return True if it merged two components.

        An edge forces opposite parities on its endpoints; a same-parity
        edge inside one component sets ``odd_cycle``.
        """
        ru, pu = self.find(u)
        rv, pv = self.find(v)
        if ru == rv:
            if pu == pv:
                self.odd_cycle = True
            return False
        # Parity of the child root relative to the new parent; the formula
        # is symmetric in (u, v), so it survives the rank swap below.
        link = pu ^ pv ^ 1
        if self.rank[ru] < self.rank[rv]:
            ru, rv = rv, ru
        elif self.rank[ru] == self.rank[rv]:
            self.rank[ru] += 1
        self.parent[rv] = ru
        self.parity[rv] = link
        su, sv = self.sides[ru], self.sides[rv]
        su[link] |= sv[0]
        su[link ^ 1] |= sv[1]
        self.size[ru] += self.size[rv]
        self.components -= 1
        return True

    def bipartition(self, v: int) -> tuple[int, int]:
        """(same-side mask, opposite-side mask) of v's component."""
        root, p = self.find(v)
        s = self.sides[root]
        return s[p], s[p ^ 1]

    def component_size(self, v: int) -> int:
        root, _ = self.find(v)
        return self.size[root]


class MinDegreeTracker:
    """Counts vertices not yet covered by any added edge."""

    exact = True

    def __init__(self, n: int):
        self.n = n
        self.covered = 0
        self.uncovered = n

    def add(self, edge: Edge) -> None:
        for v in edge:
            bit = 1 << v
            if not self.covered & bit:
                self.covered |= bit
                self.uncovered -= 1

    def satisfied(self) -> bool:
        return self.uncovered == 0


class SpanningTracker:
    """Satisfied once the added edges form a connected spanning graph."""

    exact = True

    def __init__(self, n: int):
        self.components = ComponentTracker(n)

    def add(self, edge: Edge) -> None:
        self.components.union(*edge)

    def satisfied(self) -> bool:
        return self.components.components == 1


class OddCycleTracker:
    """Satisfied once the added edges contain an odd cycle."""

    exact = True

    def __init__(self, n: int):
        self.puf = ParityUnionFind(n)

    def add(self, edge: Edge) -> None:
        self.puf.add_edge(*edge)

    def satisfied(self) -> bool:
        return self.puf.odd_cycle


class EdgeBudgetTracker:
    """Deferred non-planarity detector.

    ``satisfied`` only reports the certain case (more edges than any planar
    graph on n vertices can carry); the referee resolves the exact first
    non-planar prefix afterwards with full planarity checks, which is valid
    because the property is monotone.
    """

    exact = False

    def __init__(self, n: int):
        self.n = n
        self.count = 0
        # Every graph with more than 3n - 6 edges (n >= 3) is non-planar;
        # below 3 vertices nothing ever is.
        self.budget = 3 * n - 6 if n >= 3 else edge_count(n)

    def add(self, edge: Edge) -> None:
        self.count += 1

    def satisfied(self) -> bool:
        return self.n >= 3 and self.count > self.budget
