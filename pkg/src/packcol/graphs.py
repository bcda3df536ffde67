"""Immutable simple graphs with distance, power, packing and structural queries."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

# Sentinel for "no path".  Large enough to compare above any hop count,
# small enough that sums of two of them stay inside int64.
UNREACHABLE = 2**31


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on dense vertex ids 0..n-1.

    Edges are stored as a sorted tuple of (u, v) pairs with u < v, and the
    adjacency lists are sorted ascending, so iteration order is canonical.
    Instances are immutable and safe to share across workers.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(repr=False)

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        sorted_edges = tuple(sorted(seen))
        neighbors: list[list[int]] = [[] for _ in range(n)]
        for u, v in sorted_edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        return Graph(n, sorted_edges, tuple(tuple(sorted(a)) for a in neighbors))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(a) for a in self.adj))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def vertices(self) -> range:
        return range(self.n)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = [False] * self.n
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            u = stack.pop()
            for w in self.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == self.n


@dataclass(frozen=True)
class DistanceMatrix:
    """Dense all-pairs hop-count matrix; UNREACHABLE marks disconnected pairs."""

    matrix: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "matrix", np.ascontiguousarray(self.matrix, dtype=np.int64))

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def dist(self, u: int, v: int) -> int:
        return int(self.matrix[u, v])

    def diameter(self) -> int:
        """Largest finite entry; 0 for the empty or single-vertex graph."""
        finite = self.matrix[self.matrix < UNREACHABLE]
        return int(finite.max()) if finite.size else 0

    def eccentricity(self, v: int) -> int:
        row = self.matrix[v]
        finite = row[row < UNREACHABLE]
        return int(finite.max()) if finite.size else 0


def _bfs_row(g: Graph, source: int, out: np.ndarray) -> None:
    out.fill(UNREACHABLE)
    out[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = out[u]
        for w in g.adj[u]:
            if out[w] == UNREACHABLE:
                out[w] = du + 1
                queue.append(w)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex into a dense matrix (O(1) pair queries)."""
    mat = np.empty((g.n, g.n), dtype=np.int64)
    for s in range(g.n):
        _bfs_row(g, s, mat[s])
    return DistanceMatrix(mat)


def power_graph(g: Graph, d: int, dm: Optional[DistanceMatrix] = None) -> Graph:
    """Graph on the same vertices with uv an edge iff 0 < dist_g(u,v) <= d."""
    if d < 1:
        raise ValueError("power exponent must be >= 1")
    if dm is None:
        dm = all_pairs_distances(g)
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if dm.matrix[u, v] <= d
    ]
    return Graph.from_edges(g.n, edges)


def is_i_packing(g: Graph, w: Iterable[int], i: int, dm: Optional[DistanceMatrix] = None) -> bool:
    """True iff all distinct vertices of w are pairwise at distance > i in g."""
    if i < 1:
        raise ValueError("packing parameter must be >= 1")
    ws = sorted(set(w))
    for v in ws:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    if dm is None:
        dm = all_pairs_distances(g)
    for a in range(len(ws)):
        for b in range(a + 1, len(ws)):
            if dm.matrix[ws[a], ws[b]] <= i:
                return False
    return True


def bipartition(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """Two-color g if possible, else None.

    Disconnected graphs are allowed; the first (lowest-id) vertex of every
    component lands in side A, which makes the output deterministic.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    side_a = frozenset(v for v in range(g.n) if color[v] == 0)
    side_b = frozenset(v for v in range(g.n) if color[v] == 1)
    return side_a, side_b


def find_odd_cycle(g: Graph) -> Optional[list[int]]:
    """Return the vertex sequence of some odd cycle, or None if bipartite."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    # Same BFS color on an edge: close the cycle through
                    # the lowest common ancestor of u and w.
                    ancestors = []
                    a = u
                    while a != -1:
                        ancestors.append(a)
                        a = parent[a]
                    position = {v: k for k, v in enumerate(ancestors)}
                    tail = []
                    b = w
                    while b not in position:
                        tail.append(b)
                        b = parent[b]
                    return ancestors[: position[b] + 1] + tail[::-1]
    return None


def girth(g: Graph) -> int:
    """Length of a shortest cycle; UNREACHABLE if the graph is a forest."""
    best = UNREACHABLE
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best - 1:
                continue
            for w in g.adj[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    cycle = dist[u] + dist[w] + 1
                    if cycle < best:
                        best = cycle
    return best


def is_petersen(g: Graph) -> bool:
    """Order-10 cubic graph of girth 5: the unique (3,5)-cage.

    The cage characterization is exact for this property and avoids a
    general isomorphism test.
    """
    if g.n != 10 or g.m != 15:
        return False
    if any(g.degree(v) != 3 for v in range(10)):
        return False
    return girth(g) == 5


def induced_subgraph(g: Graph, keep: Sequence[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on `keep` (relabeled 0..k-1) plus old->new id map."""
    order = sorted(set(keep))
    remap = {old: new for new, old in enumerate(order)}
    edges = [
        (remap[u], remap[v])
        for u, v in g.edges
        if u in remap and v in remap
    ]
    return Graph.from_edges(len(order), edges), remap
