"""Isomorph-free corpus of small graphs for exhaustive cross-checks."""

from __future__ import annotations

from functools import lru_cache

from . import backend
from .graphs import Graph

# Published counts of pairwise non-isomorphic graphs, used as a built-in
# self-check of the enumeration (index = vertex count).
ALL_GRAPH_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346)
CONNECTED_GRAPH_COUNTS = (1, 1, 1, 2, 6, 21, 112, 853, 11117)


def mask_from_graph(g: Graph) -> int:
    mask = 0
    for u, v in g.edges:
        mask |= 1 << backend.pair_bit(u, v)
    return mask


def graph_from_mask(n: int, mask: int) -> Graph:
    edges = [
        (i, j)
        for j in range(n)
        for i in range(j)
        if (mask >> backend.pair_bit(i, j)) & 1
    ]
    return Graph.from_edges(n, edges)


def _mask_connected(n: int, mask: int) -> bool:
    if n <= 1:
        return True
    adj = [0] * n
    for j in range(n):
        for i in range(j):
            if (mask >> backend.pair_bit(i, j)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    seen = 1
    frontier = 1
    while frontier:
        v = frontier.bit_length() - 1
        frontier &= ~(1 << v)
        grow = adj[v] & ~seen
        seen |= grow
        frontier |= grow
    return seen == (1 << n) - 1


@lru_cache(maxsize=None)
def all_graph_masks(n: int) -> tuple[int, ...]:
    """Canonical masks of every graph on exactly n vertices, sorted.

    Graphs on n+1 vertices are generated by attaching a new vertex to every
    n-vertex graph with every possible neighborhood; the column-order bit
    layout makes that a single shift-or.  Deduplication is by canonical
    form.
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if n <= 1:
        return (0,)
    shift = (n - 1) * (n - 2) // 2
    out = set()
    for mask in all_graph_masks(n - 1):
        for nb in range(1 << (n - 1)):
            out.add(backend.canon_form(n, mask | (nb << shift)))
    result = tuple(sorted(out))
    if n < len(ALL_GRAPH_COUNTS):
        assert len(result) == ALL_GRAPH_COUNTS[n], (
            f"enumeration produced {len(result)} graphs on {n} vertices, "
            f"expected {ALL_GRAPH_COUNTS[n]}"
        )
    return result


def connected_graph_masks(n: int) -> tuple[int, ...]:
    result = tuple(m for m in all_graph_masks(n) if _mask_connected(n, m))
    if n < len(CONNECTED_GRAPH_COUNTS):
        assert len(result) == CONNECTED_GRAPH_COUNTS[n]
    return result


def connected_graphs_upto(nmax: int):
    """Yield (n, Graph) for every connected graph with 1..nmax vertices."""
    for n in range(1, nmax + 1):
        for mask in connected_graph_masks(n):
            yield n, graph_from_mask(n, mask)
