"""Edge subdivision with deterministic ids and per-vertex provenance tags."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .graphs import Graph


@dataclass(frozen=True)
class OriginalTag:
    vertex: int


@dataclass(frozen=True)
class SubdivisionTag:
    edge_index: int  # index into the source graph's canonical edge order
    position: int    # 1..times, counted from the endpoint with smaller id


Tag = Union[OriginalTag, SubdivisionTag]


@dataclass(frozen=True)
class SubdividedGraph:
    """A graph produced by subdividing every source edge the same number of times.

    Original vertices keep their ids; the internal vertices of the path that
    replaced edge number e occupy the contiguous block starting at
    ``source_order + e * times``, ordered away from the smaller endpoint.
    That layout is deterministic, so stored witness colorings keyed by id
    reproduce exactly.
    """

    graph: Graph
    times: int
    source_order: int
    source_edges: tuple[tuple[int, int], ...]

    @property
    def source_edge_count(self) -> int:
        return len(self.source_edges)

    def subdivision_vertex(self, edge_index: int, position: int) -> int:
        if not 1 <= position <= self.times:
            raise ValueError(f"position must be in 1..{self.times}")
        if not 0 <= edge_index < len(self.source_edges):
            raise ValueError("edge index out of range")
        return self.source_order + edge_index * self.times + (position - 1)

    def subdivision_vertex_from(self, x: int, y: int, position: int) -> int:
        """Position-th internal vertex counted from endpoint x of edge xy."""
        e = (x, y) if x < y else (y, x)
        edge_index = self.source_edges.index(e)
        if x < y:
            return self.subdivision_vertex(edge_index, position)
        return self.subdivision_vertex(edge_index, self.times - position + 1)

    def tag_of(self, v: int) -> Tag:
        if v < self.source_order:
            return OriginalTag(v)
        offset = v - self.source_order
        return SubdivisionTag(offset // self.times, offset % self.times + 1)

    def is_subdivision_vertex(self, v: int) -> bool:
        return v >= self.source_order

    def original_vertices(self) -> range:
        return range(self.source_order)

    def subdivision_vertices(self) -> range:
        return range(self.source_order, self.graph.n)


def subdivide(g: Graph, times: int) -> SubdividedGraph:
    """Replace every edge of g by a path with `times` internal vertices."""
    if times < 1:
        raise ValueError("subdivision count must be >= 1")
    n = g.n
    edges = []
    for e, (u, v) in enumerate(g.edges):
        chain = [u] + [n + e * times + p for p in range(times)] + [v]
        edges.extend((chain[a], chain[a + 1]) for a in range(len(chain) - 1))
    return SubdividedGraph(
        graph=Graph.from_edges(n + times * g.m, edges),
        times=times,
        source_order=n,
        source_edges=g.edges,
    )
