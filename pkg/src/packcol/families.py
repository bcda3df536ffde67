"""Generators for the labeled graph families the colorers consume."""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import NamedTuple

from .graphs import Graph


class HypothesisViolation(ValueError):
    """A structural hypothesis required by a colorer does not hold."""


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least 1 vertex")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_tripartite(n: int) -> Graph:
    """K_{n,n,n} with parts {0..n-1}, {n..2n-1}, {2n..3n-1}."""
    if n < 1:
        raise ValueError("part size must be >= 1")
    parts = [range(0, n), range(n, 2 * n), range(2 * n, 3 * n)]
    edges = []
    for a in range(3):
        for b in range(a + 1, 3):
            edges.extend((u, v) for u in parts[a] for v in parts[b])
    return Graph.from_edges(3 * n, edges)


def star(n: int) -> Graph:
    """K_{1,n}: center 0, leaves 1..n."""
    if n < 1:
        raise ValueError("star needs at least 1 leaf")
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


@dataclass(frozen=True)
class PrismSpec:
    """Two n-cycles x_1..x_n and y_1..y_n joined by the matching x_i -- y_{sigma(i)}.

    ``sigma`` is 1-based to match the usual cycle-index notation; the built
    graph uses ids 0..n-1 for the x-cycle and n..2n-1 for the y-cycle.
    """

    n: int
    sigma: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError("prism cycles need length >= 3")
        if sorted(self.sigma) != list(range(1, self.n + 1)):
            raise ValueError("sigma must be a permutation of 1..n")

    def x_id(self, i: int) -> int:
        return i - 1

    def y_id(self, j: int) -> int:
        return self.n + j - 1


def generalized_prism(spec: PrismSpec) -> Graph:
    n = spec.n
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + j, n + (j + 1) % n) for j in range(n)]
    edges += [(spec.x_id(i), spec.y_id(spec.sigma[i - 1])) for i in range(1, n + 1)]
    return Graph.from_edges(2 * n, edges)


class GeneralizedPetersen(NamedTuple):
    graph: Graph
    inner_cycles: tuple[tuple[int, ...], ...]  # graph ids, one tuple per inner cycle


def generalized_petersen(n: int, k: int) -> GeneralizedPetersen:
    """P(n,k): outer n-cycle 0..n-1, spokes, inner step-k cycles on n..2n-1.

    The inner vertex set splits into gcd(n,k) cycles of length n/gcd(n,k),
    listed in traversal order starting from each unvisited lowest id.
    """
    if k < 1 or 2 * k >= n:
        raise ValueError("generalized Petersen graph requires 1 <= k < n/2")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    edges += [(n + i, n + (i + k) % n) for i in range(n)]
    g = Graph.from_edges(2 * n, edges)
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        walk = []
        cur = start
        while not seen[cur]:
            seen[cur] = True
            walk.append(n + cur)
            cur = (cur + k) % n
        cycles.append(tuple(walk))
    return GeneralizedPetersen(g, tuple(cycles))


@dataclass(frozen=True)
class TwoFactorSpec:
    """A cubic graph given as a distinguished n-cycle C, a union of cycles
    covering the other n vertices, and a perfect matching between the two.

    ``matching[i-1] = j`` pairs x_i (the i-th C-vertex) with the j-th
    z-vertex, counting 1-based through the concatenated cycles Z_1, Z_2, ...
    in order.  Built ids: C on 0..n-1, z-vertices on n..2n-1 in that same
    concatenated order.
    """

    n: int
    z_lengths: tuple[int, ...]
    matching: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError("distinguished cycle needs length >= 3")
        if any(p < 3 for p in self.z_lengths):
            raise ValueError("every cycle needs length >= 3")
        if sum(self.z_lengths) != self.n:
            raise ValueError("cycle lengths must sum to the length of C")
        if sorted(self.matching) != list(range(1, self.n + 1)):
            raise ValueError("matching must be a bijection onto the z-vertices")

    def x_id(self, i: int) -> int:
        return i - 1

    def z_id(self, j: int) -> int:
        """Graph id of the j-th z-vertex (1-based, concatenated order)."""
        return self.n + j - 1

    def z_cycle_ranges(self) -> list[tuple[int, int]]:
        """Per cycle, the (start, stop) 1-based z-index range, stop exclusive."""
        ranges = []
        at = 1
        for p in self.z_lengths:
            ranges.append((at, at + p))
            at += p
        return ranges

    def cycle_of_z(self, j: int) -> int:
        at = 1
        for idx, p in enumerate(self.z_lengths):
            if j < at + p:
                return idx
            at += p
        raise ValueError(f"z-index {j} out of range")


def two_factor_graph(spec: TwoFactorSpec) -> Graph:
    n = spec.n
    edges = [(i, (i + 1) % n) for i in range(n)]
    for start, stop in spec.z_cycle_ranges():
        ids = [spec.z_id(j) for j in range(start, stop)]
        edges += [(ids[a], ids[(a + 1) % len(ids)]) for a in range(len(ids))]
    edges += [(spec.x_id(i), spec.z_id(spec.matching[i - 1])) for i in range(1, n + 1)]
    return Graph.from_edges(2 * n, edges)


def prism_spec_from_two_factor(spec: TwoFactorSpec) -> PrismSpec:
    if len(spec.z_lengths) != 1:
        raise ValueError("only a single-cycle spec reduces to a prism")
    return PrismSpec(spec.n, spec.matching)


def two_factor_spec_from_gpg(n: int, k: int) -> TwoFactorSpec:
    """Outer cycle + inner cycles + spokes of P(n,k) as a TwoFactorSpec."""
    gp = generalized_petersen(n, k)
    flat: list[int] = []
    for cyc in gp.inner_cycles:
        flat.extend(cyc)
    position = {vid: idx + 1 for idx, vid in enumerate(flat)}
    matching = tuple(position[n + i] for i in range(n))
    z_lengths = tuple(len(c) for c in gp.inner_cycles)
    return TwoFactorSpec(n, z_lengths, matching)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree from a seeded Pruefer sequence."""
    if n < 1:
        raise ValueError("tree needs at least 1 vertex")
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    a = heapq.heappop(leaves)
    b = heapq.heappop(leaves)
    edges.append((a, b))
    return Graph.from_edges(n, edges)


def is_tree(g: Graph) -> bool:
    return g.is_connected() and g.m == g.n - 1
