"""S-coloring data model, the verifier, and partition/lift conversions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .graphs import (
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    bipartition,
    find_odd_cycle,
    induced_subgraph,
    power_graph,
)
from .transforms import SubdividedGraph


class InvalidColoring(ValueError):
    """A coloring fails coverage or packing requirements where validity is required."""


class PartitionWitnessError(ValueError):
    """A tri-partition violates its preconditions; carries a concrete witness."""

    def __init__(self, message: str, witness):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class PackingVector:
    """Non-decreasing positive integers (s_1, ..., s_k); class i is an s_i-packing."""

    s: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.s:
            raise ValueError("packing vector must be nonempty")
        if any(x < 1 for x in self.s):
            raise ValueError("packing entries must be >= 1")
        if any(a > b for a, b in zip(self.s, self.s[1:])):
            raise ValueError("packing entries must be non-decreasing")

    @property
    def k(self) -> int:
        return len(self.s)

    @staticmethod
    def chi_rho(k: int) -> "PackingVector":
        """(1, 2, ..., k), the vector whose colorability defines the invariant."""
        return PackingVector(tuple(range(1, k + 1)))


@dataclass(frozen=True)
class SColoring:
    """Total assignment vertex -> class index 1..k, paired with its packing vector."""

    packing: PackingVector
    class_of: tuple[int, ...]

    def __post_init__(self) -> None:
        k = self.packing.k
        if any(not 1 <= c <= k for c in self.class_of):
            raise ValueError("class index out of range")

    @property
    def n(self) -> int:
        return len(self.class_of)

    def classes(self) -> list[list[int]]:
        """Members per class, 0-indexed list position = class index - 1."""
        out: list[list[int]] = [[] for _ in range(self.packing.k)]
        for v, c in enumerate(self.class_of):
            out[c - 1].append(v)
        return out

    def used_class_count(self) -> int:
        return sum(1 for members in self.classes() if members)


class Violation(NamedTuple):
    class_index: int
    u: int
    v: int
    distance: int


@dataclass(frozen=True)
class TriPartition:
    """Disjoint vertex sets covering V(G); the shape Lemma-style conversions use."""

    v1: frozenset[int]
    v2: frozenset[int]
    v3: frozenset[int]

    def validate_cover(self, n: int) -> None:
        if (
            self.v1 | self.v2 | self.v3 != frozenset(range(n))
            or self.v1 & self.v2
            or self.v1 & self.v3
            or self.v2 & self.v3
        ):
            raise ValueError("sets must partition the vertex set")


def verify_s_coloring(
    g: Graph, c: SColoring, dm: Optional[DistanceMatrix] = None
) -> list[Violation]:
    """Every offending same-class pair (class, u, v, distance); empty means valid.

    Reporting all violations, not just the first, is deliberate: the
    case-heavy constructive colorers are debugged from this output.
    """
    if c.n != g.n:
        raise InvalidColoring(f"coloring covers {c.n} vertices, graph has {g.n}")
    if dm is None:
        dm = all_pairs_distances(g)
    violations = []
    mat = dm.matrix
    for idx, members in enumerate(c.classes()):
        bound = c.packing.s[idx]
        for a in range(len(members)):
            u = members[a]
            row = mat[u]
            for b in range(a + 1, len(members)):
                v = members[b]
                if row[v] <= bound:
                    violations.append(Violation(idx + 1, u, v, int(row[v])))
    return violations


def is_valid_s_coloring(g: Graph, c: SColoring, dm: Optional[DistanceMatrix] = None) -> bool:
    return not verify_s_coloring(g, c, dm)


def require_valid(g: Graph, c: SColoring, dm: Optional[DistanceMatrix] = None) -> None:
    violations = verify_s_coloring(g, c, dm)
    if violations:
        raise InvalidColoring(
            f"coloring rejected; first violation {violations[0]}, {len(violations)} total"
        )


ONE_ONE_TWO_TWO = PackingVector((1, 1, 2, 2))
LIFTED_VECTOR = PackingVector((1, 2, 3, 4, 5))


def partition_to_1122(g: Graph, p: TriPartition) -> SColoring:
    """Build the 4-class coloring (v2, v3, A, B) from a qualifying tri-partition.

    Requires v2 and v3 independent and the square of g restricted to v1
    bipartite; A/B is that bipartition, with the side containing the
    smallest v1 vertex becoming class 3 (deterministic output).
    """
    p.validate_cover(g.n)
    for name, side in (("v2", p.v2), ("v3", p.v3)):
        for u, v in g.edges:
            if u in side and v in side:
                raise PartitionWitnessError(f"{name} is not independent", (u, v))
    class_of = [0] * g.n
    for v in p.v2:
        class_of[v] = 1
    for v in p.v3:
        class_of[v] = 2
    if p.v1:
        square = power_graph(g, 2)
        sub, remap = induced_subgraph(square, sorted(p.v1))
        sides = bipartition(sub)
        if sides is None:
            cycle = find_odd_cycle(sub)
            back = {new: old for old, new in remap.items()}
            raise PartitionWitnessError(
                "square of g restricted to v1 is not bipartite",
                tuple(back[v] for v in (cycle or [])),
            )
        side_a, side_b = sides
        anchor = remap[min(p.v1)]
        if anchor in side_b:
            side_a, side_b = side_b, side_a
        back = {new: old for old, new in remap.items()}
        for v in side_a:
            class_of[back[v]] = 3
        for v in side_b:
            class_of[back[v]] = 4
    coloring = SColoring(ONE_ONE_TWO_TWO, tuple(class_of))
    require_valid(g, coloring)
    return coloring


def coloring_to_partition(g: Graph, c: SColoring) -> TriPartition:
    """Invert the construction: v1 = classes 3 and 4, v2 = class 2, v3 = class 1."""
    if c.packing != ONE_ONE_TWO_TWO:
        raise InvalidColoring("expected a (1,1,2,2)-coloring")
    require_valid(g, c)
    members = c.classes()
    return TriPartition(
        v1=frozenset(members[2]) | frozenset(members[3]),
        v2=frozenset(members[1]),
        v3=frozenset(members[0]),
    )


def lift_to_subdivision(g: Graph, c: SColoring, sg: SubdividedGraph) -> SColoring:
    """Turn a (1,1,2,2)-coloring of g into a (1,2,3,4,5)-coloring of its subdivision.

    All subdivision vertices take class 1 and original class i becomes
    i + 1.  Distances double under one-step subdivision, so independent
    sets become 2- and 3-packings and 2-packings become 4- and 5-packings.
    """
    if c.packing != ONE_ONE_TWO_TWO:
        raise InvalidColoring("expected a (1,1,2,2)-coloring")
    if sg.times != 1 or sg.source_order != g.n or sg.source_edges != g.edges:
        raise ValueError("subdivided graph does not match g subdivided once")
    require_valid(g, c)
    class_of = [1] * sg.graph.n
    for v in range(g.n):
        class_of[v] = c.class_of[v] + 1
    lifted = SColoring(LIFTED_VECTOR, tuple(class_of))
    require_valid(sg.graph, lifted)
    return lifted
