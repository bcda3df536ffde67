"""(1,1,2,2)-colorings of generalized prisms of two cycles.

The colorer follows the constructive case analysis: relabel the instance so
that the matching pins f(x_1) = y_1 with the images r, s of x_{n-1}, x_n
satisfying r < s, split on the parity of n and of s, pick a help set for
the y-cycle, and distribute the rest by the parity of the matched
positions.  Every case is assembled as a tri-partition and converted (and
thereby machine-checked) through ``partition_to_1122``.

Two case families in the source analysis underdetermine the construction;
they are covered by documented alternates (`*-alt` case ids) and, as a last
resort, by an exact-solver fallback that is flagged in the trace.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from ..coloring import (
    ONE_ONE_TWO_TWO,
    PartitionWitnessError,
    SColoring,
    TriPartition,
    partition_to_1122,
    require_valid,
)
from ..families import PrismSpec, generalized_prism
from ..graphs import Graph, is_petersen
from . import helpsets


@dataclass(frozen=True)
class CaseTrace:
    """Which branch of the case analysis produced the result.

    fallback_used means the branch formulas all failed verification and the
    exact solver supplied the witness; the sweeps count these.
    """

    case_id: str
    fallback_used: bool


@dataclass(frozen=True)
class ColorResult:
    coloring: Optional[SColoring]
    petersen_detected: bool
    trace: CaseTrace


@dataclass(frozen=True)
class _Frame:
    """A relabeling of a prism instance.

    sigma is the matching in the current labels (1-based); x_ids / y_ids
    map current positions/labels back to vertex ids of the original graph,
    so partitions built in frame coordinates transport back exactly.
    """

    sigma: tuple[int, ...]
    x_ids: tuple[int, ...]
    y_ids: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.sigma)

    @property
    def r(self) -> int:
        return self.sigma[-2]

    @property
    def s(self) -> int:
        return self.sigma[-1]

    def inverse(self) -> tuple[int, ...]:
        """inv[j-1] = position whose matched label is j."""
        inv = [0] * self.n
        for pos, label in enumerate(self.sigma, start=1):
            inv[label - 1] = pos
        return tuple(inv)

    def rotate_x(self, t: int) -> "_Frame":
        n = self.n
        idx = [(i + t) % n for i in range(n)]
        return _Frame(
            tuple(self.sigma[j] for j in idx),
            tuple(self.x_ids[j] for j in idx),
            self.y_ids,
        )

    def reflect_x(self) -> "_Frame":
        """Reverse the x-cycle about position n (positions i and n-i swap)."""
        n = self.n
        idx = [n - 2 - j for j in range(n - 1)] + [n - 1]
        return _Frame(
            tuple(self.sigma[j] for j in idx),
            tuple(self.x_ids[j] for j in idx),
            self.y_ids,
        )

    def rotate_y(self, shift: int) -> "_Frame":
        n = self.n
        sigma = tuple((label - 1 - shift) % n + 1 for label in self.sigma)
        y_ids = tuple(self.y_ids[(j + shift) % n] for j in range(n))
        return _Frame(sigma, self.x_ids, y_ids)

    def reflect_y(self) -> "_Frame":
        """Reverse the y-cycle fixing label 1 (labels j and n+2-j swap)."""
        n = self.n
        sigma = tuple(1 if label == 1 else n + 2 - label for label in self.sigma)
        y_ids = tuple(self.y_ids[0] if j == 0 else self.y_ids[n - j] for j in range(n))
        return _Frame(sigma, self.x_ids, y_ids)

    def normalized(self) -> "_Frame":
        f = self.rotate_y(self.sigma[0] - 1)
        if f.r > f.s:
            f = f.reflect_y()
        return f

    def redirected(self) -> "_Frame":
        """Reflect the x-cycle and renormalize: (r, s) becomes (r, n+1+r-s)."""
        return self.reflect_x().normalized()


def _base_frame(spec: PrismSpec) -> _Frame:
    n = spec.n
    return _Frame(spec.sigma, tuple(range(n)), tuple(range(n, 2 * n)))


def _frames(spec: PrismSpec) -> Iterator[_Frame]:
    base = _base_frame(spec)
    for flip in (False, True):
        f = base.reflect_x() if flip else base
        for t in range(spec.n):
            yield f.rotate_x(t).normalized()


def _assemble(frame: _Frame, y1_labels: frozenset[int], forced: dict[int, int],
              x1_has_anchor: bool) -> TriPartition:
    """V1 = (x_n if anchored) + the chosen y-labels; everything else goes to
    V2/V3 by position parity, matched y-vertices crosswise, forced labels
    overriding."""
    n = frame.n
    inv = frame.inverse()
    v1 = {frame.y_ids[j - 1] for j in y1_labels}
    v2, v3 = set(), set()
    last = n - 1 if x1_has_anchor else n
    if x1_has_anchor:
        v1.add(frame.x_ids[n - 1])
    for i in range(1, last + 1):
        (v2 if i % 2 == 1 else v3).add(frame.x_ids[i - 1])
    for j in range(1, n + 1):
        if j in y1_labels:
            continue
        side = forced.get(j)
        if side is None:
            pos = inv[j - 1]
            if pos == n and x1_has_anchor:
                raise AssertionError("the label matched to x_n must be forced")
            side = 2 if pos % 2 == 0 else 3
        (v2 if side == 2 else v3).add(frame.y_ids[j - 1])
    return TriPartition(frozenset(v1), frozenset(v2), frozenset(v3))


def _other(side: int) -> int:
    return 5 - side


def _natural(frame: _Frame, label: int) -> int:
    pos = frame.inverse()[label - 1]
    return 2 if pos % 2 == 0 else 3


def _even_partition(frame: _Frame) -> TriPartition:
    return _assemble(frame, helpsets.set_a1(frame.n), {}, x1_has_anchor=False)


_CaseChoice = tuple[_Frame, frozenset[int], dict[int, int], str]


def _dispatch_odd(frame: _Frame, depth: int = 0) -> Optional[_CaseChoice]:
    """Pick the case formula for an odd-length frame (n >= 7), redirecting
    through the x-reflection where the straight formula would close an odd
    cycle through x_n.  Returns None only if redirection fails to settle."""
    n, r, s = frame.n, frame.r, frame.s
    if depth > 4:
        return None
    if s % 2 == 1:
        if s != n and r % 2 == 1:
            y1 = helpsets.set_a5(n, s)
            forced = {s: _other(_natural(frame, s + 1))}
            return frame, y1, forced, "odd/s-odd-r-odd"
        if s == n:
            if r % 2 == 1 or (n - 1 - r) % 4 == 0:
                y1 = frozenset(range(2, n, 2))
                return frame, y1, {s: 2}, "odd/s-last"
            return _dispatch_odd(frame.redirected(), depth + 1)
        # r even, s odd, s < n
        if r >= 4 or (n - s) % 4 == 2:
            y1 = (
                frozenset(range(3, s - 1, 2))
                | frozenset({2, s + 1})
                | frozenset(range(s + 2, n + 1, 2))
            )
            forced = {s: _other(_natural(frame, s - 1))}
            return frame, y1, forced, "odd/s-odd-r-even"
        if (s - 3) % 4 == 0:
            # r = 2 with n = s mod 4: the stock set closes an odd cycle, but
            # the s-odd-r-odd shape keeps x_n on a path end here.
            y1 = helpsets.set_a5(n, s)
            forced = {s: _other(_natural(frame, s + 1))}
            return frame, y1, forced, "odd/s-odd-r-even-alt"
        return _dispatch_odd(frame.redirected(), depth + 1)
    # s even
    if r % 2 == 1:
        return _dispatch_odd(frame.redirected(), depth + 1)
    if r == 2:
        if s < n - 1:
            y1 = (
                frozenset({s + 2})
                | frozenset(range(s + 3, n + 1, 2))
                | frozenset(range(3, s, 2))
            )
            forced = {s: _other(_natural(frame, s + 1))}
            return frame, y1, forced, "odd/s-even-r2"
        return _dispatch_odd(frame.redirected(), depth + 1)
    if s <= n - 3:
        y1 = helpsets.set_a3(n, s)
        forced = {s: _other(_natural(frame, s + 1))}
        return frame, y1, forced, "odd/s-even-mid"
    # s = n - 1
    if n % 4 == 1 or r % 4 == 0:
        y1 = helpsets.set_a4(n, n - 1)
        case = "odd/s-even-last"
    else:
        # n = 3 mod 4 with r = 2 mod 4: the stock last-index set closes an
        # odd cycle through x_n; use the transplanted shape instead.
        y1 = helpsets.set_a4_alt(n)
        case = "odd/s-even-last-alt"
    forced = {s: _other(_natural(frame, s - 1))}
    return frame, y1, forced, case


def _triangle_coloring(spec: PrismSpec, g: Graph) -> SColoring:
    """Any prism over a triangle: two crossing independent pairs plus two
    singleton 2-packings."""
    y_of = {i: spec.sigma[i - 1] for i in (1, 2, 3)}
    a = min(j for j in (1, 2, 3) if j != y_of[1])
    b = min(j for j in (1, 2, 3) if j not in (y_of[2], a))
    c = next(j for j in (1, 2, 3) if j not in (a, b))
    class_of = [0] * 6
    class_of[spec.x_id(1)] = 1
    class_of[spec.y_id(a) ] = 1
    class_of[spec.x_id(2)] = 2
    class_of[spec.y_id(b)] = 2
    class_of[spec.x_id(3)] = 3
    class_of[spec.y_id(c)] = 4
    coloring = SColoring(ONE_ONE_TWO_TWO, tuple(class_of))
    require_valid(g, coloring)
    return coloring


# Pentagon instances, keyed by normalized matching.  Values are the
# partition side (1, 2, 3) of x_1..x_5 followed by y_1..y_5.  The
# (1, 2, 5, 3, 4) entry is the transcribed published example; the others
# were derived once with the exact solver and are re-verified on every use.
_PENTAGON_TABLE: dict[tuple[int, ...], tuple[tuple[int, ...], tuple[int, ...]]] = {
    (1, 2, 5, 3, 4): ((2, 3, 1, 2, 3), (3, 2, 3, 2, 1)),
    (1, 2, 3, 4, 5): ((3, 2, 3, 2, 1), (2, 3, 2, 3, 1)),
    (1, 2, 4, 3, 5): ((3, 2, 3, 2, 1), (2, 3, 1, 2, 3)),
}


def _pentagon(spec: PrismSpec, g: Graph) -> ColorResult:
    for frame in _frames(spec):
        entry = _PENTAGON_TABLE.get(frame.sigma)
        if entry is None:
            continue
        x_sides, y_sides = entry
        v1, v2, v3 = set(), set(), set()
        buckets = {1: v1, 2: v2, 3: v3}
        for pos in range(1, 6):
            buckets[x_sides[pos - 1]].add(frame.x_ids[pos - 1])
        for label in range(1, 6):
            buckets[y_sides[label - 1]].add(frame.y_ids[label - 1])
        part = TriPartition(frozenset(v1), frozenset(v2), frozenset(v3))
        coloring = partition_to_1122(g, part)
        case = "pentagon/stored" if frame.sigma == (1, 2, 5, 3, 4) else "pentagon/table"
        return ColorResult(coloring, False, CaseTrace(case, False))
    return _solver_fallback(g, "pentagon")


def _solver_fallback(g: Graph, origin: str) -> ColorResult:
    from ..solver import SearchConfig, s_colorable

    witness = s_colorable(g, ONE_ONE_TWO_TWO, SearchConfig(deterministic=True))
    if witness is None:
        raise RuntimeError(
            f"no (1,1,2,2)-coloring exists on a non-Petersen prism ({origin}); "
            "this contradicts the structure theorem"
        )
    return ColorResult(witness, False, CaseTrace(f"fallback/{origin}", True))


def color_prism_1122(spec: PrismSpec) -> ColorResult:
    """A verifier-accepted (1,1,2,2)-coloring of the prism, or the Petersen flag."""
    g = generalized_prism(spec)
    if is_petersen(g):
        return ColorResult(None, True, CaseTrace("petersen", False))
    n = spec.n
    if n == 3:
        return ColorResult(
            _triangle_coloring(spec, g), False, CaseTrace("triangle", False)
        )
    if n % 2 == 0:
        frame = _base_frame(spec).normalized()
        coloring = partition_to_1122(g, _even_partition(frame))
        return ColorResult(coloring, False, CaseTrace("even-cycle", False))
    if n == 5:
        return _pentagon(spec, g)

    primary = _dispatch_odd(_base_frame(spec).normalized())
    tried = []
    if primary is not None:
        tried.append(primary)
    for frame in _frames(spec):
        choice = _dispatch_odd(frame)
        if choice is not None:
            tried.append(choice)
    for frame, y1, forced, case_id in tried:
        try:
            part = _assemble(frame, y1, forced, x1_has_anchor=True)
            coloring = partition_to_1122(g, part)
            return ColorResult(coloring, False, CaseTrace(case_id, False))
        except PartitionWitnessError:
            continue
    return _solver_fallback(g, "prism")
