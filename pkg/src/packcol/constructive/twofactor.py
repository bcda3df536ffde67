"""(1,1,2,2)-colorings of cubic graphs given as a distinguished cycle plus a
union of cycles joined by a perfect matching.

Extends the prism construction: the distinguished cycle contributes the
position-parity classes with x_n reserved, the remaining cycles receive
help sets whose complements are independent, and the one cycle that may be
odd (preferring a 5-cycle) gets the pair-splitting treatment around the
vertex matched to x_n.  Single-cycle specs delegate to the prism colorer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from ..coloring import (
    ONE_ONE_TWO_TWO,
    PartitionWitnessError,
    TriPartition,
    partition_to_1122,
)
from ..families import (
    HypothesisViolation,
    TwoFactorSpec,
    generalized_petersen,
    prism_spec_from_two_factor,
    two_factor_graph,
    two_factor_spec_from_gpg,
)
from ..graphs import Graph
from . import helpsets
from .prisms import CaseTrace, ColorResult, color_prism_1122


@dataclass(frozen=True)
class _Anchor:
    """A rotation/reflection of the distinguished cycle; z-side untouched."""

    x_ids: tuple[int, ...]  # position (1-based) -> graph id
    match: tuple[int, ...]  # position (1-based) -> matched z graph id


def _anchors(spec: TwoFactorSpec) -> Iterator[_Anchor]:
    n = spec.n
    base_x = tuple(range(n))
    base_m = tuple(spec.z_id(spec.matching[i]) for i in range(n))
    for flip in (False, True):
        if flip:
            idx0 = [n - 2 - j for j in range(n - 1)] + [n - 1]
        else:
            idx0 = list(range(n))
        for t in range(n):
            idx = [idx0[(j + t) % n] for j in range(n)]
            yield _Anchor(
                tuple(base_x[j] for j in idx), tuple(base_m[j] for j in idx)
            )


def _labeling(cyc: tuple[int, ...], t: int, d: int) -> tuple[int, ...]:
    """label ell (1-based) -> graph id, walking the cycle from offset t with
    step d in {+1, -1}."""
    p = len(cyc)
    return tuple(cyc[(t + d * ell) % p] for ell in range(p))


def _safe_labeling(
    cyc: tuple[int, ...], specials: set[int]
) -> tuple[tuple[int, ...], frozenset[int]]:
    """Choose a labeling whose help set keeps the bridge endpoints harmless.

    x_n can reach up to two vertices of this cycle in the square (the ones
    matched to x_1 and x_{n-1}); if both land inside the help set they must
    sit on the same side of its bipartition, otherwise the attachment would
    close an odd cycle.  Scans rotations and directions for the first safe
    labeling; the caller verifies the final partition regardless.
    """
    p = len(cyc)
    t_labels = helpsets.zero_pair_set(p)
    fallback = None
    for d in (1, -1):
        for t in range(p):
            lab = _labeling(cyc, t, d)
            inside = [ell for ell in t_labels if lab[ell - 1] in specials]
            if len(inside) <= 1:
                return lab, t_labels
            if fallback is None:
                side = helpsets.square_two_coloring(p, t_labels)
                if len({side[ell] for ell in inside}) == 1:
                    fallback = lab
    if fallback is not None:
        return fallback, t_labels
    return _labeling(cyc, 0, 1), t_labels


def _assemble(
    n: int,
    anchor: _Anchor,
    t_ids: set[int],
    forced: dict[int, int],
    anchored: bool,
) -> TriPartition:
    pos_of = {anchor.match[i - 1]: i for i in range(1, n + 1)}
    v1 = set(t_ids)
    v2, v3 = set(), set()
    last = n - 1 if anchored else n
    if anchored:
        v1.add(anchor.x_ids[n - 1])
    for i in range(1, last + 1):
        (v2 if i % 2 == 1 else v3).add(anchor.x_ids[i - 1])
    for zid in anchor.match:
        if zid in t_ids:
            continue
        side = forced.get(zid)
        if side is None:
            pos = pos_of[zid]
            if pos == n and anchored:
                raise AssertionError("the vertex matched to x_n must be forced")
            side = 2 if pos % 2 == 0 else 3
        (v2 if side == 2 else v3).add(zid)
    return TriPartition(frozenset(v1), frozenset(v2), frozenset(v3))


def _z_cycles(spec: TwoFactorSpec) -> list[tuple[int, ...]]:
    return [
        tuple(spec.z_id(j) for j in range(start, stop))
        for start, stop in spec.z_cycle_ranges()
    ]


def _natural_side(pos: int) -> int:
    return 2 if pos % 2 == 0 else 3


def _distinguished_options(
    cyc: tuple[int, ...], anchor: _Anchor, n: int
) -> Iterator[tuple[frozenset[int], dict[int, int], str]]:
    """Ways to label the odd cycle holding f(x_n) and pick its help set.

    Yields (help-set graph ids, forced sides keyed by graph id, case id).
    The forced sides split the one adjacent pair escaping the help set: the
    partner follows the parity of its own matched position and the vertex
    matched to x_n takes the opposite side.
    """
    p = len(cyc)
    free_id = anchor.match[n - 1]  # f(x_n)
    x1_id = anchor.match[0]  # f(x_1)
    pos_of = {anchor.match[i - 1]: i for i in range(1, n + 1)}
    adjacent = x1_id in cyc

    def emit(lab, t_labels, free_label, partner_label, case):
        ids = {lab[ell - 1] for ell in t_labels}
        partner_side = _natural_side(pos_of[lab[partner_label - 1]])
        forced = {lab[free_label - 1]: 5 - partner_side}
        return ids, forced, case

    if adjacent:
        start = cyc.index(x1_id)
        for d in (1, -1):
            lab = _labeling(cyc, start, d)  # label 1 = f(x_1)
            s = lab.index(free_id) + 1
            if p == 5:
                if s in (4, 5):
                    t_labels = frozenset({2, 5}) if s == 4 else frozenset({2, 4})
                    partner = 3 if s == 4 else 1
                    yield emit(lab, t_labels, s, partner, "two-factor/five-adjacent")
            elif s == 2:
                yield emit(
                    lab, helpsets.set_a5_start(p), 2, 1, "two-factor/odd-adjacent"
                )
            elif 3 <= s <= p - 1:
                if s % 2 == 1:
                    t_labels = helpsets.set_a5(p, s)
                    partner = s + 1
                elif s <= p - 3:
                    t_labels = helpsets.set_a3(p, s)
                    partner = s + 1
                else:
                    t_labels = helpsets.set_a4(p, p - 1)
                    partner = s - 1
                yield emit(lab, t_labels, s, partner, "two-factor/odd-adjacent")
    else:
        start = cyc.index(free_id)
        for d in (1, -1):
            if p == 5:
                lab = _labeling(cyc, start, d)  # label 1 = f(x_n)
                yield emit(lab, frozenset({2, 4}), 1, 5, "two-factor/five-remote")
            elif p == 3:
                lab = _labeling(cyc, start, d)
                yield emit(lab, frozenset({3}), 1, 2, "two-factor/odd-remote")
            else:
                lab = _labeling(cyc, (start - 2 * d) % p, d)  # label 3 = f(x_n)
                yield emit(
                    lab, helpsets.set_a5(p, 3), 3, 4, "two-factor/odd-remote"
                )


def _all_even(spec: TwoFactorSpec, g: Graph) -> ColorResult:
    n = spec.n
    t_ids: set[int] = set()
    for cyc in _z_cycles(spec):
        lab = _labeling(cyc, 0, 1)
        t_ids.update(lab[ell - 1] for ell in helpsets.zero_pair_set(len(cyc)))
    anchor = next(iter(_anchors(spec)))
    part = _assemble(n, anchor, t_ids, {}, anchored=False)
    coloring = partition_to_1122(g, part)
    return ColorResult(coloring, False, CaseTrace("two-factor/all-even", False))


def _solver_fallback(g: Graph, origin: str) -> ColorResult:
    from ..solver import SearchConfig, s_colorable

    witness = s_colorable(g, ONE_ONE_TWO_TWO, SearchConfig(deterministic=True))
    if witness is None:
        raise RuntimeError(
            f"no (1,1,2,2)-coloring found for a spec satisfying the "
            f"two-factor hypotheses ({origin})"
        )
    return ColorResult(witness, False, CaseTrace(f"fallback/{origin}", True))


def color_two_factor_1122(spec: TwoFactorSpec) -> ColorResult:
    """A verifier-accepted (1,1,2,2)-coloring of the two-factor graph.

    Rejects specs with more than one 5-cycle among the non-distinguished
    cycles (outside the structure theorem's hypotheses).  Single-cycle
    specs return exactly what the prism colorer returns, including the
    Petersen flag.
    """
    fives = sum(1 for p in spec.z_lengths if p == 5)
    if fives > 1:
        raise HypothesisViolation(
            "more than one 5-cycle among the non-distinguished cycles"
        )
    if len(spec.z_lengths) == 1:
        return color_prism_1122(prism_spec_from_two_factor(spec))

    g = two_factor_graph(spec)
    cycles = _z_cycles(spec)
    odd_lengths = [p for p in spec.z_lengths if p % 2 == 1]
    if not odd_lengths:
        return _all_even(spec, g)

    if fives:
        z1_idx = spec.z_lengths.index(5)
    else:
        z1_idx = spec.z_lengths.index(min(odd_lengths))
    z1 = cycles[z1_idx]
    z1_set = set(z1)
    n = spec.n

    for anchor in _anchors(spec):
        if anchor.match[n - 1] not in z1_set or anchor.match[n - 2] in z1_set:
            continue
        specials = {anchor.match[0], anchor.match[n - 2]} - z1_set
        t_rest: set[int] = set()
        for idx, cyc in enumerate(cycles):
            if idx == z1_idx:
                continue
            lab, t_labels = _safe_labeling(cyc, specials & set(cyc))
            t_rest.update(lab[ell - 1] for ell in t_labels)
        for t1_ids, forced, case_id in _distinguished_options(z1, anchor, n):
            try:
                part = _assemble(n, anchor, t_rest | t1_ids, forced, anchored=True)
                coloring = partition_to_1122(g, part)
                return ColorResult(coloring, False, CaseTrace(case_id, False))
            except PartitionWitnessError:
                continue
    return _solver_fallback(g, "two-factor")
