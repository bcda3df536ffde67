"""Exact S-colorability decisions and packing chromatic numbers.

This is the independent oracle the constructive colorers are checked
against.  The hot search loops live in the backend kernels
(``packcol._core`` compiled / ``packcol._pycore`` fallback).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Sequence

from . import backend
from .coloring import PackingVector, SColoring, require_valid
from .graphs import DistanceMatrix, Graph, all_pairs_distances


class TimeBudgetExceeded(RuntimeError):
    """Search ran out of budget; the answer is indeterminate, not negative.

    ``lower`` and ``upper`` carry the best proven bounds when raised from
    packing_chromatic (upper is None if no coloring was found at all).
    """

    def __init__(self, message: str, lower: Optional[int] = None, upper: Optional[int] = None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


@dataclass(frozen=True)
class SearchConfig:
    lower_bound: Optional[int] = None
    upper_bound: Optional[int] = None
    deterministic: bool = False
    time_budget: Optional[float] = None  # seconds

    def __post_init__(self) -> None:
        if (
            self.lower_bound is not None
            and self.upper_bound is not None
            and self.lower_bound > self.upper_bound
        ):
            raise ValueError("lower_bound must not exceed upper_bound")


DEFAULT_CONFIG = SearchConfig()


def _as_vector(s: PackingVector | Sequence[int]) -> PackingVector:
    return s if isinstance(s, PackingVector) else PackingVector(tuple(s))


def _class_caps(g: Graph, dm: DistanceMatrix, svec: tuple[int, ...]) -> list[int]:
    """Sound per-class size limits: within a connected graph every pair is
    at distance <= diameter, so a class whose bound reaches the diameter
    can hold at most one vertex.  0 means unlimited."""
    if g.n == 0 or not g.is_connected():
        return [0] * len(svec)
    diam = dm.diameter()
    return [1 if s >= diam and g.n > 1 else 0 for s in svec]


def _branch_order(g: Graph, deterministic: bool) -> list[int]:
    if deterministic:
        return list(range(g.n))
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def s_colorable(
    g: Graph,
    s: PackingVector | Sequence[int],
    cfg: SearchConfig = DEFAULT_CONFIG,
    dm: Optional[DistanceMatrix] = None,
) -> Optional[SColoring]:
    """A verifier-accepted S-coloring of g, or None when none exists.

    Branch and bound over a static vertex order (ascending ids in
    deterministic mode, max-degree-first otherwise) with per-class distance
    feasibility pruning against the distance matrix.  In deterministic mode
    the witness is the lexicographically least class assignment under
    ascending vertex ids, classes tried in ascending index order.

    Raises TimeBudgetExceeded when cfg.time_budget runs out; that outcome is
    deliberately distinct from None.
    """
    vec = _as_vector(s)
    if g.n == 0:
        return SColoring(vec, ())
    if dm is None:
        dm = all_pairs_distances(g)
    order = _branch_order(g, cfg.deterministic)
    caps = _class_caps(g, dm, vec.s)
    deadline = None if cfg.time_budget is None else time.monotonic() + cfg.time_budget
    status, assignment = backend.solve_scoloring(dm.matrix, vec.s, order, caps, deadline)
    if status == backend.TIMEOUT:
        raise TimeBudgetExceeded("S-colorability search exhausted its time budget")
    if status == backend.NONE:
        return None
    coloring = SColoring(vec, tuple(c + 1 for c in assignment))
    require_valid(g, coloring, dm)
    return coloring


def enumerate_s_coloring(
    g: Graph,
    s: PackingVector | Sequence[int],
    dm: Optional[DistanceMatrix] = None,
) -> Optional[SColoring]:
    """Decide S-colorability by checking every one of the k^n assignments.

    Independent of the branch-and-bound path; used to cross-check it.  The
    witness, when one exists, is the lexicographically least assignment,
    which must coincide with the deterministic-mode solver witness.
    """
    vec = _as_vector(s)
    if g.n == 0:
        return SColoring(vec, ())
    if dm is None:
        dm = all_pairs_distances(g)
    assignment = backend.enumerate_scoloring(dm.matrix, vec.s, g.n)
    if assignment is None:
        return None
    coloring = SColoring(vec, tuple(c + 1 for c in assignment))
    require_valid(g, coloring, dm)
    return coloring


def packing_chromatic(
    g: Graph,
    cfg: SearchConfig = DEFAULT_CONFIG,
    dm: Optional[DistanceMatrix] = None,
) -> tuple[int, SColoring]:
    """Smallest k with a (1,2,...,k)-coloring, plus a witness.

    Iterates k upward from max(lower_bound, 1).  On budget exhaustion raises
    TimeBudgetExceeded carrying the best proven bounds.
    """
    if g.n == 0:
        raise ValueError("packing chromatic number needs a nonempty graph")
    if dm is None:
        dm = all_pairs_distances(g)
    k = max(cfg.lower_bound or 1, 1)
    deadline = None if cfg.time_budget is None else time.monotonic() + cfg.time_budget
    while True:
        if cfg.upper_bound is not None and k > cfg.upper_bound:
            raise ValueError(
                f"no coloring within the configured upper bound {cfg.upper_bound}"
            )
        remaining = None if deadline is None else deadline - time.monotonic()
        if remaining is not None and remaining <= 0:
            raise TimeBudgetExceeded(
                f"budget exhausted; {k} <= chi_rho", lower=k, upper=None
            )
        step = SearchConfig(
            deterministic=cfg.deterministic,
            time_budget=remaining,
        )
        try:
            witness = s_colorable(g, PackingVector.chi_rho(k), step, dm)
        except TimeBudgetExceeded:
            raise TimeBudgetExceeded(
                f"budget exhausted; {k} <= chi_rho", lower=k, upper=None
            ) from None
        if witness is not None:
            return k, witness
        k += 1


def _max_packing_size(g: Graph, dm: DistanceMatrix, i: int) -> int:
    """Exact maximum size of an i-packing (independent set in the i-th power)."""
    far = [
        frozenset(u for u in range(g.n) if u != v and dm.matrix[v][u] > i)
        for v in range(g.n)
    ]

    def grow(candidates: frozenset[int], have: int, best: int) -> int:
        if not candidates:
            return max(best, have)
        if have + len(candidates) <= best:
            return best
        v = min(candidates)
        best = grow(candidates & far[v], have + 1, best)  # take v
        return grow(candidates - {v}, have, best)  # skip v

    return grow(frozenset(range(g.n)), 0, 0)


def diameter_bound(g: Graph, dm: Optional[DistanceMatrix] = None) -> int:
    """Lower bound on the packing chromatic number from the diameter rule.

    In a connected graph of diameter d every class with bound >= d is a
    singleton, so k classes hold at most cap_1 + ... + cap_k vertices where
    cap_i is the maximum i-packing size for i < d and 1 otherwise.  Returns
    the least k whose capacity covers the graph.  Exact packing sizes are
    only computed for small graphs; beyond that the bound degrades
    gracefully to what the singleton rule alone gives.
    """
    if g.n == 0:
        return 0
    if dm is None:
        dm = all_pairs_distances(g)
    if not g.is_connected():
        return 1
    d = dm.diameter()
    caps = []
    total = 0
    k = 0
    while total < g.n:
        k += 1
        if k >= d:
            cap = 1 if g.n > 1 else g.n
        elif g.n <= 48:
            cap = _max_packing_size(g, dm, k)
        else:
            cap = g.n
        caps.append(cap)
        total += cap
    return k


def all_subdiv_one_possible(g: Graph, cfg: SearchConfig = DEFAULT_CONFIG) -> bool:
    """Whether the one-step subdivision admits a 5-packing coloring in which
    every subdivision vertex has class 1.

    Such a coloring restricts to a (1,1,2,2)-coloring of g on the original
    vertices, and conversely any (1,1,2,2)-coloring lifts, so the question
    reduces to (1,1,2,2)-colorability of g itself.
    """
    return s_colorable(g, (1, 1, 2, 2), cfg) is not None
