"""Pure-Python kernels: exact search, literal enumeration, canonical forms.

This module mirrors the compiled extension ``packcol._core`` exactly; the
active implementation is chosen in ``packcol.backend`` at import time.
Keep the two in sync.
"""

from __future__ import annotations

import time
from collections import defaultdict

FOUND = 1
NONE = 0
TIMEOUT = -2


def solve_scoloring(dist, svec, order, caps, deadline):
    """Branch-and-bound search for an S-coloring.

    dist: n x n matrix (indexable as dist[u][v]) of hop counts.
    svec: non-decreasing packing bounds, one per class.
    order: static branching order over vertex ids.
    caps: per-class size limits (0 = unlimited), sound upper bounds only.
    deadline: time.monotonic() value or None.

    Returns (status, assignment) where assignment maps vertex -> class index
    0..k-1, or None.  Classes are tried in ascending index order and runs of
    equal packing bounds are opened lowest-index-first, so with ``order``
    equal to 0..n-1 the witness is the lexicographically least assignment.
    """
    n = len(order)
    k = len(svec)
    rows = [list(r) for r in dist]
    assignment = [-1] * n
    class_size = [0] * k
    conflicts = [[0] * k for _ in range(n)]
    feasible = [k] * n
    first_equal = [0] * k
    for c in range(1, k):
        first_equal[c] = first_equal[c - 1] if svec[c] == svec[c - 1] else c

    # Vertices a class-c assignment of v constrains: dist(u, v) <= svec[c].
    affected = [
        [[u for u in range(n) if u != v and rows[v][u] <= svec[c]] for c in range(k)]
        for v in range(n)
    ]

    nodes = 0
    status = NONE

    def feasible_classes(v):
        out = []
        row = conflicts[v]
        for c in range(k):
            if row[c]:
                continue
            if caps[c] and class_size[c] >= caps[c]:
                continue
            if class_size[c] == 0 and c != first_equal[c] and class_size[c - 1] == 0:
                continue  # equal-bound classes open in index order
            out.append(c)
        return out

    def assign(v, c):
        assignment[v] = c
        class_size[c] += 1
        dead = 0
        for u in affected[v][c]:
            if assignment[u] == -1 and conflicts[u][c] == 0:
                feasible[u] -= 1
                if feasible[u] == 0:
                    dead += 1
            conflicts[u][c] += 1
        return dead

    def unassign(v, c):
        assignment[v] = -1
        class_size[c] -= 1
        for u in affected[v][c]:
            conflicts[u][c] -= 1
            if conflicts[u][c] == 0 and assignment[u] == -1:
                feasible[u] += 1

    def rec(depth):
        nonlocal nodes, status
        if depth == n:
            return True
        v = order[depth]
        for c in feasible_classes(v):
            nodes += 1
            if deadline is not None and nodes % 4096 == 0 and time.monotonic() > deadline:
                status = TIMEOUT
                return False
            dead = assign(v, c)
            ok = dead == 0 and rec(depth + 1)
            if ok:
                return True
            unassign(v, c)
            if status == TIMEOUT:
                return False
        return False

    if rec(0):
        return FOUND, assignment
    if status == TIMEOUT:
        return TIMEOUT, None
    return NONE, None


def enumerate_scoloring(dist, svec, n):
    """First valid assignment in lexicographic order by checking every one.

    The deliberate brute force: walks all k^n assignments (vertex 0 most
    significant) and tests each against the distance matrix, sharing no
    search logic with solve_scoloring.  Returns an assignment with classes
    0..k-1, or None.
    """
    k = len(svec)
    if n == 0:
        return []
    smax = svec[-1]
    rows = [list(r) for r in dist]
    pairs = sorted(
        ((rows[u][v], u, v) for u in range(n) for v in range(u + 1, n) if rows[u][v] <= smax),
    )
    assignment = [0] * n
    while True:
        ok = True
        for d, u, v in pairs:
            c = assignment[u]
            if c == assignment[v] and d <= svec[c]:
                ok = False
                break
        if ok:
            return assignment[:]
        i = n - 1
        while i >= 0:
            assignment[i] += 1
            if assignment[i] < k:
                break
            assignment[i] = 0
            i -= 1
        if i < 0:
            return None


# ---------------------------------------------------------------------------
# Canonical forms of small graphs as upper-triangle bitmasks.
#
# Bit layout is column-order: pair (i, j) with i < j sits at bit
# j*(j-1)/2 + i.  Adding vertex n to an n-vertex mask therefore just ORs the
# new neighborhood bits shifted by C(n, 2).
# ---------------------------------------------------------------------------


def pair_bit(i, j):
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def canon_form(n, mask):
    """Least bitmask over all relabelings consistent with degree refinement.

    The refinement is iterated neighborhood-color sharpening; its stable
    cells are isomorphism-invariant, so minimizing over cell-respecting
    relabelings only still yields a canonical form.
    """
    if n <= 1:
        return 0
    adj = [0] * n  # neighbor bitsets
    for j in range(n):
        base = j * (j - 1) // 2
        for i in range(j):
            if (mask >> (base + i)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    neighbors = [[w for w in range(n) if (adj[v] >> w) & 1] for v in range(n)]

    colors = [len(neighbors[v]) for v in range(n)]
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[w] for w in neighbors[v]))) for v in range(n)
        ]
        rank = {key: r for r, key in enumerate(sorted(set(keys)))}
        refreshed = [rank[keys[v]] for v in range(n)]
        if refreshed == colors:
            break
        colors = refreshed

    cells = defaultdict(list)
    for v in range(n):
        cells[colors[v]].append(v)
    cell_for_pos = []
    for color in sorted(cells):
        cell_for_pos.extend([color] * len(cells[color]))

    best = None
    placement = [0] * n
    used = [False] * n

    def rec(p, bits):
        nonlocal best
        if p == n:
            if best is None or bits < best:
                best = bits
            return
        base = p * (p - 1) // 2
        for v in cells[cell_for_pos[p]]:
            if used[v]:
                continue
            col = 0
            av = adj[v]
            for q in range(p):
                if (av >> placement[q]) & 1:
                    col |= 1 << q
            used[v] = True
            placement[p] = v
            rec(p + 1, bits | (col << base))
            used[v] = False

    rec(0, 0)
    return best
