# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: exact search, literal enumeration, canonical forms.

Mirror of ``packcol._pycore``; keep the two in sync.
"""

from libc.stdlib cimport free, malloc
from posix.time cimport CLOCK_MONOTONIC, clock_gettime, timespec

from collections import defaultdict

FOUND = 1
NONE = 0
TIMEOUT = -2

cdef int C_FOUND = 1
cdef int C_NONE = 0
cdef int C_TIMEOUT = -2
cdef int CHECK_EVERY = 4096


cdef double _now() noexcept nogil:
    cdef timespec ts
    clock_gettime(CLOCK_MONOTONIC, &ts)
    return ts.tv_sec + ts.tv_nsec * 1e-9


cdef struct SolveState:
    int n
    int k
    int *order
    int *svec
    int *caps
    int *first_equal
    int *assignment      # vertex -> class or -1
    int *class_size
    int *conflicts       # n * k
    int *feasible        # vertex -> count of conflict-free classes
    int *aff_off         # (n*k + 1) CSR offsets into aff_data
    int *aff_data
    long nodes
    double deadline
    bint has_deadline
    int status


cdef int _solve_rec(SolveState *st, int depth) noexcept nogil:
    cdef int v, c, u, i, dead, start, stop, k, prev_empty
    cdef int *conf_row
    if depth == st.n:
        return 1
    v = st.order[depth]
    k = st.k
    conf_row = st.conflicts + v * k
    for c in range(k):
        if conf_row[c] != 0:
            continue
        if st.caps[c] != 0 and st.class_size[c] >= st.caps[c]:
            continue
        if st.class_size[c] == 0 and c != st.first_equal[c] and st.class_size[c - 1] == 0:
            continue  # equal-bound classes open in index order
        st.nodes += 1
        if st.has_deadline and st.nodes % CHECK_EVERY == 0 and _now() > st.deadline:
            st.status = C_TIMEOUT
            return 0
        # assign v -> c
        st.assignment[v] = c
        st.class_size[c] += 1
        dead = 0
        start = st.aff_off[v * k + c]
        stop = st.aff_off[v * k + c + 1]
        for i in range(start, stop):
            u = st.aff_data[i]
            if st.assignment[u] == -1 and st.conflicts[u * k + c] == 0:
                st.feasible[u] -= 1
                if st.feasible[u] == 0:
                    dead += 1
            st.conflicts[u * k + c] += 1
        if dead == 0 and _solve_rec(st, depth + 1):
            return 1
        # undo
        st.assignment[v] = -1
        st.class_size[c] -= 1
        for i in range(start, stop):
            u = st.aff_data[i]
            st.conflicts[u * k + c] -= 1
            if st.conflicts[u * k + c] == 0 and st.assignment[u] == -1:
                st.feasible[u] += 1
        if st.status == C_TIMEOUT:
            return 0
    return 0


def solve_scoloring(dist, svec, order, caps, deadline):
    """Branch-and-bound search for an S-coloring.

    Same contract as packcol._pycore.solve_scoloring: returns
    (status, assignment or None) with classes 0..k-1.
    """
    cdef long long[:, ::1] d = dist
    cdef int n = len(order)
    cdef int k = len(svec)
    cdef SolveState st
    cdef int v, c, u, total, at
    cdef long long bound

    if n == 0:
        return FOUND, []

    st.n = n
    st.k = k
    st.nodes = 0
    st.status = C_NONE
    st.has_deadline = deadline is not None
    st.deadline = deadline if deadline is not None else 0.0

    st.order = <int *> malloc(n * sizeof(int))
    st.svec = <int *> malloc(k * sizeof(int))
    st.caps = <int *> malloc(k * sizeof(int))
    st.first_equal = <int *> malloc(k * sizeof(int))
    st.assignment = <int *> malloc(n * sizeof(int))
    st.class_size = <int *> malloc(k * sizeof(int))
    st.conflicts = <int *> malloc(n * k * sizeof(int))
    st.feasible = <int *> malloc(n * sizeof(int))
    st.aff_off = <int *> malloc((n * k + 1) * sizeof(int))
    st.aff_data = NULL

    try:
        for v in range(n):
            st.order[v] = order[v]
            st.assignment[v] = -1
            st.feasible[v] = k
        for c in range(k):
            st.svec[c] = svec[c]
            st.caps[c] = caps[c]
            st.class_size[c] = 0
        st.first_equal[0] = 0
        for c in range(1, k):
            st.first_equal[c] = st.first_equal[c - 1] if svec[c] == svec[c - 1] else c
        for v in range(n * k):
            st.conflicts[v] = 0

        # CSR of "assigning v to class c constrains u": dist(v,u) <= s_c.
        total = 0
        st.aff_off[0] = 0
        for v in range(n):
            for c in range(k):
                bound = st.svec[c]
                for u in range(n):
                    if u != v and d[v, u] <= bound:
                        total += 1
                st.aff_off[v * k + c + 1] = total
        st.aff_data = <int *> malloc((total if total > 0 else 1) * sizeof(int))
        at = 0
        for v in range(n):
            for c in range(k):
                bound = st.svec[c]
                for u in range(n):
                    if u != v and d[v, u] <= bound:
                        st.aff_data[at] = u
                        at += 1

        found = _solve_rec(&st, 0)
        if found:
            return FOUND, [st.assignment[v] for v in range(n)]
        if st.status == TIMEOUT:
            return TIMEOUT, None
        return NONE, None
    finally:
        free(st.order)
        free(st.svec)
        free(st.caps)
        free(st.first_equal)
        free(st.assignment)
        free(st.class_size)
        free(st.conflicts)
        free(st.feasible)
        free(st.aff_off)
        if st.aff_data != NULL:
            free(st.aff_data)


def enumerate_scoloring(dist, svec, n_py):
    """First valid assignment in lexicographic order by checking every one.

    The deliberate brute force, independent of the branch-and-bound path:
    walks all k^n assignments (vertex 0 most significant), testing each
    against the distance matrix.
    """
    cdef long long[:, ::1] d = dist
    cdef int n = n_py
    cdef int k = len(svec)
    cdef int npairs = 0
    cdef int u, v, i, c, smax
    cdef bint ok

    if n == 0:
        return []

    cdef int *sv = <int *> malloc(k * sizeof(int))
    for c in range(k):
        sv[c] = svec[c]
    smax = sv[k - 1]

    pair_list = sorted(
        (int(d[u, v]), u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if d[u, v] <= smax
    )
    npairs = len(pair_list)
    cdef int *pu = <int *> malloc((npairs if npairs else 1) * sizeof(int))
    cdef int *pv = <int *> malloc((npairs if npairs else 1) * sizeof(int))
    cdef int *pd = <int *> malloc((npairs if npairs else 1) * sizeof(int))
    for i in range(npairs):
        entry = pair_list[i]
        pd[i] = entry[0]
        pu[i] = entry[1]
        pv[i] = entry[2]

    cdef int *assignment = <int *> malloc(n * sizeof(int))
    cdef bint exhausted = False
    for i in range(n):
        assignment[i] = 0

    try:
        with nogil:
            while True:
                ok = True
                for i in range(npairs):
                    c = assignment[pu[i]]
                    if c == assignment[pv[i]] and pd[i] <= sv[c]:
                        ok = False
                        break
                if ok:
                    break
                i = n - 1
                while i >= 0:
                    assignment[i] += 1
                    if assignment[i] < k:
                        break
                    assignment[i] = 0
                    i -= 1
                if i < 0:
                    exhausted = True
                    break
        if exhausted:
            return None
        return [assignment[i] for i in range(n)]
    finally:
        free(sv)
        free(pu)
        free(pv)
        free(pd)
        free(assignment)


# ---------------------------------------------------------------------------
# Canonical forms of small graphs as upper-triangle bitmasks (column order:
# pair (i, j), i < j, sits at bit j*(j-1)/2 + i).
# ---------------------------------------------------------------------------


def pair_bit(i, j):
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


cdef struct CanonState:
    int n
    unsigned long long *adj   # neighbor bitsets
    int *cells                # cells laid out contiguously
    int *cell_start           # per position, start of its cell in `cells`
    int *cell_len
    int *placement
    unsigned char *used
    unsigned long long best
    bint have_best


cdef void _canon_rec(CanonState *st, int p, unsigned long long bits) noexcept nogil:
    cdef int idx, v, q, base
    cdef unsigned long long col, av
    if p == st.n:
        if not st.have_best or bits < st.best:
            st.best = bits
            st.have_best = True
        return
    base = p * (p - 1) // 2
    for idx in range(st.cell_start[p], st.cell_start[p] + st.cell_len[p]):
        v = st.cells[idx]
        if st.used[v]:
            continue
        av = st.adj[v]
        col = 0
        for q in range(p):
            if (av >> st.placement[q]) & 1:
                col |= 1ULL << q
        st.used[v] = 1
        st.placement[p] = v
        _canon_rec(st, p + 1, bits | (col << base))
        st.used[v] = 0


def canon_form(n_py, mask_py):
    """Least bitmask over all relabelings consistent with degree refinement."""
    cdef int n = n_py
    cdef unsigned long long mask
    cdef int i, j, v, base, at
    if n <= 1:
        return 0
    if n > 11:
        raise ValueError("canonical form kernel supports at most 11 vertices")
    mask = mask_py

    cdef CanonState st
    st.n = n
    st.adj = <unsigned long long *> malloc(n * sizeof(unsigned long long))
    st.cells = <int *> malloc(n * sizeof(int))
    st.cell_start = <int *> malloc(n * sizeof(int))
    st.cell_len = <int *> malloc(n * sizeof(int))
    st.placement = <int *> malloc(n * sizeof(int))
    st.used = <unsigned char *> malloc(n * sizeof(unsigned char))
    st.have_best = False
    st.best = 0

    try:
        for v in range(n):
            st.adj[v] = 0
            st.used[v] = 0
        for j in range(n):
            base = j * (j - 1) // 2
            for i in range(j):
                if (mask >> (base + i)) & 1:
                    st.adj[i] |= 1ULL << j
                    st.adj[j] |= 1ULL << i

        neighbors = [
            [w for w in range(n) if (st.adj[v] >> w) & 1] for v in range(n)
        ]
        colors = [len(neighbors[v]) for v in range(n)]
        while True:
            keys = [
                (colors[v], tuple(sorted(colors[w] for w in neighbors[v])))
                for v in range(n)
            ]
            rank = {key: r for r, key in enumerate(sorted(set(keys)))}
            refreshed = [rank[keys[v]] for v in range(n)]
            if refreshed == colors:
                break
            colors = refreshed

        groups = defaultdict(list)
        for v in range(n):
            groups[colors[v]].append(v)
        at = 0
        for color in sorted(groups):
            members = groups[color]
            for v in range(at, at + len(members)):
                st.cell_start[v] = at
                st.cell_len[v] = len(members)
            for v in members:
                st.cells[at] = v
                at += 1

        with nogil:
            _canon_rec(&st, 0, 0)
        return int(st.best)
    finally:
        free(st.adj)
        free(st.cells)
        free(st.cell_start)
        free(st.cell_len)
        free(st.placement)
        free(st.used)
