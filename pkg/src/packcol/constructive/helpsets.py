"""Structured vertex subsets of cycles used by the prism and two-factor colorers.

All public sets are machine-checked on every call: the complement contains
at most one adjacent pair (exactly the stated one for the indexed variants)
and the square of the cycle induces a path or an even cycle on the set.
Labels are 1-based cycle positions v_1..v_n; callers shift to graph ids.
"""

from __future__ import annotations


class HelpSetError(ValueError):
    """Variant/parity mismatch or a failed postcondition."""


def _cyclic_dist(n: int, a: int, b: int) -> int:
    d = abs(a - b) % n
    return min(d, n - d)


def _square_edges(n: int, labels: frozenset[int]) -> list[tuple[int, int]]:
    members = sorted(labels)
    return [
        (a, b)
        for idx, a in enumerate(members)
        for b in members[idx + 1 :]
        if _cyclic_dist(n, a, b) <= 2
    ]


def square_structure(n: int, labels: frozenset[int]) -> str:
    """'path', 'even-cycle', or 'other' for the square of C_n induced on labels.

    Isolated-vertex-free path means: connected, acyclic, max degree 2; a
    single vertex counts as a path.
    """
    members = sorted(labels)
    if not members:
        return "path"
    edges = _square_edges(n, labels)
    degree = {v: 0 for v in members}
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
    if any(d > 2 for d in degree.values()):
        return "other"
    # connectivity
    adj = {v: [] for v in members}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {members[0]}
    stack = [members[0]]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(members):
        return "other"
    if len(edges) == len(members) - 1:
        return "path"
    if len(edges) == len(members) and all(d == 2 for d in degree.values()):
        return "even-cycle" if len(members) % 2 == 0 else "other"
    return "other"


def complement_adjacent_pairs(n: int, labels: frozenset[int]) -> list[tuple[int, int]]:
    """Adjacent C_n pairs (1-based, as (j, j+1) with wrap (n, 1)) outside labels."""
    out = []
    for j in range(1, n + 1):
        a, b = j, j % n + 1
        if a not in labels and b not in labels:
            out.append((a, b))
    return out


def _check_part_one(n: int, labels: frozenset[int], name: str) -> frozenset[int]:
    if len(complement_adjacent_pairs(n, labels)) > 1:
        raise HelpSetError(f"{name}: complement has more than one adjacent pair")
    if square_structure(n, labels) == "other":
        raise HelpSetError(f"{name}: square does not induce a path or even cycle")
    return labels


def _check_part_two(
    n: int, labels: frozenset[int], i: int, j: int, name: str
) -> frozenset[int]:
    if labels & {1, i, j}:
        raise HelpSetError(f"{name}: set must avoid v_1, v_{i}, v_{j}")
    pairs = complement_adjacent_pairs(n, labels)
    if pairs != [(min(i, j), max(i, j))] and pairs != [(max(i, j), min(i, j))]:
        want = tuple(sorted((i, j)))
        if len(pairs) != 1 or tuple(sorted(pairs[0])) != want:
            raise HelpSetError(
                f"{name}: complement pairs {pairs}, expected exactly {want}"
            )
    if square_structure(n, labels) != "path":
        raise HelpSetError(f"{name}: square does not induce a path")
    return labels


def set_a1(n: int) -> frozenset[int]:
    """Even cycles: complement is independent; square induces an even cycle
    (a path for n = 4)."""
    if n < 4 or n % 2:
        raise HelpSetError("A1 requires an even cycle length >= 4")
    if n % 4 == 0:
        labels = frozenset(range(1, n + 1, 2))
    else:
        labels = frozenset({1, 2, 4, 5}) | frozenset(range(7, n + 1, 2))
    return _check_part_one(n, labels, "A1")


def set_a2(n: int) -> frozenset[int]:
    """Odd cycles; at most one adjacent pair escapes, square is path/even cycle.

    The published formulas start at n = 7 (n = 9 for the 1 mod 4 branch);
    lengths 3 and 5 use the small sets {v1} and {v1, v3}, which satisfy the
    same contract.  For n = 3 mod 4 the formula reads as
    {v1} plus the even positions 4..n-1.
    """
    if n < 3 or n % 2 == 0:
        raise HelpSetError("A2 requires an odd cycle length >= 3")
    if n == 3:
        labels = frozenset({1})
    elif n == 5:
        labels = frozenset({1, 3})
    elif n % 4 == 1:
        labels = frozenset({1, 2, 4, 5, 7, 8}) | frozenset(range(10, n + 1, 2))
    else:
        labels = frozenset({1}) | frozenset(range(4, n, 2))
    return _check_part_one(n, labels, "A2")


def set_a3(n: int, i: int) -> frozenset[int]:
    if n % 2 == 0 or n < 7:
        raise HelpSetError("A3 requires an odd cycle length >= 7")
    if i % 2 or not 3 <= i <= n - 3:
        raise HelpSetError("A3 requires an even index in 3..n-3")
    labels = (
        frozenset({2, i + 2})
        | frozenset(range(3, i, 2))
        | frozenset(range(i + 3, n + 1, 2))
    )
    return _check_part_two(n, labels, i, i + 1, "A3")


def set_a4(n: int, i: int) -> frozenset[int]:
    if n % 2 == 0 or n < 7:
        raise HelpSetError("A4 requires an odd cycle length >= 7")
    if i != n - 1:
        raise HelpSetError("A4 requires index n-1")
    if n % 4 == 1:
        labels = frozenset({2, n - 3, n}) | frozenset(range(3, n - 3, 2))
    else:
        labels = frozenset({n}) | frozenset(range(2, n - 2, 2))
    return _check_part_two(n, labels, i, i - 1, "A4")


def set_a5(n: int, i: int) -> frozenset[int]:
    if n % 2 == 0 or n < 5:
        raise HelpSetError("A5 requires an odd cycle length >= 5")
    if i % 2 == 0 or not 3 <= i <= n - 2:
        raise HelpSetError("A5 requires an odd index in 3..n-2")
    labels = frozenset(range(2, i, 2)) | frozenset(range(i + 2, n + 1, 2))
    return _check_part_two(n, labels, i, i + 1, "A5")


def lemma_help_set(n: int, variant: str, i: int | None = None) -> frozenset[int]:
    """Dispatch by variant name; A3/A4/A5 take the index of the escaping pair."""
    if variant == "A1":
        if i is not None:
            raise HelpSetError("A1 takes no index")
        return set_a1(n)
    if variant == "A2":
        if i is not None:
            raise HelpSetError("A2 takes no index")
        return set_a2(n)
    if variant in ("A3", "A4", "A5"):
        if i is None:
            raise HelpSetError(f"{variant} requires an index")
        if variant == "A3":
            return set_a3(n, i)
        if variant == "A4":
            return set_a4(n, i)
        return set_a5(n, i)
    raise HelpSetError(f"unknown variant {variant!r}")


# --- internal variants used by the theorem colorers ------------------------


def set_a5_start(n: int) -> frozenset[int]:
    """Odd positions 3..n: the A5 family extended to the pair (v1, v2).

    Needed when the distinguished matched vertex sits next to the pinned
    vertex v1: the escaping pair is then (v1, v2) and the square still
    induces the path v3, v5, ..., vn.
    """
    if n % 2 == 0 or n < 3:
        raise HelpSetError("requires an odd cycle length >= 3")
    labels = frozenset(range(3, n + 1, 2))
    pairs = complement_adjacent_pairs(n, labels)
    if sorted(tuple(sorted(p)) for p in pairs) != [(1, 2)]:
        raise HelpSetError("extended A5: expected the single escaping pair (v1, v2)")
    if square_structure(n, labels) != "path":
        raise HelpSetError("extended A5: square must induce a path")
    return labels


def set_a4_alt(n: int) -> frozenset[int]:
    """The 1 mod 4 shape of A4 transplanted to n = 3 mod 4.

    Escaping pair (v_{n-2}, v_{n-1}) as for A4, but with v_{n-3} inside and
    the even positions 4..n-5 outside; used when the matched index r is
    2 mod 4, where the stock A4 would close an odd cycle through x_n.  Such
    an r needs n >= 11, below which the formula also degenerates.
    """
    if n % 4 != 3 or n < 11:
        raise HelpSetError("requires length 3 mod 4, at least 11")
    labels = frozenset({2, n - 3, n}) | frozenset(range(3, n - 3, 2))
    return _check_part_two(n, labels, n - 1, n - 2, "A4-alt")


def zero_pair_set(p: int) -> frozenset[int]:
    """A subset of C_p whose complement is independent and whose square
    induces a path or even cycle.  Exists for every p >= 3 except p = 5;
    the two-factor colorer uses it for the non-distinguished cycles, where
    an escaping adjacent pair could land on one side of the partition.
    """
    if p == 5:
        raise HelpSetError("no qualifying subset of the 5-cycle exists")
    if p % 2 == 0:
        labels = set_a1(p)
    elif p % 4 == 1:
        labels = set_a2(p)
    else:  # p = 3 mod 4: take v1, v2 and the even positions 4..p-1
        labels = frozenset({1, 2}) | frozenset(range(4, p, 2))
        labels = _check_part_one(p, labels, "zero-pair")
    if complement_adjacent_pairs(p, labels):
        raise HelpSetError("zero-pair set: complement must be independent")
    return labels


def square_two_coloring(n: int, labels: frozenset[int]) -> dict[int, int]:
    """0/1 sides of the (bipartite) square structure induced on labels."""
    members = sorted(labels)
    adj = {v: [] for v in members}
    for a, b in _square_edges(n, labels):
        adj[a].append(b)
        adj[b].append(a)
    side: dict[int, int] = {}
    for root in members:
        if root in side:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in side:
                    side[w] = 1 - side[u]
                    stack.append(w)
    return side
