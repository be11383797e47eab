"""Backtracking search for structure-preserving vertex bijections.

One engine serves automorphism enumeration, rigidity tests, stabiliser
checks for coloured structures, and isomorphism tests between two coloured
structures.  Adjacency, arc direction and colour are folded into one small
integer per ordered vertex pair (an n-by-n code matrix); a valid map phi
must satisfy dst[phi(u)][phi(v)] == src[u][v] for all pairs.

Candidate images are pruned by iterated neighbourhood-multiset refinement.
The refinement is a pure filter: correctness never depends on it.  Maps are
yielded in lexicographic order of their image tuple, so the identity is
always the first automorphism produced.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator

from .graphs import Graph, Orientation


def graph_codes(g: Graph, colours=None) -> list[list[int]]:
    n = g.n
    mat = [[0] * n for _ in range(n)]
    for i, (u, v) in enumerate(g.edges):
        c = 1 if colours is None else colours[i]
        mat[u][v] = c
        mat[v][u] = c
    return mat


def orientation_codes(o: Orientation, colours=None) -> list[list[int]]:
    # Reverse direction is marked by the negated colour code.
    n = o.base.n
    mat = [[0] * n for _ in range(n)]
    for i, (t, h) in enumerate(o.arcs):
        c = 1 if colours is None else colours[i]
        mat[t][h] = c
        mat[h][t] = -c
    return mat


def codes_for(x: Graph | Orientation, colours=None) -> list[list[int]]:
    if isinstance(x, Orientation):
        return orientation_codes(x, colours)
    return graph_codes(x, colours)


def _refine(src: list[list[int]], dst: list[list[int]]):
    """Stable joint vertex labelling; None when label multisets diverge."""
    n = len(src)
    lab_s = [0] * n
    lab_d = [0] * n
    classes = 1
    while True:
        table: dict[tuple, int] = {}
        new_s = []
        for v in range(n):
            row = src[v]
            sig = (lab_s[v], tuple(sorted(Counter(
                (lab_s[u], row[u]) for u in range(n) if u != v).items())))
            new_s.append(table.setdefault(sig, len(table)))
        new_d = []
        for v in range(n):
            row = dst[v]
            sig = (lab_d[v], tuple(sorted(Counter(
                (lab_d[u], row[u]) for u in range(n) if u != v).items())))
            code = table.get(sig)
            if code is None:
                return None
            new_d.append(code)
        if sorted(new_s) != sorted(new_d):
            return None
        lab_s, lab_d = new_s, new_d
        if len(table) == classes or len(table) == n:
            return lab_s, lab_d
        classes = len(table)


def find_maps(src: list[list[int]], dst: list[list[int]], *,
              fixed=(), allowed=None) -> Iterator[tuple[int, ...]]:
    """Yield every bijection phi with dst[phi(u)][phi(v)] == src[u][v].

    fixed is a sequence of (v, w) pairs pinning phi(v) = w; allowed is an
    optional dict v -> iterable restricting the images of v.  Maps come out
    in lexicographic order of the image tuple.
    """
    n = len(src)
    if len(dst) != n:
        return
    refined = _refine(src, dst)
    if refined is None:
        return
    lab_s, lab_d = refined
    by_label: dict[int, list[int]] = {}
    for w in range(n):
        by_label.setdefault(lab_d[w], []).append(w)
    cand: list[list[int]] = []
    for v in range(n):
        cand.append(list(by_label.get(lab_s[v], ())))
    for v, w in fixed:
        cand[v] = [w] if w in cand[v] else []
    if allowed:
        for v, ws in allowed.items():
            keep = set(ws)
            cand[v] = [w for w in cand[v] if w in keep]
    for v in range(n):
        if not cand[v]:
            return

    image = [-1] * n
    used = [False] * n

    def place(v: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            yield tuple(image)
            return
        src_row = src[v]
        src_col = [src[u][v] for u in range(v)]
        for w in cand[v]:
            if used[w]:
                continue
            dst_row = dst[w]
            ok = True
            for u in range(v):
                iu = image[u]
                if dst_row[iu] != src_row[u] or dst[iu][w] != src_col[u]:
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                yield from place(v + 1)
                used[w] = False
        image[v] = -1

    yield from place(0)


def nontrivial_map(codes: list[list[int]], *, fixed=()) -> tuple[int, ...] | None:
    """Least non-identity symmetry of a code matrix, or None.

    The identity is the lexicographically least bijection, so it is always
    the first map yielded; the next one, if any, is the answer.
    """
    it = find_maps(codes, codes, fixed=fixed)
    first = next(it, None)
    if first is None:
        raise AssertionError("identity map must always be valid")
    n = len(codes)
    if any(first[v] != v for v in range(n)):
        return first
    return next(it, None)
