"""Reference implementations used to pin expected values in the tests.

Everything here recomputes results from first principles and shares no
search machinery with the package: automorphisms come from filtering
vertex permutations, index values from trying every colouring against
that list, orientation extremes from sweeping every direction vector,
and rooted-tree counts from an explicit enumeration plus explicit
symmetry application.  Slow on purpose; scoped to tiny inputs.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from math import factorial

from disorient.graphs import Graph, Orientation


# ---------------------------------------------------------------------------
# Automorphisms and distinguishing indices by exhaustion


def brute_automorphism_images(x) -> list[tuple[int, ...]]:
    """All automorphisms as image tuples, by filtering every permutation."""
    if isinstance(x, Orientation):
        n = x.base.n
        arcs = set(x.arcs)
        keep = lambda img: all((img[t], img[h]) in arcs for t, h in arcs)
    else:
        n = x.n
        edges = {frozenset(e) for e in x.edges}
        keep = lambda img: all(
            frozenset((img[u], img[v])) in edges for u, v in edges)
    return [img for img in permutations(range(n)) if keep(img)]


def edge_perm_of(g: Graph, img) -> tuple[int, ...]:
    """Edge-index permutation induced by an automorphism's image tuple."""
    return tuple(g.index_of(img[u], img[v]) for u, v in g.edges)


def brute_dprime(x, max_width: int | None = None) -> int:
    """Least colouring width preserved by no non-trivial automorphism."""
    g = x.base if isinstance(x, Orientation) else x
    m = g.m
    if m == 0:
        return 1
    eperms = [edge_perm_of(g, img) for img in brute_automorphism_images(x)
              if img != tuple(range(g.n))]
    if not eperms:
        return 1
    top = max_width if max_width is not None else m
    for width in range(1, top + 1):
        for assignment in product(range(1, width + 1), repeat=m):
            if all(any(assignment[ep[i]] != assignment[i] for i in range(m))
                   for ep in eperms):
                return width
    raise AssertionError("no distinguishing colouring within the width bound")


def brute_od_extremes(g: Graph) -> tuple[int, int]:
    """(min, max) of the index over all 2^m orientations, no dedup."""
    values = [brute_dprime(Orientation.from_vector(g, v))
              for v in range(1 << g.m)]
    return min(values), max(values)


# ---------------------------------------------------------------------------
# Twisted test straight from the powers definition


def brute_twisted(g: Graph, img) -> bool:
    """Whether some power of the map transposes the ends of an edge."""
    identity = tuple(range(g.n))
    q = tuple(img)
    while True:
        if any(q[u] == v and q[v] == u for u, v in g.edges):
            return True
        if q == identity:
            return False
        q = tuple(img[x] for x in q)


# ---------------------------------------------------------------------------
# Cycles, paths and centres by exhaustion


def brute_longest_cycle_length(g: Graph) -> int:
    """0 when acyclic, else the order of the longest cycle."""
    best = 0
    for k in range(g.n, 2, -1):
        for verts in permutations(range(g.n), k):
            if verts[0] != min(verts) or verts[1] > verts[-1]:
                continue
            ok = all(g.has_edge(verts[i], verts[(i + 1) % k])
                     for i in range(k))
            if ok:
                return k
    return best


def brute_traceable(g: Graph) -> bool:
    if g.n == 1:
        return True
    return any(all(g.has_edge(p[i], p[i + 1]) for i in range(g.n - 1))
               for p in permutations(range(g.n)))


def brute_tree_centre(t: Graph) -> tuple[int, ...]:
    """Vertices of least eccentricity, via pairwise BFS distances."""
    def ecc(v: int) -> int:
        dist = {v: 0}
        frontier = [v]
        while frontier:
            nxt = []
            for u in frontier:
                for w in t.adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        return max(dist.values())

    eccs = [ecc(v) for v in range(t.n)]
    least = min(eccs)
    return tuple(v for v in range(t.n) if eccs[v] == least)


# ---------------------------------------------------------------------------
# Orientation orbit counting via the fixed-vector formula


def orientation_orbit_count(g: Graph) -> int:
    """Number of orientation classes under the automorphism group.

    Averages, over the group, the number of direction vectors each
    element fixes: a vector exists for an element exactly when every
    cycle of its edge permutation reverses an even number of edges, and
    then each cycle contributes a free bit.
    """
    images = brute_automorphism_images(g)
    total = 0
    for img in images:
        ep = edge_perm_of(g, img)
        flips = [1 if img[u] > img[v] else 0 for u, v in g.edges]
        seen = [False] * g.m
        fixed = 1
        for s in range(g.m):
            if seen[s]:
                continue
            parity = 0
            i = s
            while not seen[i]:
                seen[i] = True
                parity ^= flips[i]
                i = ep[i]
            fixed = 0 if parity else fixed * 2
            if fixed == 0:
                break
        total += fixed
    assert total % len(images) == 0
    return total // len(images)


# ---------------------------------------------------------------------------
# Independent graph6 encoder, straight from the format description


def graph6_of(n: int, edges) -> str:
    present = {frozenset(e) for e in edges}
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if frozenset((i, j)) in present else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        varv = 0
        for b in bits[k:k + 6]:
            varv = varv * 2 + b
        out.append(chr(varv + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# Rooted trees: structure, canonical forms, symmetry and counting


def rooted_children(t: Graph, root: int) -> list[list[int]]:
    kids: list[list[int]] = [[] for _ in range(t.n)]
    par = {root: root}
    stack = [root]
    while stack:
        v = stack.pop()
        for w in sorted(t.adj[v]):
            if w not in par:
                par[w] = v
                kids[v].append(w)
                stack.append(w)
    return kids


def _shape(t: Graph, kids, v: int):
    return tuple(sorted(_shape(t, kids, w) for w in kids[v]))


def rooted_aut_order(t: Graph, root: int) -> int:
    """Order of the root-fixing group as a product of factorials."""
    kids = rooted_children(t, root)
    order = 1
    for v in range(t.n):
        counts: dict = {}
        for w in kids[v]:
            s = _shape(t, kids, w)
            counts[s] = counts.get(s, 0) + 1
        for c in counts.values():
            order *= factorial(c)
    return order


def rooted_automorphism_images(t: Graph, root: int) -> list[tuple[int, ...]]:
    """All root-fixing automorphisms, built by matching equal subtrees."""
    kids = rooted_children(t, root)
    shapes = {v: _shape(t, kids, v) for v in range(t.n)}

    def maps(v: int, target: int):
        groups: dict = {}
        for w in kids[v]:
            groups.setdefault(shapes[w], []).append(w)
        tgroups: dict = {}
        for w in kids[target]:
            tgroups.setdefault(shapes[w], []).append(w)

        def per_group(keys):
            if not keys:
                yield {}
                return
            key, rest = keys[0], keys[1:]
            src, dst = groups[key], tgroups[key]
            for arrangement in permutations(dst):
                partials = [list(maps(a, b)) for a, b in zip(src, arrangement)]
                for combo in product(*partials):
                    merged = {}
                    for part in combo:
                        merged.update(part)
                    for tail in per_group(rest):
                        out = dict(merged)
                        out.update(tail)
                        yield out

        for body in per_group(sorted(groups)):
            body[v] = target
            yield body

    images = []
    for body in maps(root, root):
        images.append(tuple(body[v] for v in range(t.n)))
    return sorted(images)


def distinguishing_rooted_assignments(t: Graph, root: int,
                                      width: int) -> list[tuple[int, ...]]:
    """Every width-bounded colouring breaking all root-fixing symmetry.

    Builds colourings bottom-up; a partial choice survives only while
    the (edge colour, coloured child form) pairs at each vertex stay
    pairwise distinct, which characterises distinguishing colourings of
    rooted trees.
    """
    kids = rooted_children(t, root)

    def options(v: int):
        child_opts = [options(w) for w in kids[v]]
        out = []

        def rec(i, used, frag, parts):
            if i == len(kids[v]):
                out.append((tuple(sorted(parts)), dict(frag)))
                return
            w = kids[v][i]
            ei = t.index_of(v, w)
            for canon_w, sub in child_opts[i]:
                for c in range(1, width + 1):
                    key = (c, canon_w)
                    if key in used:
                        continue
                    used.add(key)
                    frag[ei] = c
                    frag.update(sub)
                    rec(i + 1, used, frag, parts + [key])
                    used.discard(key)
                    for k in sub:
                        del frag[k]
                    del frag[ei]

        rec(0, set(), {}, [])
        return out

    full = []
    for _, frag in options(root):
        full.append(tuple(frag[i] for i in range(t.m)))
    return sorted(full)


def oracle_rooted_dprime(t: Graph, root: int) -> int:
    if t.m == 0:
        return 1
    for width in range(1, t.m + 1):
        if distinguishing_rooted_assignments(t, root, width):
            return width
    raise AssertionError("rainbow colouring should always distinguish")


ALL_PAIRS_BUDGET = 2000


def oracle_count_rooted_classes(t: Graph, root: int,
                                width: int | None = None) -> tuple[int, str]:
    """(class count, method) for distinguishing colourings at a width.

    Classes are orbits of the root-fixing group acting on colourings.
    The action is free (a colouring fixed by a non-trivial element would
    not be distinguishing), so the count is #colourings / group order;
    within budget this is double-checked by classifying every colouring
    against representatives through explicit symmetry application.
    """
    if width is None:
        width = oracle_rooted_dprime(t, root)
    cols = distinguishing_rooted_assignments(t, root, width)
    images = rooted_automorphism_images(t, root)
    order = len(images)
    assert order == rooted_aut_order(t, root)
    assert len(cols) % order == 0
    classes = len(cols) // order

    eperms = [edge_perm_of(t, img) for img in images]
    sample_orbit = {tuple(c[ep[i]] for i in range(t.m)) for ep in eperms
                    for c in cols[:1]}
    if cols:
        assert len(sample_orbit) == order, "group action is not free"

    if len(cols) <= ALL_PAIRS_BUDGET and order <= ALL_PAIRS_BUDGET:
        reps: list[tuple[int, ...]] = []
        for c in cols:
            mapped = ({tuple(c[ep[i]] for i in range(t.m)) for ep in eperms})
            if not any(r in mapped for r in reps):
                reps.append(c)
        assert len(reps) == classes, "free-action count disagrees with reps"
        return classes, "all-pairs"
    return classes, "free-action"
