"""Constructive orientation procedures and the tree case analysis.

Each public function realises one constructive argument exactly as
stated, with deterministic tie-breaking (smallest label or
lexicographically least choice everywhere), so repeated runs produce
identical orientations.  Constructions whose correctness rests on a
claimed invariant verify that invariant at the end and raise
ConstructionError with a diagnostic rather than return a bad result.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from .distinguishing import (Colouring, RootedTree,
                             count_optimal_rooted_colourings, dprime)
from .graphs import (CenterInfo, Graph, Orientation, bipartition,
                     hamiltonian_path, is_claw_free, is_connected, is_tree,
                     longest_cycle, tree_center)
from .groups import (Permutation, arc_permutation, arcs_of, is_automorphism,
                     is_rigid, is_twisted, nontrivial_automorphism)
from .search import codes_for, find_maps

CENTRAL_VERTEX = "central_vertex"
CENTRAL_EDGE_FIXED = "central_edge_fixed"
CENTRAL_EDGE_SWAPPED = "central_edge_swapped"


class ConstructionError(RuntimeError):
    """A construction could not complete or failed its final invariant."""


@dataclass(frozen=True)
class OrderedPartition:
    """An ordered partition of 0..n-1 into disjoint vertex classes."""

    classes: tuple[frozenset[int], ...]

    @classmethod
    def of(cls, *classes) -> OrderedPartition:
        return cls(tuple(frozenset(c) for c in classes))

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for c in self.classes:
            if c & seen:
                raise ValueError("partition classes overlap")
            seen |= c

    def check_for(self, g: Graph) -> None:
        """Classes must cover the vertices and be independent in g."""
        covered = frozenset().union(*self.classes) if self.classes else frozenset()
        if covered != frozenset(range(g.n)):
            raise ValueError("partition does not cover the vertex set")
        for c in self.classes:
            for u, v in g.edges:
                if u in c and v in c:
                    raise ValueError(
                        f"class {sorted(c)} contains the edge ({u}, {v})")

    def index_of(self, v: int) -> int:
        """Position of v's class, counted from 1."""
        for i, c in enumerate(self.classes, start=1):
            if v in c:
                return i
        raise ValueError(f"vertex {v} is in no class")


@dataclass(frozen=True)
class PairColouring:
    """A colouring by pairs (bit, colour): bit in {0,1}, colour in 1..width.

    The bit component will drive edge directions, the colour component
    becomes an arc colouring.
    """

    width: int
    bits: tuple[int, ...]
    colours: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.width < 1:
            raise ValueError("pair colouring width must be at least 1")
        if len(self.bits) != len(self.colours):
            raise ValueError("bit and colour components differ in length")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("bit component must be 0 or 1")
        if any(not 1 <= c <= self.width for c in self.colours):
            raise ValueError("colour out of range for the declared width")

    def flatten(self) -> Colouring:
        """Injective single-value form: pair (b, c) becomes b*width + c."""
        return Colouring(2 * self.width,
                         tuple(b * self.width + c
                               for b, c in zip(self.bits, self.colours)))

    @classmethod
    def from_flat(cls, c: Colouring) -> PairColouring:
        """Split colours 1..w into pairs over width ceil(w/2); inverse of flatten
        up to the declared width when w is odd."""
        r = ceil(c.width / 2)
        bits = tuple(0 if v <= r else 1 for v in c.assignment)
        colours = tuple(v - b * r for v, b in zip(c.assignment, bits))
        return cls(r, bits, colours)


@dataclass(frozen=True)
class TreeCase:
    """How a tree's centre sits under its automorphisms.

    unique_optimal and rooted_half are filled only in the swapped case:
    the half is one component of the tree minus the central edge, rooted
    at its central-edge endpoint, and unique_optimal records whether its
    optimal distinguishing colouring is unique up to root-preserving
    automorphisms.
    """

    kind: str
    center: CenterInfo
    unique_optimal: bool | None = None
    rooted_half: RootedTree | None = None


@dataclass(frozen=True)
class ClawfreeTrace:
    """Construction transcript for the claw-free rigid orientation.

    branch is "hamiltonian", "cycle" or "cut_vertex".  For the cycle
    branch, cycle holds the directed cycle's vertex order and
    checkpoint_arcs the arcs oriented before the leftover phase.  For
    the cut-vertex branch, source is the vertex made a unique source.
    """

    result: Orientation
    branch: str
    cycle: tuple[int, ...] | None = None
    checkpoint_arcs: tuple[tuple[int, int], ...] | None = None
    source: int | None = None


def layered_orientation(g: Graph, partition: OrderedPartition) -> Orientation:
    """Direct every edge from its lower-indexed class to the higher one.

    When every class is setwise fixed by Aut(g), the result keeps the
    whole automorphism group.
    """
    partition.check_for(g)
    idx = {v: partition.index_of(v) for v in range(g.n)}
    return Orientation(g, tuple(idx[u] < idx[v] for u, v in g.edges))


def natural_bipartition(g: Graph) -> OrderedPartition:
    """The graph's two-colour classes as an ordered partition."""
    classes = bipartition(g)
    if classes is None:
        raise ValueError("graph is not bipartite")
    return OrderedPartition.of(*classes)


def split_colouring(g: Graph, partition: OrderedPartition,
                    pair: PairColouring) -> tuple[Orientation, Colouring]:
    """Turn a pair colouring into an orientation plus an arc colouring.

    An edge whose pair bit is 0 is directed like the layered
    orientation, a bit of 1 reverses it; the arc keeps the pair's colour
    component.
    """
    partition.check_for(g)
    if len(pair.bits) != g.m:
        raise ValueError("pair colouring length does not match the edge count")
    idx = {v: partition.index_of(v) for v in range(g.n)}
    flags = []
    for i, (u, v) in enumerate(g.edges):
        low_high = idx[u] < idx[v]
        flags.append(low_high if pair.bits[i] == 0 else not low_high)
    return Orientation(g, tuple(flags)), Colouring(pair.width, pair.colours)


def merge_colouring(g: Graph, partition: OrderedPartition, o: Orientation,
                    c: Colouring) -> PairColouring:
    """Exact inverse of split_colouring."""
    partition.check_for(g)
    if o.base != g:
        raise ValueError("orientation does not belong to the given graph")
    if len(c.assignment) != g.m:
        raise ValueError("colouring length does not match the edge count")
    idx = {v: partition.index_of(v) for v in range(g.n)}
    bits = tuple(0 if idx[t] < idx[h] else 1 for t, h in o.arcs)
    return PairColouring(c.width, bits, c.assignment)


def _positions(path) -> dict[int, int]:
    return {v: i for i, v in enumerate(path)}


def hamiltonian_orientation(g: Graph, path=None) -> Orientation:
    """Direct every edge from the earlier to the later path position.

    Every vertex ends up with a distinct count of vertices reachable by
    directed paths, so the result has no non-trivial automorphism; this
    is verified and a failure raises ConstructionError.
    """
    if path is None:
        path = hamiltonian_path(g)
        if path is None:
            raise ValueError("graph is not traceable")
    path = tuple(path)
    if sorted(path) != list(range(g.n)):
        raise ValueError("path does not visit every vertex exactly once")
    if any(not g.has_edge(a, b) for a, b in zip(path, path[1:])):
        raise ValueError("path is not a path of the graph")
    pos = _positions(path)
    o = Orientation(g, tuple(pos[u] < pos[v] for u, v in g.edges))
    if not is_rigid(o):
        raise ConstructionError(
            f"orientation along path {path} kept a symmetry; arcs: {o.arcs}")
    return o


def compatible_orientation(g: Graph, p: Permutation) -> Orientation:
    """An orientation preserved by the given non-twisted automorphism.

    Sweeps the cycles of the induced arc permutation in index order,
    adopting the least unoriented arc of each fresh cycle and
    propagating it; mirror cycles are already consistent when reached.
    """
    ap = arc_permutation(g, p)
    if is_twisted(g, p):
        raise ValueError("twisted automorphism admits no compatible orientation")
    arcs = arcs_of(g)
    chosen: dict[int, tuple[int, int]] = {}
    for a in range(len(arcs)):
        if a // 2 in chosen:
            continue
        b = a
        while True:
            t, h = arcs[b]
            e = b // 2
            if e in chosen and chosen[e] != (t, h):
                raise ConstructionError(
                    f"cycle through arc {arcs[a]} conflicts at edge {g.edges[e]}")
            chosen[e] = (t, h)
            b = ap.image[b]
            if b == a:
                break
    o = Orientation.from_arcs(g, [chosen[e] for e in range(g.m)])
    if not is_automorphism(o, p):
        raise ConstructionError("constructed orientation does not admit the automorphism")
    return o


def _blocks(g: Graph) -> tuple[list[frozenset[int]], set[int]]:
    """Biconnected components (as vertex sets) and cut vertices."""
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    cut: set[int] = set()
    comps: list[frozenset[int]] = []
    counter = 0
    for s in range(g.n):
        if disc[s] != -1:
            continue
        stack: list[tuple[int, int]] = []
        work = [(s, iter(sorted(g.adj[s])))]
        disc[s] = low[s] = counter
        counter += 1
        root_children = 0
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    stack.append((v, w))
                    parent[w] = v
                    disc[w] = low[w] = counter
                    counter += 1
                    if v == s:
                        root_children += 1
                    work.append((w, iter(sorted(g.adj[w]))))
                    advanced = True
                    break
                if w != parent[v] and disc[w] < disc[v]:
                    stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    if u != s or root_children > 1:
                        cut.add(u)
                    comp: set[int] = set()
                    while stack and disc[stack[-1][0]] >= disc[v]:
                        a, b = stack.pop()
                        comp |= {a, b}
                    if stack and stack[-1] == (u, v):
                        a, b = stack.pop()
                        comp |= {a, b}
                    if comp:
                        comps.append(frozenset(comp))
        if g.degree(s) == 0:
            comps.append(frozenset({s}))
    return comps, cut


def _path_cover_upto2(h: Graph, ids: tuple[int, ...]) -> list[tuple[int, ...]] | None:
    """At most two vertex-disjoint paths covering h, in original labels.

    Prefers a single Hamiltonian path, then the first split found with
    subsets enumerated in a fixed order.  None when no such cover exists.
    """
    if h.n == 0:
        return []
    whole = hamiltonian_path(h)
    if whole is not None:
        return [tuple(ids[v] for v in whole)]
    for mask in range(1, 1 << h.n):
        left = [v for v in range(h.n) if mask >> v & 1]
        right = [v for v in range(h.n) if not mask >> v & 1]
        if not right:
            continue
        hl, idl = h.induced(left)
        pl = hamiltonian_path(hl)
        if pl is None:
            continue
        hr, idr = h.induced(right)
        pr = hamiltonian_path(hr)
        if pr is None:
            continue
        return [tuple(ids[idl[v]] for v in pl), tuple(ids[idr[v]] for v in pr)]
    return None


class _PartialOrientation:
    """Arc decisions made so far, with reachability over the decided arcs."""

    def __init__(self, g: Graph):
        self.g = g
        self.arc: dict[int, tuple[int, int]] = {}
        self.out: list[set[int]] = [set() for _ in range(g.n)]

    def orient(self, t: int, h: int) -> None:
        e = self.g.index_of(t, h)
        if e in self.arc:
            if self.arc[e] != (t, h):
                raise ConstructionError(
                    f"edge {self.g.edges[e]} oriented both ways")
            return
        self.arc[e] = (t, h)
        self.out[t].add(h)

    def oriented(self, u: int, v: int) -> bool:
        return self.g.index_of(u, v) in self.arc

    def reaches(self, a: int, b: int) -> bool:
        seen = {a}
        stack = [a]
        while stack:
            v = stack.pop()
            if v == b:
                return True
            for w in self.out[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return False

    def arcs_snapshot(self) -> tuple[tuple[int, int], ...]:
        return tuple(self.arc[e] for e in sorted(self.arc))


def _orient_positionally(po: _PartialOrientation, sequence, g: Graph) -> None:
    """All edges inside the sequence's vertex set run earlier to later."""
    pos = _positions(sequence)
    for u in sequence:
        for w in g.adj[u]:
            if w in pos and pos[u] < pos[w]:
                po.orient(u, w)


def _expand(g: Graph, po: _PartialOrientation, label: dict[int, int],
            reached: set[int], processed: set[int], skip: frozenset[int]) -> None:
    """The reach-and-process recursion shared by both claw-free branches.

    Takes the unprocessed reached vertex with the least label; its
    neighbours outside the reached set must induce a traceable subgraph,
    which is oriented positionally along a Hamiltonian path together
    with the star from the current vertex.  Vertices in skip never get
    their edges oriented here (the cut-vertex branch keeps one vertex as
    a future source).
    """
    while reached != processed:
        v = min(reached - processed, key=lambda x: label[x])
        fresh = sorted(set(g.adj[v]) - reached)
        processed.add(v)
        if not fresh or v in skip:
            continue
        sub, ids = g.induced(fresh)
        local = hamiltonian_path(sub)
        if local is None:
            raise ConstructionError(
                f"expansion at vertex {v} hit a non-traceable neighbour set {fresh}")
        ordered = tuple(ids[w] for w in local)
        for w in ordered:
            po.orient(v, w)
        _orient_positionally(po, ordered, g)
        base = max(label.values())
        for off, w in enumerate(ordered, start=1):
            label[w] = base + off
        reached.update(ordered)


def _finish_leftovers(g: Graph, po: _PartialOrientation, skip: frozenset[int]) -> None:
    """Direct remaining edges in canonical order without closing a cycle.

    Prefers the low-to-high direction, reversing when that would create
    a directed cycle; edges at skipped vertices are left alone.
    """
    for u, v in g.edges:
        if u in skip or v in skip or po.oriented(u, v):
            continue
        if not po.reaches(v, u):
            po.orient(u, v)
        elif not po.reaches(u, v):
            po.orient(v, u)
        else:
            raise ConstructionError(
                f"edge ({u}, {v}) closes a directed cycle in both directions")


def clawfree_rigid_orientation_trace(g: Graph) -> ClawfreeTrace:
    """Rigid orientation of a connected claw-free graph on six or more vertices.

    Follows the constructive argument: Hamiltonian delegation when the
    longest cycle spans all vertices, else directed-cycle seeding with
    chords low-to-high and the reach-and-process recursion; graphs with
    a cut vertex are seeded from a leaf block and end with a unique
    source.  The result is checked to be rigid.
    """
    if not is_connected(g):
        raise ValueError("construction requires a connected graph")
    if not is_claw_free(g):
        raise ValueError("not claw-free")
    if g.n < 6:
        raise ValueError("construction requires at least six vertices")

    comps, cuts = _blocks(g)
    if not cuts:
        trace = _clawfree_two_connected(g)
    else:
        trace = _clawfree_cut_vertex(g, comps, cuts)
    witness = nontrivial_automorphism(trace.result)
    if witness is not None:
        raise ConstructionError(
            f"orientation kept the symmetry {witness.image}; arcs: {trace.result.arcs}")
    return trace


def clawfree_rigid_orientation(g: Graph) -> Orientation:
    return clawfree_rigid_orientation_trace(g).result


def _clawfree_two_connected(g: Graph) -> ClawfreeTrace:
    cycle = longest_cycle(g)
    assert cycle is not None
    if len(cycle) == g.n:
        o = hamiltonian_orientation(g)
        return ClawfreeTrace(o, "hamiltonian")

    on_cycle = set(cycle)
    candidates = [v for v in cycle if set(g.adj[v]) <= on_cycle]
    if not candidates:
        raise ConstructionError(
            "no cycle vertex has its whole neighbourhood on the longest cycle")
    v1 = min(candidates)
    at = cycle.index(v1)
    succ, pred = cycle[(at + 1) % len(cycle)], cycle[at - 1]
    if succ < pred:
        order = cycle[at:] + cycle[:at]
    else:
        order = (cycle[at:at + 1] + tuple(reversed(cycle[:at]))
                 + tuple(reversed(cycle[at + 1:])))

    po = _PartialOrientation(g)
    label = {v: i + 1 for i, v in enumerate(order)}
    for a, b in zip(order, order[1:] + order[:1]):
        po.orient(a, b)
    for u in order:
        for w in g.adj[u]:
            if w in on_cycle and not po.oriented(u, w) and label[u] < label[w]:
                po.orient(u, w)

    reached = set(order)
    processed: set[int] = set()
    _expand(g, po, label, reached, processed, skip=frozenset())
    checkpoint = po.arcs_snapshot()
    _finish_leftovers(g, po, skip=frozenset())
    o = Orientation.from_arcs(g, [po.arc[e] for e in range(g.m)])
    return ClawfreeTrace(o, "cycle", cycle=order, checkpoint_arcs=checkpoint)


def _clawfree_cut_vertex(g: Graph, comps, cuts) -> ClawfreeTrace:
    leaf_blocks = sorted((c for c in comps if len(c & cuts) == 1),
                         key=lambda c: sorted(c))
    if not leaf_blocks:
        raise ConstructionError("cut vertices present but no leaf block found")
    block = leaf_blocks[0]
    (v,) = block & cuts
    u = min(w for w in g.adj[v] if w in block)

    others = sorted(set(g.adj[v]) - {u})
    sub, ids = g.induced(others)
    cover = _path_cover_upto2(sub, ids)
    if cover is None:
        raise ConstructionError(
            f"neighbourhood {others} of cut vertex {v} has no cover by two paths")

    po = _PartialOrientation(g)
    for w in others:
        po.orient(v, w)
    for path in cover:
        _orient_positionally(po, path, g)

    label = {v: 1}
    nxt = 2
    for path in cover:
        for w in path:
            label[w] = nxt
            nxt += 1
    label[u] = nxt
    reached = set(label)
    processed = {v}
    _expand(g, po, label, reached, processed, skip=frozenset({u}))
    checkpoint = po.arcs_snapshot()
    _finish_leftovers(g, po, skip=frozenset({u}))
    for w in sorted(g.adj[u]):
        if not po.oriented(u, w):
            po.orient(u, w)
    o = Orientation.from_arcs(g, [po.arc[e] for e in range(g.m)])
    return ClawfreeTrace(o, "cut_vertex", checkpoint_arcs=checkpoint, source=u)


def tree_case(t: Graph) -> TreeCase:
    """Classify a tree by its centre and the central-edge swap."""
    if not is_tree(t):
        raise ValueError("tree_case requires a tree")
    if t.n < 3:
        raise ValueError("tree_case requires at least three vertices")
    center = tree_center(t)
    if center.kind == "vertex":
        return TreeCase(CENTRAL_VERTEX, center)
    a, b = center.vertices
    codes = codes_for(t)
    swap = next(iter(find_maps(codes, codes, fixed=((a, b), (b, a)))), None)
    if swap is None:
        return TreeCase(CENTRAL_EDGE_FIXED, center)
    half = _component_rooted(t, a, avoid_edge=(a, b))
    unique = count_optimal_rooted_colourings(half) == 1
    return TreeCase(CENTRAL_EDGE_SWAPPED, center, unique_optimal=unique,
                    rooted_half=half)


def _component_rooted(t: Graph, root: int, avoid_edge: tuple[int, int]) -> RootedTree:
    banned = frozenset(avoid_edge)
    seen = {root}
    stack = [root]
    while stack:
        v = stack.pop()
        for w in t.adj[v]:
            if {v, w} == set(banned) or w in seen:
                continue
            seen.add(w)
            stack.append(w)
    sub, ids = t.induced(sorted(seen))
    return RootedTree(sub, ids.index(root))


def tree_od_values(t: Graph) -> tuple[int, int, TreeCase]:
    """Orientation extremes of a tree from its case analysis alone.

    The centre-fixed cases give (ceil(D/2), D) for D the tree's
    distinguishing index; a swapped central edge with a unique optimal
    half colouring lowers both by replacing D with D-1.
    """
    case = tree_case(t)
    d = dprime(t).value
    if case.kind == CENTRAL_EDGE_SWAPPED and case.unique_optimal:
        return ceil((d - 1) / 2), d - 1, case
    return ceil(d / 2), d, case
