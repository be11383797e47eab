"""Distinguishing index of graphs and orientations by exact search.

An edge (or arc) colouring is distinguishing when no automorphism except
the identity preserves it; the distinguishing index is the least number
of colours for which one exists.  A single undirected edge has no such
colouring, so that graph is rejected.

The search never materialises the automorphism group.  Candidate
colourings are enumerated level by level (exactly k distinct colours at
level k) in restricted-growth form, which picks one representative per
colour-renaming class, and each candidate gets a colour-aware
backtracking stabiliser test.  Two pruning devices keep star-like
inputs cheap: interchangeable pendant edges at a shared support must
receive pairwise distinct colours, and automorphisms that defeated
earlier candidates are replayed as quick filters before the full test.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterator

from .graphs import Graph, Orientation, is_connected, is_tree
from .groups import Permutation
from .search import codes_for, nontrivial_map

_BREAKER_CACHE_LIMIT = 64


@dataclass(frozen=True)
class Colouring:
    """Colours 1..width assigned to edges in canonical edge-list order."""

    width: int
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.width < 1:
            raise ValueError("colouring width must be at least 1")
        if any(not 1 <= c <= self.width for c in self.assignment):
            raise ValueError("colour out of range for the declared width")

    @classmethod
    def constant(cls, m: int) -> Colouring:
        return cls(1, (1,) * m)

    @property
    def distinct_count(self) -> int:
        return len(set(self.assignment))


@dataclass(frozen=True)
class DprimeResult:
    """A distinguishing index together with a witness colouring."""

    value: int
    witness: Colouring


@dataclass(frozen=True)
class RootedTree:
    """A tree with a marked root vertex."""

    tree: Graph
    root: int

    def __post_init__(self) -> None:
        if not is_tree(self.tree):
            raise ValueError("underlying graph is not a tree")
        if not 0 <= self.root < self.tree.n:
            raise ValueError("root out of range")

    @cached_property
    def parent(self) -> tuple[int, ...]:
        """Parent of each vertex; the root is its own parent."""
        par = [-1] * self.tree.n
        par[self.root] = self.root
        stack = [self.root]
        while stack:
            v = stack.pop()
            for w in self.tree.adj[v]:
                if par[w] == -1:
                    par[w] = v
                    stack.append(w)
        return tuple(par)

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        kids = [[] for _ in range(self.tree.n)]
        for v, p in enumerate(self.parent):
            if v != self.root:
                kids[p].append(v)
        return tuple(tuple(sorted(k)) for k in kids)

    def encoding(self, colouring: Colouring):
        """Canonical form of the coloured rooted tree.

        Two colourings get equal encodings exactly when some
        root-preserving automorphism carries one to the other with
        colour values kept as they are.
        """
        if len(colouring.assignment) != self.tree.m:
            raise ValueError("colouring length does not match the edge count")

        def enc(v: int):
            return tuple(sorted(
                (colouring.assignment[self.tree.index_of(v, w)], enc(w))
                for w in self.children[v]))

        return enc(self.root)


def breaks(x: Graph | Orientation, colouring: Colouring, p: Permutation) -> bool:
    """Whether some edge of x gets a colour different from its image under p.

    The complement of preserves for automorphisms; a map that is not an
    automorphism at all counts as broken.
    """
    return not preserves(x, colouring, p)


def preserves(x: Graph | Orientation, colouring: Colouring, p: Permutation) -> bool:
    """Whether p is an automorphism of x that also fixes every colour class."""
    g = x.base if isinstance(x, Orientation) else x
    if len(colouring.assignment) != g.m:
        raise ValueError("colouring length does not match the edge count")
    eperm = _edge_perm(x, p.image)
    if eperm is None:
        return False
    return all(colouring.assignment[eperm[i]] == c
               for i, c in enumerate(colouring.assignment))


def colour_preserving_automorphism(
        x: Graph | Orientation, colouring: Colouring) -> Permutation | None:
    """Least non-identity automorphism preserving the colouring, if any."""
    g = x.base if isinstance(x, Orientation) else x
    if len(colouring.assignment) != g.m:
        raise ValueError("colouring length does not match the edge count")
    img = nontrivial_map(codes_for(x, colours=colouring.assignment))
    return None if img is None else Permutation(img)


def is_distinguishing(x: Graph | Orientation, colouring: Colouring) -> bool:
    return colour_preserving_automorphism(x, colouring) is None


def dprime(x: Graph | Orientation) -> DprimeResult:
    """Exact distinguishing index with a deterministic witness colouring.

    The witness is the first hit in a fixed enumeration order, so equal
    inputs always produce identical output.
    """
    g = x.base if isinstance(x, Orientation) else x
    if not is_connected(g):
        raise ValueError("distinguishing index requires a connected graph")
    if isinstance(x, Graph) and g.n == 2:
        raise ValueError(
            "the distinguishing index of a single undirected edge is undefined")
    result = _dprime_search(x)
    assert result is not None
    return result


def dprime_at_most(x: Graph | Orientation, k: int) -> DprimeResult | None:
    """Result if the distinguishing index is at most k, else None."""
    g = x.base if isinstance(x, Orientation) else x
    if not is_connected(g):
        raise ValueError("distinguishing index requires a connected graph")
    if isinstance(x, Graph) and g.n == 2:
        raise ValueError(
            "the distinguishing index of a single undirected edge is undefined")
    return _dprime_search(x, max_width=k)


def dprime_rooted(rt: RootedTree) -> DprimeResult:
    """Least width breaking every non-trivial root-preserving automorphism."""
    result = _dprime_search(rt.tree, root=rt.root)
    assert result is not None
    return result


def distinguishing_assignments(rt: RootedTree, width: int) -> Iterator[Colouring]:
    """All root-distinguishing colourings drawn from colours 1..width.

    Unlike the index search this keeps literal colour values: colourings
    differing only by renaming are yielded separately.
    """
    m = rt.tree.m
    fixed = ((rt.root, rt.root),)
    for assignment in product(range(1, width + 1), repeat=m):
        if nontrivial_map(codes_for(rt.tree, colours=assignment), fixed=fixed) is None:
            yield Colouring(width, assignment)


def count_optimal_rooted_colourings(rt: RootedTree, width: int | None = None) -> int:
    """Number of inequivalent distinguishing colourings at optimal width.

    Colourings are identified when a root-preserving automorphism maps
    one onto the other keeping colour values, so the count is the number
    of distinct canonical encodings.  A rooted-tree colouring breaks
    every symmetry exactly when, at each vertex, the pairs (edge colour
    to child, encoded child subtree) are pairwise distinct; the set of
    reachable encodings is therefore built bottom up without touching
    individual colourings.
    """
    if width is None:
        width = dprime_rooted(rt).value

    def encodings(v: int) -> frozenset:
        kids = rt.children[v]
        if not kids:
            return frozenset({()})
        menus = [
            tuple((c, e) for c in range(1, width + 1) for e in encodings(w))
            for w in kids
        ]
        out: set[tuple] = set()

        def assemble(i: int, chosen: tuple) -> None:
            if i == len(menus):
                out.add(tuple(sorted(chosen)))
                return
            for pair in menus[i]:
                if pair not in chosen:
                    assemble(i + 1, chosen + (pair,))

        assemble(0, ())
        return frozenset(out)

    return len(encodings(rt.root))


def _edge_perm(x: Graph | Orientation, image: tuple[int, ...]) -> tuple[int, ...] | None:
    """Edge-index permutation induced by a vertex bijection, or None.

    None means the bijection is not an automorphism of x.
    """
    if isinstance(x, Orientation):
        g = x.base
        arcset = set(x.arcs)
        if any((image[t], image[h]) not in arcset for t, h in x.arcs):
            return None
    else:
        g = x
        if any(not g.has_edge(image[u], image[v]) for u, v in g.edges):
            return None
    return tuple(g.index_of(image[u], image[v]) for u, v in g.edges)


def _twin_cliques(x: Graph | Orientation, root: int | None = None) -> list[list[int]]:
    """Groups of pendant edges any two of which swap by an automorphism.

    Edges inside one group must get pairwise distinct colours in every
    distinguishing colouring.  For an orientation only pendant arcs with
    matching direction are interchangeable, and when a root is pinned
    its own pendant edge never joins a group.
    """
    g = x.base if isinstance(x, Orientation) else x
    buckets: dict[tuple, list[int]] = {}
    for i, (u, v) in enumerate(g.edges):
        leaf, support = (u, v) if g.degree(u) == 1 else (v, u)
        if g.degree(leaf) != 1 or leaf == root:
            continue
        if g.n == 2:
            continue
        if isinstance(x, Orientation):
            outward = x.forward[i] == ((u, v) == (support, leaf))
            key = (support, outward)
        else:
            key = (support,)
        buckets.setdefault(key, []).append(i)
    return [edges for edges in buckets.values() if len(edges) >= 2]


def _prior_twins(m: int, cliques: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    prior = [[] for _ in range(m)]
    for clique in cliques:
        for pos, i in enumerate(clique):
            prior[i] = clique[:pos]
    return tuple(tuple(p) for p in prior)


def _candidate_strings(m: int, k: int,
                       prior: tuple[tuple[int, ...], ...]) -> Iterator[tuple[int, ...]]:
    """Restricted-growth strings of length m with exactly k values.

    Positions listed in prior must differ from their listed partners.
    """
    assignment = [0] * m

    def rec(i: int, mx: int) -> Iterator[tuple[int, ...]]:
        if mx + (m - i) < k:
            return
        if i == m:
            yield tuple(assignment)
            return
        banned = {assignment[j] for j in prior[i]}
        top = mx + 1 if mx < k else k
        for c in range(1, top + 1):
            if c in banned:
                continue
            assignment[i] = c
            yield from rec(i + 1, mx if c <= mx else c)

    yield from rec(0, 0)


def _dprime_search(x: Graph | Orientation, *, root: int | None = None,
                   max_width: int | None = None) -> DprimeResult | None:
    g = x.base if isinstance(x, Orientation) else x
    m = g.m
    if m == 0:
        return DprimeResult(1, Colouring(1, ()))
    fixed = () if root is None else ((root, root),)
    breaker = nontrivial_map(codes_for(x), fixed=fixed)
    if breaker is None:
        return DprimeResult(1, Colouring.constant(m))

    cliques = _twin_cliques(x, root=root)
    prior = _prior_twins(m, cliques)
    lower = max([2] + [len(c) for c in cliques])
    cache = [_edge_perm(x, breaker)]
    top = m if max_width is None else min(m, max_width)
    for k in range(lower, top + 1):
        for assignment in _candidate_strings(m, k, prior):
            if any(all(assignment[ep[i]] == assignment[i] for i in range(m))
                   for ep in cache):
                continue
            img = nontrivial_map(codes_for(x, colours=assignment), fixed=fixed)
            if img is None:
                return DprimeResult(k, Colouring(k, assignment))
            if len(cache) < _BREAKER_CACHE_LIMIT:
                eperm = _edge_perm(x, img)
                if eperm not in cache:
                    cache.append(eperm)
    if max_width is None:
        raise AssertionError("no distinguishing colouring found at any width")
    return None
