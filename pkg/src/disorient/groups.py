"""Exact automorphism groups by exhaustive backtracking, and derived tests.

Groups are returned as full element lists in lexicographic order of the
image array.  Enumeration is capped (default one million elements) and a
GroupSizeError is raised when the cap is hit, so callers never truncate a
group silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Iterator

from .graphs import Graph, Orientation
from .search import codes_for, find_maps, nontrivial_map

DEFAULT_GROUP_CAP = 10 ** 6

POINTWISE = "pointwise"
SETWISE_ONLY = "setwise_only"
NOT_FIXED = "not_fixed"


class GroupSizeError(RuntimeError):
    """Automorphism group enumeration exceeded the configured cap."""

    def __init__(self, cap: int):
        super().__init__(f"group too large: more than {cap} elements")
        self.cap = cap


@dataclass(frozen=True)
class Permutation:
    """A bijection of 0..n-1 given by its image array."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError("image array is not a bijection")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> Permutation:
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(tuple(img))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, v: int) -> int:
        return self.image[v]

    @property
    def is_identity(self) -> bool:
        return all(w == v for v, w in enumerate(self.image))

    def compose(self, other: Permutation) -> Permutation:
        """self after other: (self.compose(other))(v) = self(other(v))."""
        return Permutation(tuple(self.image[w] for w in other.image))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for v, w in enumerate(self.image):
            inv[w] = v
        return Permutation(tuple(inv))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Non-trivial cycles, each starting at its least element."""
        seen = [False] * self.n
        out = []
        for v in range(self.n):
            if seen[v] or self.image[v] == v:
                seen[v] = True
                continue
            cyc = [v]
            seen[v] = True
            w = self.image[v]
            while w != v:
                cyc.append(w)
                seen[w] = True
                w = self.image[w]
            out.append(tuple(cyc))
        return tuple(out)

    def order(self) -> int:
        val = 1
        for cyc in self.cycles():
            val = val * len(cyc) // gcd(val, len(cyc))
        return val


@dataclass(frozen=True)
class AutGroup:
    """Full element list of an automorphism group, identity included."""

    elements: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p.image in self.image_set

    @cached_property
    def image_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(p.image for p in self.elements)

    @property
    def is_trivial(self) -> bool:
        return len(self.elements) == 1


def automorphisms(x: Graph | Orientation, *, cap: int | None = None) -> Iterator[Permutation]:
    """Automorphisms in lexicographic image order, the identity first."""
    count = 0
    for img in find_maps(codes_for(x), codes_for(x)):
        count += 1
        if cap is not None and count > cap:
            raise GroupSizeError(cap)
        yield Permutation(img)


def automorphism_group(x: Graph | Orientation, *, cap: int = DEFAULT_GROUP_CAP) -> AutGroup:
    return AutGroup(tuple(automorphisms(x, cap=cap)))


def nontrivial_automorphism(x: Graph | Orientation) -> Permutation | None:
    """Least non-identity automorphism, or None for a rigid structure."""
    img = nontrivial_map(codes_for(x))
    return None if img is None else Permutation(img)


def is_rigid(x: Graph | Orientation) -> bool:
    return nontrivial_automorphism(x) is None


def is_automorphism(x: Graph | Orientation, p: Permutation) -> bool:
    if isinstance(x, Orientation):
        arcset = set(x.arcs)
        return len(p.image) == x.base.n and all(
            (p.image[t], p.image[h]) in arcset for t, h in x.arcs)
    return len(p.image) == x.n and all(
        x.has_edge(p.image[u], p.image[v]) for u, v in x.edges)


def arcs_of(g: Graph) -> tuple[tuple[int, int], ...]:
    """Canonical ordered-arc list: edge i yields arcs 2i = (u, v), 2i+1 = (v, u)."""
    out = []
    for u, v in g.edges:
        out.append((u, v))
        out.append((v, u))
    return tuple(out)


def arc_permutation(g: Graph, p: Permutation) -> Permutation:
    """Action of an automorphism on the 2|E| ordered arcs."""
    if not is_automorphism(g, p):
        raise ValueError("permutation is not an automorphism of the graph")
    index = {}
    for i, (u, v) in enumerate(g.edges):
        index[(u, v)] = 2 * i
        index[(v, u)] = 2 * i + 1
    arcs = arcs_of(g)
    return Permutation(tuple(index[(p.image[t], p.image[h])] for t, h in arcs))


def is_twisted(g: Graph, p: Permutation) -> bool:
    """True when some edge's two arcs lie in one cycle of the induced arc action.

    Equivalently, some power of p transposes the end-vertices of an edge;
    such an automorphism cannot survive in any orientation of g.
    """
    ap = arc_permutation(g, p)
    cycle_id = [-1] * len(ap.image)
    cid = 0
    for a in range(len(ap.image)):
        if cycle_id[a] == -1:
            b = a
            while cycle_id[b] == -1:
                cycle_id[b] = cid
                b = ap.image[b]
            cid += 1
    return any(cycle_id[2 * i] == cycle_id[2 * i + 1] for i in range(g.m))


def fixed_set_status(group: AutGroup, s: Iterable[int]) -> str:
    """How a vertex set sits under a group: pointwise, setwise_only, not_fixed."""
    sset = frozenset(s)
    pointwise = True
    for p in group:
        img = {p.image[v] for v in sset}
        if img != sset:
            return NOT_FIXED
        if any(p.image[v] != v for v in sset):
            pointwise = False
    return POINTWISE if pointwise else SETWISE_ONLY
