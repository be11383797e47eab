"""Undirected graphs, orientations, text formats, and structure recognition.

Vertices are 0..n-1.  Edges are stored as (u, v) pairs with u < v in
lexicographic order; the position of an edge in that order is its canonical
index, used everywhere else (colour assignments, direction vectors).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations


class FormatError(ValueError):
    """Text in graph6/digraph6/edgelist form that cannot be decoded."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with a canonical sorted edge list."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph must have at least one vertex")
        prev = None
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) is not canonical for n={self.n}")
            if prev is not None and (u, v) <= prev:
                raise ValueError("edges must be strictly increasing")
            prev = (u, v)

    @classmethod
    def from_edges(cls, n: int, edges) -> Graph:
        """Build a graph from unordered pairs, rejecting loops and duplicates."""
        canon = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            canon.append((u, v) if u < v else (v, u))
        if len(set(canon)) != len(canon):
            raise ValueError("duplicate edge")
        return cls(n, tuple(sorted(canon)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return ((u, v) if u < v else (v, u)) in self.edge_index

    def index_of(self, u: int, v: int) -> int:
        """Canonical index of the edge between u and v."""
        return self.edge_index[(u, v) if u < v else (v, u)]

    def relabel(self, image) -> Graph:
        """Apply the vertex map i -> image[i] and re-canonicalise."""
        return Graph.from_edges(self.n, ((image[u], image[v]) for u, v in self.edges))

    def induced(self, vertices) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph on the given vertices, relabelled to 0..k-1.

        Returns the subgraph and the sorted original ids; new vertex i
        corresponds to old vertex ids[i].
        """
        ids = tuple(sorted(vertices))
        pos = {v: i for i, v in enumerate(ids)}
        sub = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph.from_edges(len(ids), sub), ids


@dataclass(frozen=True)
class Orientation:
    """An orientation of a graph: one direction per canonical edge.

    forward[i] is True when edge i = (u, v) carries the arc u -> v.
    """

    base: Graph
    forward: tuple[bool, ...]

    def __post_init__(self) -> None:
        if len(self.forward) != self.base.m:
            raise ValueError("one direction flag per edge required")

    @classmethod
    def from_arcs(cls, base: Graph, arcs) -> Orientation:
        flags: list[bool | None] = [None] * base.m
        for t, h in arcs:
            i = base.index_of(t, h)
            f = t < h
            if flags[i] is not None:
                raise ValueError(f"edge {base.edges[i]} directed twice")
            flags[i] = f
        if any(f is None for f in flags):
            raise ValueError("every edge needs a direction")
        return cls(base, tuple(flags))  # type: ignore[arg-type]

    @classmethod
    def from_vector(cls, base: Graph, vec: int) -> Orientation:
        """Direction vector: bit i set means edge i is reversed (v -> u)."""
        return cls(base, tuple(not (vec >> i) & 1 for i in range(base.m)))

    @property
    def vector(self) -> int:
        return sum(1 << i for i, f in enumerate(self.forward) if not f)

    @cached_property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) if f else (v, u)
                     for (u, v), f in zip(self.base.edges, self.forward))

    @cached_property
    def out_adj(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.base.n)]
        for t, h in self.arcs:
            out[t].add(h)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def in_adj(self) -> tuple[frozenset[int], ...]:
        inn: list[set[int]] = [set() for _ in range(self.base.n)]
        for t, h in self.arcs:
            inn[h].add(t)
        return tuple(frozenset(s) for s in inn)

    def relabel(self, image) -> Orientation:
        new_base = self.base.relabel(image)
        return Orientation.from_arcs(new_base, ((image[t], image[h]) for t, h in self.arcs))


# ---------------------------------------------------------------------------
# graph6 / digraph6 / edgelist

_G6_HEADER = ">>graph6<<"
_D6_HEADER = ">>digraph6<<"


def _decode_size(text: str) -> tuple[int, str]:
    if not text:
        raise FormatError("empty input")
    code = ord(text[0])
    if code == 126:
        raise FormatError("graphs with more than 62 vertices are not supported")
    if not 63 <= code <= 125:
        raise FormatError(f"bad size byte {text[0]!r}")
    n = code - 63
    if n == 0:
        raise FormatError("vertex count 0")
    return n, text[1:]


def _decode_bits(data: str, count: int) -> list[int]:
    need = (count + 5) // 6
    if len(data) != need:
        raise FormatError(f"expected {need} data bytes, got {len(data)}")
    bits: list[int] = []
    for ch in data:
        code = ord(ch) - 63
        if not 0 <= code <= 63:
            raise FormatError(f"bad data byte {ch!r}")
        bits.extend((code >> k) & 1 for k in range(5, -1, -1))
    if any(bits[count:]):
        raise FormatError("nonzero padding bits")
    return bits[:count]


def _encode_bits(bits: list[int]) -> str:
    while len(bits) % 6:
        bits.append(0)
    out = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def _upper_triangle_pairs(n: int):
    for j in range(1, n):
        for i in range(j):
            yield i, j


def _parse_graph6(text: str) -> Graph:
    if text.startswith(_G6_HEADER):
        text = text[len(_G6_HEADER):]
    n, data = _decode_size(text)
    bits = _decode_bits(data, n * (n - 1) // 2)
    edges = [(i, j) for (i, j), b in zip(_upper_triangle_pairs(n), bits) if b]
    return Graph.from_edges(n, edges)


def _parse_digraph6(text: str) -> Orientation:
    if text.startswith(_D6_HEADER):
        text = text[len(_D6_HEADER):]
    if not text.startswith("&"):
        raise FormatError("digraph6 input must start with '&'")
    n, data = _decode_size(text[1:])
    bits = _decode_bits(data, n * n)
    arcs = []
    for t in range(n):
        for h in range(n):
            if bits[t * n + h]:
                if t == h:
                    raise FormatError("not an orientation: loop")
                if bits[h * n + t] and h < t:
                    raise FormatError("not an orientation: opposite arcs")
                arcs.append((t, h))
    if any(bits[h * n + t] and bits[t * n + h] for t, h in arcs):
        raise FormatError("not an orientation: opposite arcs")
    base = Graph.from_edges(n, arcs)
    return Orientation.from_arcs(base, arcs)


def _parse_edgelist(text: str) -> Graph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise FormatError("empty edgelist")
    try:
        n = int(rows[0])
    except ValueError as exc:
        raise FormatError(f"bad vertex count line {rows[0]!r}") from exc
    if n < 1:
        raise FormatError("vertex count 0")
    edges = []
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise FormatError(f"bad edge line {line!r}") from exc
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge ({u}, {v}) out of range")
        edges.append((u, v))
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def parse(fmt: str, text: str) -> Graph | Orientation:
    """Decode one of the supported text formats.

    fmt is "graph6", "digraph6" or "edgelist".  digraph6 input must encode
    an orientation (no loops, no opposite arc pairs).
    """
    text = text.strip()
    if fmt == "graph6":
        return _parse_graph6(text)
    if fmt == "digraph6":
        return _parse_digraph6(text)
    if fmt == "edgelist":
        return _parse_edgelist(text)
    raise FormatError(f"unknown format {fmt!r}")


def encode_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("graph6 encoding supported only for n <= 62")
    present = set(g.edges)
    bits = [1 if (i, j) in present else 0 for i, j in _upper_triangle_pairs(g.n)]
    return chr(g.n + 63) + _encode_bits(bits)


def encode_digraph6(o: Orientation) -> str:
    n = o.base.n
    if n > 62:
        raise ValueError("digraph6 encoding supported only for n <= 62")
    mat = [0] * (n * n)
    for t, h in o.arcs:
        mat[t * n + h] = 1
    return "&" + chr(n + 63) + _encode_bits(mat)


# ---------------------------------------------------------------------------
# Structure recognition

@dataclass(frozen=True)
class StructureReport:
    connected: bool
    bipartition: tuple[tuple[int, ...], tuple[int, ...]] | None
    is_tree: bool
    is_claw_free: bool
    hamiltonian_path: tuple[int, ...] | None
    longest_cycle: tuple[int, ...] | None


@dataclass(frozen=True)
class CenterInfo:
    """Centre of a tree: kind is "vertex" or "edge"."""

    kind: str
    vertices: tuple[int, ...]


def is_connected(g: Graph) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def bipartition(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Two-colouring with every edge crossing, or None.

    The side containing the least vertex of each component is put in the
    first class, which makes the result canonical.
    """
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        queue = [s]
        while queue:
            v = queue.pop()
            for w in g.adj[v]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return None
    left = tuple(v for v in range(g.n) if colour[v] == 0)
    right = tuple(v for v in range(g.n) if colour[v] == 1)
    return left, right


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def is_claw_free(g: Graph) -> bool:
    """True when no vertex has three pairwise non-adjacent neighbours."""
    for v in range(g.n):
        nbrs = sorted(g.adj[v])
        for a, b, c in combinations(nbrs, 3):
            if b not in g.adj[a] and c not in g.adj[a] and c not in g.adj[b]:
                return False
    return True


def hamiltonian_path(g: Graph) -> tuple[int, ...] | None:
    """Lexicographically least Hamiltonian path, or None.

    Exhaustive backtracking; candidates are tried in ascending order so the
    first complete path found is the least one.
    """
    n = g.n
    if n == 1:
        return (0,)
    order = [sorted(g.adj[v]) for v in range(n)]
    path: list[int] = []

    def extend(v: int, visited: int) -> tuple[int, ...] | None:
        path.append(v)
        if len(path) == n:
            return tuple(path)
        for w in order[v]:
            if not visited >> w & 1:
                found = extend(w, visited | 1 << w)
                if found:
                    return found
        path.pop()
        return None

    for s in range(n):
        found = extend(s, 1 << s)
        if found:
            return found
    return None


def longest_cycle(g: Graph) -> tuple[int, ...] | None:
    """Lexicographically least cycle of maximum length, or None.

    A cycle is written starting from its least vertex; both traversal
    directions are explored, so the least sequence wins.
    """
    n = g.n
    order = [sorted(g.adj[v]) for v in range(n)]
    path: list[int] = []

    def extend(s: int, v: int, visited: int, want: int) -> tuple[int, ...] | None:
        path.append(v)
        if len(path) == want:
            if s in g.adj[v]:
                return tuple(path)
            path.pop()
            return None
        for w in order[v]:
            if w > s and not visited >> w & 1:
                found = extend(s, w, visited | 1 << w, want)
                if found:
                    return found
        path.pop()
        return None

    for want in range(n, 2, -1):
        for s in range(n - want + 1):
            found = extend(s, s, 1 << s, want)
            if found:
                return found
    return None


def analyze(g: Graph) -> StructureReport:
    """Exact structure report; every field is computed, none is estimated."""
    return StructureReport(
        connected=is_connected(g),
        bipartition=bipartition(g),
        is_tree=is_tree(g),
        is_claw_free=is_claw_free(g),
        hamiltonian_path=hamiltonian_path(g),
        longest_cycle=longest_cycle(g),
    )


def tree_center(g: Graph) -> CenterInfo:
    """Centre of a tree by repeated leaf stripping."""
    if not is_tree(g):
        raise ValueError("tree_center requires a tree")
    alive = set(range(g.n))
    deg = [g.degree(v) for v in range(g.n)]
    while len(alive) > 2:
        leaves = [v for v in alive if deg[v] <= 1]
        for v in leaves:
            alive.remove(v)
            for w in g.adj[v]:
                if w in alive:
                    deg[w] -= 1
    rest = sorted(alive)
    if len(rest) == 1:
        return CenterInfo("vertex", (rest[0],))
    u, v = rest
    if v not in g.adj[u]:
        raise AssertionError("two-vertex centre must be an edge")
    return CenterInfo("edge", (u, v))
