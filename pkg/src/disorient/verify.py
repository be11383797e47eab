"""Corpus-driven verification of the orientation results and conjecture scans.

Each named check runs over every graph of a corpus and yields, per
entry, a pass, a violation carrying the expected and actual values, or a
skip naming the unmet hypothesis or exceeded cap.  Conjecture scans
follow the same shape but treat a counterexample as a reported finding,
not an error; their distinguishing values can be cached in an
append-only JSON-lines file so interrupted sweeps resume cheaply.
"""

from __future__ import annotations

import json
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .complete_bipartite import (BOUNDARY, as_complete_bipartite, dprime_kmn,
                                 od_minus_kmn)
from .constructions import (CENTRAL_EDGE_SWAPPED, ConstructionError,
                            clawfree_rigid_orientation_trace,
                            compatible_orientation, hamiltonian_orientation,
                            tree_od_values)
from .distinguishing import dprime
from .graphs import (Graph, bipartition, encode_digraph6, encode_graph6,
                     hamiltonian_path, is_claw_free, is_connected, is_tree,
                     parse)
from .groups import (NOT_FIXED, automorphism_group, fixed_set_status,
                     is_automorphism, is_twisted)
from .orientations import (DEFAULT_EDGE_CAP, _edge_action,
                           enumerate_orientations, find_rigid_orientation,
                           od_extremes, od_minus)

THEOREM_IDS = ("obs1", "cor3", "cor6", "thm7", "thm8", "thm9", "thm12", "kmn")

CLAIMS = {
    "obs1": "orientation symmetries sit inside the graph's; equal groups "
            "give equal indices and rigidity gives index 1",
    "cor3": "bipartite without class swap: extremes are ceil(D'/2) and D'",
    "cor6": "trees with a fixed centre: extremes are ceil(D'/2) and D'",
    "thm7": "trees with a swapped central edge: formula by colouring count",
    "thm8": "traceable graphs admit a rigid orientation along the path",
    "thm9": "index-2 trichotomy through twisted automorphisms",
    "thm12": "claw-free graphs of order at least six orient rigidly",
    "kmn": "complete bipartite predictions match the swept values",
}


@dataclass(frozen=True)
class Violation:
    graph6: str
    expected: str
    actual: str

    def to_json(self) -> dict:
        return {"graph6": self.graph6, "expected": self.expected,
                "actual": self.actual}


@dataclass(frozen=True)
class Skip:
    graph6: str
    reason: str

    def to_json(self) -> dict:
        return {"graph6": self.graph6, "reason": self.reason}


@dataclass(frozen=True)
class Report:
    theorem_id: str
    total: int
    passed: int
    violations: tuple[Violation, ...]
    skipped: tuple[Skip, ...]
    wall_time: float

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "total": self.total,
            "passed": self.passed,
            "violations": [v.to_json() for v in self.violations],
            "skipped": [s.to_json() for s in self.skipped],
            "wall_time": round(self.wall_time, 3),
        }


@dataclass(frozen=True)
class Corpus:
    """Graphs to check, in input order; repeated lines are kept but flagged."""

    entries: tuple[Graph, ...]
    labels: tuple[str, ...]
    duplicates: tuple[str, ...] = ()

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @classmethod
    def from_lines(cls, lines) -> "Corpus":
        graphs: list[Graph] = []
        labels: list[str] = []
        dups: list[str] = []
        seen: set[str] = set()
        for raw in lines:
            text = raw.split("#", 1)[0].strip()
            if not text:
                continue
            graphs.append(parse("graph6", text))
            labels.append(text)
            if text in seen:
                dups.append(text)
            seen.add(text)
        return cls(tuple(graphs), tuple(labels), tuple(dups))

    @classmethod
    def from_file(cls, path) -> "Corpus":
        return cls.from_lines(Path(path).read_text().splitlines())

    @classmethod
    def from_graphs(cls, graphs) -> "Corpus":
        gs = tuple(graphs)
        return cls(gs, tuple(encode_graph6(g) for g in gs))


_PASS = ("pass", "", "")


def _skip(reason: str):
    return "skip", reason, ""


def _viol(expected: str, actual: str):
    return "violation", expected, actual


def _halved(d: int) -> int:
    return -(-d // 2)


def _check_obs1(g: Graph, cap: int):
    if not is_connected(g):
        return _skip("disconnected")
    if g.m > cap:
        return _skip(f"edge count {g.m} over cap {cap}")
    whole = automorphism_group(g)
    d_g = dprime(g).value if g.n != 2 else None
    for o in enumerate_orientations(g, edge_cap=cap):
        sub = automorphism_group(o)
        if not sub.image_set <= whole.image_set:
            extra = min(sub.image_set - whole.image_set)
            return _viol("orientation symmetries contained in the graph's",
                         f"{encode_digraph6(o)} admits {extra}")
        if sub.order == whole.order and d_g is not None:
            d_o = dprime(o).value
            if d_o != d_g:
                return _viol(f"equal groups give index {d_g}",
                             f"{encode_digraph6(o)} has index {d_o}")
        if sub.is_trivial:
            d_o = dprime(o).value
            if d_o != 1:
                return _viol("rigid orientation has index 1",
                             f"{encode_digraph6(o)} has index {d_o}")
    return _PASS


def _check_cor3(g: Graph, cap: int):
    if not is_connected(g):
        return _skip("disconnected")
    if g.n < 3:
        return _skip("fewer than three vertices")
    parts = bipartition(g)
    if parts is None:
        return _skip("not bipartite")
    if fixed_set_status(automorphism_group(g), parts[0]) == NOT_FIXED:
        return _skip("class-swapping automorphism present")
    if g.m > cap:
        return _skip(f"edge count {g.m} over cap {cap}")
    d = dprime(g).value
    res = od_extremes(g, edge_cap=cap)
    want = (_halved(d), d)
    got = (res.od_minus, res.od_plus)
    if got != want:
        return _viol(f"extremes {want}", f"extremes {got}")
    return _PASS


def _check_tree(g: Graph, cap: int, *, swapped: bool):
    if not is_connected(g):
        return _skip("disconnected")
    if not is_tree(g):
        return _skip("not a tree")
    if g.n < 3:
        return _skip("fewer than three vertices")
    lo, hi, case = tree_od_values(g)
    if (case.kind == CENTRAL_EDGE_SWAPPED) != swapped:
        return _skip(f"centre case is {case.kind}")
    if g.m > cap:
        return _skip(f"edge count {g.m} over cap {cap}")
    res = od_extremes(g, edge_cap=cap)
    got = (res.od_minus, res.od_plus)
    if got != (lo, hi):
        return _viol(f"extremes {(lo, hi)} [{case.kind}]", f"extremes {got}")
    return _PASS


def _check_cor6(g: Graph, cap: int):
    return _check_tree(g, cap, swapped=False)


def _check_thm7(g: Graph, cap: int):
    return _check_tree(g, cap, swapped=True)


def _check_thm8(g: Graph, cap: int):
    if not is_connected(g):
        return _skip("disconnected")
    path = hamiltonian_path(g)
    if path is None:
        return _skip("not traceable")
    try:
        o = hamiltonian_orientation(g, path)
    except ConstructionError as exc:
        return _viol("rigid orientation along the spanning path", str(exc))
    grp = automorphism_group(o)
    if not grp.is_trivial:
        return _viol("trivial group", f"order {grp.order}")
    return _PASS


def _parity_fixed_vector_exists(g: Graph, p) -> bool:
    """Whether some direction vector is invariant under p's edge action.

    Works cycle by cycle: following a cycle of the edge permutation
    forces each direction bit from the previous one, so a consistent
    assignment exists exactly when every cycle flips an even number of
    times.
    """
    perm, flips = _edge_action(g, p)
    seen = [False] * g.m
    for start in range(g.m):
        if seen[start]:
            continue
        parity = 0
        i = start
        while True:
            seen[i] = True
            parity ^= flips >> i & 1
            i = perm[i]
            if i == start:
                break
        if parity:
            return False
    return True


def _check_thm9(g: Graph, cap: int):
    if not is_connected(g):
        return _skip("disconnected")
    if g.n < 3:
        return _skip("fewer than three vertices")
    d = dprime(g).value
    if d != 2:
        return _skip(f"distinguishing index {d}, not 2")
    if g.m > cap:
        return _skip(f"edge count {g.m} over cap {cap}")
    grp = automorphism_group(g)
    split = {True: [], False: []}
    for p in grp:
        if not p.is_identity:
            split[is_twisted(g, p)].append(p)

    # (a) no orientation keeps a twisted map, shown by flip parity.
    for p in split[True]:
        if _parity_fixed_vector_exists(g, p):
            return _viol("no orientation admits the twisted map",
                         f"{tuple(p.image)} fixes some direction vector")
    for o in enumerate_orientations(g, edge_cap=cap):
        for p in automorphism_group(o):
            if not p.is_identity and is_twisted(g, p):
                return _viol("no orientation admits a twisted map",
                             f"{encode_digraph6(o)} admits {tuple(p.image)}")

    if not split[False]:
        res = od_extremes(g, edge_cap=cap)
        if (res.od_minus, res.od_plus) != (1, 1):
            return _viol("both extremes 1 without a usable symmetry",
                         f"extremes {(res.od_minus, res.od_plus)}")
        return _PASS

    # (c) a non-twisted symmetry survives into some orientation.
    res = od_extremes(g, edge_cap=cap)
    if res.od_plus != 2:
        return _viol("maximum over orientations 2", f"{res.od_plus}")
    p = min(split[False], key=lambda q: q.image)
    try:
        o = compatible_orientation(g, p)
    except (ValueError, ConstructionError) as exc:
        return _viol("orientation compatible with the chosen map", str(exc))
    if not is_automorphism(o, p):
        return _viol("constructed orientation admits the chosen map",
                     f"{encode_digraph6(o)} does not admit {tuple(p.image)}")
    return _PASS


def _directed_cycles(n: int, arcs) -> set[tuple[int, ...]]:
    """All simple directed cycles, each rotated to start at its least vertex."""
    out: dict[int, list[int]] = {}
    for t, h in arcs:
        out.setdefault(t, []).append(h)
    cycles: set[tuple[int, ...]] = set()

    def walk(start: int, v: int, path: tuple[int, ...],
             visited: frozenset[int]) -> None:
        for w in sorted(out.get(v, ())):
            if w == start and len(path) > 1:
                cycles.add(path)
            elif w > start and w not in visited:
                walk(start, w, path + (w,), visited | {w})

    for s in range(n):
        walk(s, s, (s,), frozenset({s}))
    return cycles


def _rotate_to_least(cycle) -> tuple[int, ...]:
    k = cycle.index(min(cycle))
    return tuple(cycle[k:]) + tuple(cycle[:k])


def _check_thm12(g: Graph, cap: int):
    if not is_connected(g):
        return _skip("disconnected")
    if g.n < 6:
        return _skip("fewer than six vertices")
    if not is_claw_free(g):
        return _skip("contains an induced claw")
    if g.m > cap:
        return _skip(f"edge count {g.m} over cap {cap}")
    try:
        trace = clawfree_rigid_orientation_trace(g)
    except ConstructionError as exc:
        return _viol("rigid orientation from the claw-free procedure", str(exc))
    grp = automorphism_group(trace.result)
    if not grp.is_trivial:
        return _viol("trivial group", f"order {grp.order}")
    if trace.branch == "cycle" and trace.checkpoint_arcs is not None:
        # the seeded cycle must stay the only directed cycle of its
        # length, and no directed cycle may leave its vertex set
        seeded = _rotate_to_least(trace.cycle)
        on_cycle = set(trace.cycle)
        for arcs in (trace.checkpoint_arcs, trace.result.arcs):
            cycles = _directed_cycles(g.n, arcs)
            stray = [c for c in cycles if not set(c) <= on_cycle]
            if stray:
                return _viol("directed cycles confined to the seeded cycle",
                             f"cycle through {stray[0]}")
            full = [c for c in cycles if len(c) == len(seeded)]
            if full != [seeded]:
                return _viol(
                    f"one directed cycle of length {len(seeded)}, the seeded one",
                    f"cycles of that length: {sorted(full)}")
    if trace.branch == "cut_vertex" and trace.source is not None:
        indeg = [0] * g.n
        for _, h in trace.result.arcs:
            indeg[h] += 1
        if indeg[trace.source] != 0:
            return _viol("chosen vertex is a source",
                         f"in-degree {indeg[trace.source]}")
    value, _, _ = od_minus(g, edge_cap=cap)
    if value != 1:
        return _viol("minimum over orientations 1", f"{value}")
    return _PASS


def _check_kmn(g: Graph, cap: int):
    shape = as_complete_bipartite(g)
    if shape is None:
        return _skip("not complete bipartite")
    m, n = shape
    if not 2 <= m < n:
        return _skip("needs classes of sizes 2 <= m < n")
    pred = dprime_kmn(m, n)
    if pred.kind == BOUNDARY:
        return _skip("boundary size left unresolved by the prediction")
    d = dprime(g).value
    if d != pred.value:
        return _viol(f"distinguishing index {pred.value} ({pred.kind})",
                     f"{d}")
    if g.m > cap:
        return _skip(f"edge count {g.m} over cap {cap}")
    odp = od_minus_kmn(m, n)
    res = od_extremes(g, edge_cap=cap)
    if res.od_plus != d:
        return _viol(f"maximum over orientations {d}", f"{res.od_plus}")
    if odp.kind == BOUNDARY:
        if not odp.low <= res.od_minus <= odp.high:
            return _viol(f"minimum within [{odp.low}, {odp.high}]",
                         f"{res.od_minus}")
    elif res.od_minus != odp.value:
        return _viol(f"minimum over orientations {odp.value}",
                     f"{res.od_minus}")
    return _PASS


_CHECKERS = {
    "obs1": _check_obs1,
    "cor3": _check_cor3,
    "cor6": _check_cor6,
    "thm7": _check_thm7,
    "thm8": _check_thm8,
    "thm9": _check_thm9,
    "thm12": _check_thm12,
    "kmn": _check_kmn,
}


def _verify_worker(args):
    theorem_id, label, cap = args
    return _CHECKERS[theorem_id](parse("graph6", label), cap)


def _run_tasks(worker, tasks, jobs: int):
    if jobs <= 1 or len(tasks) <= 1:
        return [worker(t) for t in tasks]
    chunk = max(1, len(tasks) // (jobs * 4))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks, chunksize=chunk))


def _assemble(theorem_id: str, labels, results, started: float) -> Report:
    violations = []
    skipped = []
    passed = 0
    for label, (status, a, b) in zip(labels, results):
        if status == "pass":
            passed += 1
        elif status == "skip":
            skipped.append(Skip(label, a))
        else:
            violations.append(Violation(label, a, b))
    return Report(theorem_id, len(labels), passed, tuple(violations),
                  tuple(skipped), time.perf_counter() - started)


def verify_theorem(corpus: Corpus, theorem_id: str, *,
                   edge_cap: int = DEFAULT_EDGE_CAP, jobs: int = 1) -> Report:
    """Check one named claim over the whole corpus."""
    if theorem_id not in _CHECKERS:
        known = ", ".join(THEOREM_IDS)
        raise ValueError(f"unknown theorem id {theorem_id!r}; known ids: {known}")
    started = time.perf_counter()
    tasks = [(theorem_id, label, edge_cap) for label in corpus.labels]
    results = _run_tasks(_verify_worker, tasks, jobs)
    return _assemble(theorem_id, corpus.labels, results, started)


def _load_cache(path) -> dict[str, dict]:
    rows: dict[str, dict] = {}
    p = Path(path)
    if not p.exists():
        return rows
    for i, line in enumerate(p.read_text().splitlines(), start=1):
        if not line.strip():
            continue
        try:
            row = json.loads(line)
            key = row["g6"]
        except (json.JSONDecodeError, TypeError, KeyError):
            warnings.warn(f"cache {p}: skipping corrupt line {i}")
            continue
        rows[key] = row
    return rows


def _append_cache(path, rows) -> None:
    if not rows:
        return
    with open(path, "a") as fh:
        for row in rows:
            fh.write(json.dumps(row, sort_keys=True) + "\n")


def _scan_worker(args):
    label, which, cap, known_d, known_odm = args
    g = parse("graph6", label)
    canon = encode_graph6(g)
    out = {"canon": canon, "dprime": known_d, "od_minus": known_odm}
    if not is_connected(g):
        out["result"] = _skip("disconnected")
        return out
    if g.n == 2 and g.m == 1:
        out["result"] = _skip("distinguishing index undefined for a single edge")
        return out
    if g.m > cap:
        out["result"] = _skip(f"edge count {g.m} over cap {cap}")
        return out
    d = known_d if known_d is not None else dprime(g).value
    out["dprime"] = d
    odm = known_odm

    if which in ("1", "both"):
        floor = d // 2
        if floor > 1:
            if odm is None:
                odm = od_minus(g, edge_cap=cap)[0]
                out["od_minus"] = odm
            if odm < floor:
                out["result"] = _viol(
                    f"minimum over orientations at least {floor}", f"{odm}")
                return out
    if which in ("2", "both") and d == 2:
        if odm is None:
            if find_rigid_orientation(g, edge_cap=cap) is not None:
                odm = 1
            else:
                odm = od_minus(g, edge_cap=cap)[0]
            out["od_minus"] = odm
        if odm != 1:
            out["result"] = _viol("a rigid orientation at index 2", f"{odm}")
            return out
    out["result"] = _PASS
    return out


def scan_conjectures(corpus: Corpus, which="both", *,
                     edge_cap: int = DEFAULT_EDGE_CAP,
                     cache_path=None, jobs: int = 1) -> Report:
    """Check the two open lower-bound statements over the corpus.

    which selects 1, 2, or "both".  A violation is a finding: the report
    carries it, nothing raises.  When cache_path is set, known values
    are reused and new ones appended as JSON lines.
    """
    which = str(which)
    if which not in ("1", "2", "both"):
        raise ValueError('which must be 1, 2 or "both"')
    started = time.perf_counter()
    cache = _load_cache(cache_path) if cache_path else {}

    tasks = []
    for label in corpus.labels:
        canon = encode_graph6(parse("graph6", label))
        row = cache.get(canon, {})
        tasks.append((label, which, edge_cap,
                      row.get("dprime"), row.get("od_minus")))
    outs = _run_tasks(_scan_worker, tasks, jobs)

    if cache_path:
        stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
        fresh = []
        written = set()
        for out in outs:
            canon = out["canon"]
            old = cache.get(canon, {})
            if canon in written:
                continue
            if (out["dprime"], out["od_minus"]) == (
                    old.get("dprime"), old.get("od_minus")):
                continue
            if out["dprime"] is None and out["od_minus"] is None:
                continue
            fresh.append({"g6": canon, "dprime": out["dprime"],
                          "od_minus": out["od_minus"],
                          "od_plus": old.get("od_plus"),
                          "timestamp": stamp})
            written.add(canon)
        _append_cache(cache_path, fresh)

    name = "conjectures" if which == "both" else f"conjecture{which}"
    return _assemble(name, corpus.labels,
                     [out["result"] for out in outs], started)
