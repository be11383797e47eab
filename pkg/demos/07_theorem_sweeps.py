"""Run the named verification sweeps and a conjecture scan.

Every check walks a corpus and reports pass / violation / skip per
graph.  Conjecture scans treat a counterexample as a finding to report,
and can cache their per-graph values across runs.
"""

import json
import tempfile
from pathlib import Path

from disorient import (CLAIMS, THEOREM_IDS, Corpus, connected_graphs,
                       scan_conjectures, trees, verify_theorem)

corpus = Corpus.from_graphs(
    g for n in range(1, 7) for g in connected_graphs(n))
print(f"corpus: every connected graph up to six vertices ({len(corpus)})")

for tid in THEOREM_IDS:
    r = verify_theorem(corpus, tid)
    print(f"  {tid:6} {r.passed:4} passed, {len(r.skipped):4} skipped, "
          f"{len(r.violations)} violations   [{CLAIMS[tid][:46]}...]")

tree_corpus = Corpus.from_graphs(t for n in range(3, 10) for t in trees(n))
r = verify_theorem(tree_corpus, "cor6")
print(f"trees up to nine vertices, fixed centre: {r.passed} exact")

with tempfile.TemporaryDirectory() as d:
    cache = Path(d) / "values.jsonl"
    first = scan_conjectures(corpus, "both", cache_path=cache)
    print("conjecture scan:", first.passed, "passed,",
          len(first.violations), "counterexamples,",
          f"{first.wall_time:.2f}s cold")
    again = scan_conjectures(corpus, "both", cache_path=cache)
    print("               cached rerun:", f"{again.wall_time:.2f}s")
    row = json.loads(cache.read_text().splitlines()[0])
    print("cache row:", {k: row[k] for k in ("g6", "dprime", "od_minus")})
