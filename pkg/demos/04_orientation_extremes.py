"""Sweep all orientations of a graph for the extremes of the index.

Each of the 2^m direction vectors is an orientation; vectors related by
a graph automorphism give isomorphic digraphs, so sweeps walk one
representative per orbit.
"""

from disorient import (cycle_graph, encode_digraph6, enumerate_orientations,
                       find_rigid_orientation, od_extremes, star_graph)

c4 = cycle_graph(4)
reps = enumerate_orientations(c4)
print("4-cycle: 16 orientations,", len(reps), "up to symmetry")
for o in reps:
    print("  vector", f"{o.vector:04b}", encode_digraph6(o), o.arcs)

res = od_extremes(c4)
print("extremes:", res.od_minus, "to", res.od_plus)
print("  minimum attained by", encode_digraph6(res.witness_min),
      "coloured", res.colouring_min.assignment)
print("  maximum attained by", encode_digraph6(res.witness_max),
      "coloured", res.colouring_max.assignment)

# the directed 4-cycle keeps its rotations, every other orientation
# of C4 is rigid or close to it; a star has nothing to break ties with
star = star_graph(4)
res = od_extremes(star)
print("star with four leaves:", res.od_minus, "to", res.od_plus)
print("  rigid orientation:", find_rigid_orientation(star))

path_like = find_rigid_orientation(c4)
print("first rigid orientation of the 4-cycle:",
      encode_digraph6(path_like), path_like.arcs)
