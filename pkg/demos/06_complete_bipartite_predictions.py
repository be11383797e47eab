"""Closed-form predictions for complete bipartite class sizes.

For classes of sizes m < n the index is r or r+1 where r is the least
radix with n <= r^m; the switch happens at a pivot just below r^m, and
exactly at the pivot the prediction falls back to an exact computation
when the graph is small enough, otherwise reports the bracket.
"""

from disorient import (complete_bipartite_graph, dprime, dprime_kmn,
                       od_extremes, od_minus_kmn)

for m, n in [(2, 3), (2, 4), (3, 5), (3, 6), (4, 20)]:
    p = dprime_kmn(m, n)
    q = od_minus_kmn(m, n)
    print(f"K_{{{m},{n}}}: {p.to_json()}")
    print(f"          minimum over orientations: {q.to_json()}")

# boundary sizes stay brackets when told not to fall back
p = dprime_kmn(3, 6, exact_cap=0)
print("pivot case without fallback:", p.to_json())

# the predictions agree with a full sweep on a desk-sized example
g = complete_bipartite_graph(2, 4)
res = od_extremes(g)
print("swept K_{2,4}: index", dprime(g).value,
      "extremes", (res.od_minus, res.od_plus))
print("predicted    : index", dprime_kmn(2, 4).value,
      "minimum", od_minus_kmn(2, 4).value)
