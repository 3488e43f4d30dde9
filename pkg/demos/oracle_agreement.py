"""
Three independent brute-force counters
======================================

The walk simulation, the permutation filter and the subset dynamic
program count the same thing in very different ways.  On random graphs
they agree exactly; the DP alone scales to 20+ vertices.
"""

import random
import time

from rwlabel import (Family, FamilySpec, count_labelings_dp, count_labelings_perm,
                     disrupted_profile_dp, enumerate_labelings_walk, from_edge_list,
                     make_family)

rng = random.Random(2024)


def random_graph(n, p):
    edges = [(i, rng.randrange(i)) for i in range(1, n)]  # a spanning tree keeps it connected
    edges += [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edge_list(n, edges)


##############################################################################
# Agreement on a handful of random 7-vertex graphs.
for _ in range(5):
    g = random_graph(7, 0.3)
    walk = len(enumerate_labelings_walk(g))
    perm = count_labelings_perm(g)
    dp = count_labelings_dp(g)
    print(f"{g.num_edges:>2} edges: walk {walk:>5}  perm {perm:>5}  dp {dp:>5}")

##############################################################################
# The disrupted profile: labelings stopped after k labels, k = 0..n.
g = make_family(FamilySpec(Family.PATH, n=6))
print("profile of P_6:", disrupted_profile_dp(g).values)

##############################################################################
# Scale: a 20-vertex lollipop.
g = make_family(FamilySpec(Family.LOLLIPOP, m=8, n=12))
t = time.perf_counter()
print("L_8,12:", count_labelings_dp(g), f"({time.perf_counter() - t:.3f}s)")
