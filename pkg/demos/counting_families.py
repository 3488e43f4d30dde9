"""
Counting walk labelings of graph families
=========================================

A random walk on a connected graph labels vertices 1, 2, ... in the
order it first reaches them.  This script counts the distinct labelings
for several families, once by closed form and once by brute force.
"""

from rwlabel import Family, FamilySpec, count_labelings_dp, family_count, make_family

##############################################################################
# Paths and cycles: every new label sits at one end of the labeled arc,
# so the counts are powers of two.
for n in range(1, 9):
    print(f"P_{n}: {family_count(FamilySpec(Family.PATH, n=n)):>6}   "
          f"C_{n}: {family_count(FamilySpec(Family.CYCLE, n=n)) if n >= 3 else '-':>6}")

##############################################################################
# Bridged families.  Vertex numbering puts the left part on 0..m-1 and the
# right part on m..m+n-1, joined by the edge (m-1, m).
for family, m, n in [(Family.BARBELL, 4, 4), (Family.LOLLIPOP, 5, 3),
                     (Family.TADPOLE, 8, 5)]:
    spec = FamilySpec(family, m=m, n=n)
    g = make_family(spec)
    print(f"{spec.label():<18} {g.n:>2} vertices  formula {family_count(spec):>12}  "
          f"oracle {count_labelings_dp(g):>12}")

##############################################################################
# Friendship graphs grow quickly; the formula stays exact at any size.
for m in (1, 2, 3, 10, 25):
    print(f"F_{m} =", family_count(FamilySpec(Family.ONE_POINT_UNION, m=m, n=3)))
