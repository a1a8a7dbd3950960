# Building the extremal pair and looking at why it works.
#
# G_3 and G_3' are Q_3 minus a 3-edge matching.  Each has two vertices of
# full degree 3, and those vertices are never adjacent, which is exactly
# what S_{2,2}-freeness requires in Q_3.
from cubestar import extremal_pair, turan_formula, is_balanced_free, cross_edges

pair = extremal_pair(3)
for name, g in (("G_3", pair.g), ("G_3'", pair.g_prime)):
    full = sorted(f"{v:03b}" for v in g.full_degree_set())
    print(f"{name}: {g.edge_count} edges, full-degree vertices {full}, free={is_balanced_free(g)}")

# Stacking G_n under G_n' (new coordinate = top bit) and keeping every cross
# edge gives G_{n+1}.  A full vertex below only meets its copy above, which
# is never full in the other graph, so freeness carries over.
print()
print(" n   e(G_n)   formula   cross edges to next level")
for n in range(3, 11):
    p = extremal_pair(n)
    print(f"{n:2d} {p.g.edge_count:8d} {turan_formula(n):9d} {cross_edges(p.g, p.g_prime).count:10d}")

# The full-degree sets flip halves between G_{n+1} and G_{n+1}'.
p4 = extremal_pair(4)
print()
print("full(G_4) ", sorted(f"{v:04b}" for v in p4.g.full_degree_set()))
print("full(G_4')", sorted(f"{v:04b}" for v in p4.g_prime.full_degree_set()))
