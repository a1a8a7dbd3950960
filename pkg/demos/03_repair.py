# Raising the minimum degree of a free subgraph by add-or-swap moves.
from cubestar import CubeSubgraph, normalize_min_degree
from cubestar.hypercube import edge_between, edge_from_id, incident_edges

# Q_3 with vertex 000 isolated and edge 011-111 removed (otherwise two full
# vertices would be adjacent).
g = CubeSubgraph.from_deleted(3, incident_edges(0, 3) + [edge_between(3, 0b011, 0b111)])
print("before:", g, "degrees", g.deg.tolist())

h, report = normalize_min_degree(g)


def show(eid):
    a, b = edge_from_id(3, eid).endpoints
    return f"{a:03b}-{b:03b}"


for s in report.steps:
    if s.kind == "swap":
        print(f"  swap: drop {show(s.removed)}, add {show(s.added)}")
    else:
        print(f"  add {show(s.added)}")
print("after: ", h, "degrees", h.deg.tolist())
print("edge_delta", report.edge_delta, "was_edge_maximal", report.was_edge_maximal)
# Two swaps and no direct add: the edge count stayed at 8 even though
# ex(Q_3, S_{2,2}) = 9.  Swaps only preserve the count; they never prove
# the input was maximum.
