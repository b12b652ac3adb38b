"""
When is the diameter 2?
=======================

A group whose intersection graph is connected, not complete and has at
least two vertices has diameter 2 exactly when no two elements of prime
order generate it. Run the test across the built-in catalog and compare it
with the diameter of the full graph.
"""

from intersection_graphs import diam2_criterion, diameter, intersection_graph
from intersection_graphs.lattice import builtin_groups

print(f"{'group':8s} {'order':>5s} {'criterion':>9s} {'diameter':>12s}")
for G in builtin_groups(max_order=720):
    graph = intersection_graph(G)
    d = diameter(graph)
    crit = diam2_criterion(G)
    note = ""
    if graph.n_vertices and graph.is_complete():
        note = "complete"
    print(f"{G.label:8s} {graph.subgroups.order:5d} {str(crit):>9s} {str(d):>12s} {note}")

# Q_8 is the odd one out: every subgroup contains -1, so the graph is
# complete and its single prime-order vertex tells us nothing
