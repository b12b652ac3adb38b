"""
The intersection graph of A_5
=============================

Build every non-trivial proper subgroup of the alternating group on five
points, join two subgroups when they share a non-identity element, and look
at the resulting graph.
"""

import numpy as np

from intersection_graphs import catalog, diameter, intersection_graph, prime_reduction_check

# A_5 from its two standard generators (1,2,3,4,5) and (1,2,3)
G = catalog("alternating", 5)
graph = intersection_graph(G)
print(f"{graph.n_vertices} subgroups, {graph.n_edges} edges")

# orders of the vertices, grouped
orders, counts = np.unique([h.order for h in graph.subgroups], return_counts=True)
for o, c in zip(orders, counts):
    print(f"  order {o:2d}: {c} subgroups")

# the 6 Sylow 5-subgroups are the hardest vertices to connect
print("diameter:", diameter(graph))
dist = graph.distances()
far = np.argwhere(dist == dist.max())
u, v = far[0]
print("a pair at distance", dist[u, v], ":", graph.subgroups[u].order, "and", graph.subgroups[v].order)

# the largest distance is already realised between prime-order subgroups
rep = prime_reduction_check(graph)
print("max distance between prime-order vertices:", rep.prime_max_distance)
