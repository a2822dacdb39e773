"""Walk through the standard families and watch the twin classes decide everything."""

from evoder import algebra_from_graph, derivation_dimension, gamma3, twin_partition
from evoder.families import (complete_graph, complete_multipartite, friendship_graph, path_graph,
                             star_graph, wheel_graph)
from evoder.linalg import rank

cases = [
    ("P_9", path_graph(9)),
    ("W_9", wheel_graph(9)),
    ("K_9", complete_graph(9)),
    ("F_4", friendship_graph(4)),
    ("K_{1,4}", star_graph(5)),
    ("K_{3,3}", complete_multipartite(3, 3)),
    ("K_{3,4,5}", complete_multipartite(3, 4, 5)),
    ("K_{1,2,6}", complete_multipartite(1, 2, 6)),
]

print(f"{'graph':<10} {'n':>3} {'rank':>5} {'gamma3 sizes':<14} {'dim Der':>8} {'law':>5}")
for name, g in cases:
    c = algebra_from_graph(g)
    sizes = gamma3(twin_partition(g)).sizes
    law = sum((a - 1) * (a - 2) // 2 for a in sizes)
    print(f"{name:<10} {g.n:>3} {rank(c.c):>5} {str(list(sizes)):<14} "
          f"{derivation_dimension(c):>8} {law:>5}")

# W_9 has singular adjacency yet still no derivations: singularity alone is not enough
