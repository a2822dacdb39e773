"""Census of all connected graphs up to six vertices, one per isomorphism class.

Counts how many carry a nonzero derivation and lists them. Every one of them
turns out to have a twin class of size at least three.
"""

import time

from evoder.corpus import unlabeled_connected_graphs, verify_graph

for n in range(3, 7):
    t0 = time.perf_counter()
    results = [verify_graph(g) for g in unlabeled_connected_graphs(n)]
    hits = [r for r in results if r.oracle_dim]
    bad = sum(not r.ok for r in results)
    print(f"n={n}: {len(results):>4} graphs, {len(hits):>3} with Der != 0, "
          f"{bad} failures, {time.perf_counter() - t0:.1f}s")
    for r in hits:
        print(f"    sizes {list(r.gamma3_sizes)} dim {r.oracle_dim} edges {list(r.key[1])}")
