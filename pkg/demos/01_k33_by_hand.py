"""K_{3,3}: two twin classes of size three, so two triangle generators.

Run with ``python demos/01_k33_by_hand.py``.
"""

from evoder import algebra_from_graph, closed_form_derivations, oracle_derivations, twin_partition
from evoder.families import complete_multipartite
from evoder.linalg import row_space_rref
from evoder.properties import check_all

g = complete_multipartite(3, 3)
print("edges:", g.edges)
print("twin classes:", twin_partition(g).classes)

# brute force: kernel of the linear system the Leibniz rule imposes on d_ij
c = algebra_from_graph(g)
oracle = oracle_derivations(c)
print("oracle dimension:", len(oracle))

# twin construction: one skew block per class of size >= 3
closed = closed_form_derivations(g)
for D in closed:
    print()
    for row in D.tolist():
        print(" ".join(f"{int(x):>3}" for x in row))

same = row_space_rref(oracle.vectors(), 36) == row_space_rref([m.entries for m in closed], 36)
print("\nsame span:", same)

# nothing in the oracle basis breaks the structural conditions
print("property checks pass:", all(check_all(g, D, c).passed for D in oracle))
