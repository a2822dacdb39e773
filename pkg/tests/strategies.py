from hypothesis import assume, strategies as st

from evoder.graph import Graph, is_connected


@st.composite
def blowup_graphs(draw, max_base=4, max_class=4, max_n=9):
    """Connected graphs built by replacing each vertex of a small base graph by
    an independent set of twins; this hits large twin classes far more often
    than uniform random graphs do."""
    k = draw(st.integers(1, max_base))
    pairs = [(u, v) for u in range(k) for v in range(u + 1, k)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    sizes = draw(st.lists(st.integers(1, max_class), min_size=k, max_size=k))
    while sum(sizes) > max_n:
        sizes[sizes.index(max(sizes))] -= 1
    starts = [sum(sizes[:i]) for i in range(k)]
    edges = []
    for (u, v), keep in zip(pairs, mask):
        if keep:
            edges += [(starts[u] + a + 1, starts[v] + b + 1)
                      for a in range(sizes[u]) for b in range(sizes[v])]
    n = sum(sizes)
    perm = draw(st.permutations(range(1, n + 1)))
    g = Graph.from_edges(n, [(perm[a - 1], perm[b - 1]) for a, b in edges])
    assume(is_connected(g) and n >= 3)
    return g
