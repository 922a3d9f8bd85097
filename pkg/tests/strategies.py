from hypothesis import strategies as st

from spiderkeep.graph import Graph


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, density=None) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if density is None:
        bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        bits = [draw(st.floats(0, 1)) < density for _ in pairs]
    return Graph.from_edges(n, [e for e, keep in zip(pairs, bits) if keep])
