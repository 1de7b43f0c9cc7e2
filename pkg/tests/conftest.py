import pytest
from hypothesis import settings, strategies as st

from fmzv.families import chain, mt_star
from fmzv.trees import BULLET, CIRCLE, TwoColoredRootedTree, edge_key, index_map

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

PRIMES = (5, 7, 11, 13)


@st.composite
def tree_pairs(draw, min_vertices=1, max_vertices=7, max_k=2):
    """Valid (tree, index) pairs: random attachment shape, random colors on
    inner vertices, random root, indices in [0, max_k]."""
    n = draw(st.integers(min_vertices, max_vertices))
    ids = [f"v{i}" for i in range(n)]
    edges = [edge_key(ids[draw(st.integers(0, i - 1))], ids[i]) for i in range(1, n)]
    degree = {v: 0 for v in ids}
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
    colors = {v: draw(st.sampled_from((BULLET, CIRCLE))) if degree[v] >= 2 else BULLET for v in ids}
    root = draw(st.sampled_from(ids))
    tree = TwoColoredRootedTree.build(colors, edges, root)
    k = {e: draw(st.integers(0, max_k)) for e in tree.edges}
    return tree, index_map(tree, k)


@pytest.fixture
def chain21():
    return chain([2, 1])


@pytest.fixture
def star111():
    return mt_star([1, 1], 1)


@pytest.fixture
def middle_chain():
    """v1 -1- rt -2- v2, rooted in the middle."""
    tree = TwoColoredRootedTree.build(
        {"v1": BULLET, "rt": BULLET, "v2": BULLET}, [("v1", "rt"), ("rt", "v2")], "rt"
    )
    return tree, index_map(tree, {("v1", "rt"): 1, ("rt", "v2"): 2})
