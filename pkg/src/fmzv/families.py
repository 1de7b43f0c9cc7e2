"""Builders for the tree families that recur in examples and tests."""

from __future__ import annotations

import random
from typing import Sequence

from .trees import BULLET, CIRCLE, TwoColoredRootedTree, edge_key, index_map


def chain(ks: Sequence[int], root: str | None = None):
    """Bullet path v1 - v2 - ... - v_{r+1}; edge (v_i, v_{i+1}) has index ks[i-1].

    Rooted at v_{r+1} by default, which gives the ordinary FMZV of ``ks``.
    """
    n = len(ks) + 1
    ids = [f"v{i}" for i in range(1, n + 1)]
    edges = list(zip(ids, ids[1:]))
    tree = TwoColoredRootedTree.build({v: BULLET for v in ids}, edges, root or ids[-1])
    return tree, index_map(tree, dict(zip(edges, ks)))


def mt_star(ks: Sequence[int], k_last: int):
    """Leaves v1..vr on a circle ``c``, joined to the root ``v{r+1}`` by index ``k_last``.

    Its value is the Mordell-Tornheim sum with exponents ``ks; k_last``.
    """
    r = len(ks)
    root = f"v{r + 1}"
    colors = {f"v{i}": BULLET for i in range(1, r + 1)}
    colors.update(c=CIRCLE, **{root: BULLET})
    k = {(f"v{i}", "c"): ki for i, ki in enumerate(ks, 1)}
    k[("c", root)] = k_last
    tree = TwoColoredRootedTree.build(colors, k.keys(), root)
    return tree, index_map(tree, k)


def caterpillar(ks: Sequence[int], ls: Sequence[int]):
    """Leaves with indices ``ks`` on a circle, then a bullet chain with indices ``ls``.

    ``ls[0]`` joins the circle to the first chain vertex; the last chain
    vertex is the root.  ``ls`` must be nonempty.
    """
    i = len(ks)
    colors = {f"v{j}": BULLET for j in range(1, i + 1)}
    colors["c"] = CIRCLE
    k = {(f"v{j}", "c"): kj for j, kj in enumerate(ks, 1)}
    prev = "c"
    for j, lj in enumerate(ls):
        v = f"w{j + 1}"
        colors[v] = BULLET
        k[(prev, v)] = lj
        prev = v
    tree = TwoColoredRootedTree.build(colors, k.keys(), prev)
    return tree, index_map(tree, k)


def kmt_tree(ps: Sequence[int], qs: Sequence[int], rs: Sequence[int]):
    """Two bullet chains (indices ``ps``, ``qs``, read from their leaves) meeting
    at a bullet junction ``u1``, followed by the chain ``rs`` up to the root."""
    colors = {"u1": BULLET}
    k = {}
    for name, ts in (("a", ps), ("b", qs)):
        ids = [f"{name}{j}" for j in range(1, len(ts) + 1)] + ["u1"]
        for j, t in enumerate(ts):
            colors[ids[j]] = BULLET
            k[(ids[j], ids[j + 1])] = t
    prev = "u1"
    for j, t in enumerate(rs):
        v = f"u{j + 2}"
        colors[v] = BULLET
        k[(prev, v)] = t
        prev = v
    tree = TwoColoredRootedTree.build(colors, k.keys(), prev)
    return tree, index_map(tree, k)


def random_pair(rng: random.Random, n_vertices: int, max_k: int = 2, p_circle: float = 0.5):
    """Random valid tree on ``n_vertices`` vertices with a random index.

    Shape by random attachment, internal vertices circle with probability
    ``p_circle``, uniformly random root and edge indices in ``[0, max_k]``.
    """
    ids = [f"v{i}" for i in range(n_vertices)]
    edges = [edge_key(ids[rng.randrange(i)], ids[i]) for i in range(1, n_vertices)]
    degree = {v: 0 for v in ids}
    for a, b in edges:
        degree[a] += 1
        degree[b] += 1
    colors = {
        v: CIRCLE if degree[v] >= 2 and rng.random() < p_circle else BULLET for v in ids
    }
    tree = TwoColoredRootedTree.build(colors, edges, rng.choice(ids))
    return tree, index_map(tree, {e: rng.randint(0, max_k) for e in edges})
