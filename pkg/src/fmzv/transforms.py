"""Value-preserving moves on (tree, index) pairs.

Each move returns a new tree and index; none mutates its input.  The two
contractions and the bullet split leave the tree-FMZV unchanged, while a
root move multiplies it by a sign.  :func:`harvestable_form` chains them
into a deterministic normalization.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    NoCircleEndpoint,
    NonzeroIndex,
    NotBulletBranch,
    NotDegreeTwoCircle,
    NotEssentiallyPositive,
    ReservedId,
    RootContraction,
    RootSplit,
    UnknownEdge,
)
from .trees import (
    CIRCLE,
    RESERVED,
    Edge,
    IndexMap,
    TwoColoredRootedTree,
    Vertex,
    edge_key,
    is_essentially_positive,
    is_harvestable,
    path_index_sum,
)


@dataclass(frozen=True)
class SignedTreePair:
    tree: TwoColoredRootedTree
    k: dict[Edge, int]
    sign: int = 1


def _rebuild(tree, vertices, k, root=None):
    new = TwoColoredRootedTree(vertices, k.keys(), tree.root if root is None else root)
    return new, {e: k[e] for e in new.edges}


def contract_zero_circle_edge(tree: TwoColoredRootedTree, k: IndexMap, e: tuple[str, str]):
    """Contract an index-0 edge having at least one circle endpoint.

    The merged vertex is bullet if either endpoint was.  It keeps the id of
    the bullet endpoint, else of the root, else the smaller id.
    """
    e = edge_key(*e)
    if e not in k:
        raise UnknownEdge(str(e))
    if k[e] != 0:
        raise NonzeroIndex(f"k{e} = {k[e]}")
    a, b = e
    if tree.is_bullet(a) and tree.is_bullet(b):
        raise NoCircleEndpoint(str(e))

    def rank(v):
        return (not tree.is_bullet(v), v != tree.root, v)

    keep, drop = sorted((a, b), key=rank)
    color = tree.color(keep)
    vertices = [v if v.id != keep else Vertex(keep, color) for v in tree.vertices if v.id != drop]
    new_k = {}
    for f, value in k.items():
        if f == e:
            continue
        x, y = (keep if u == drop else u for u in f)
        new_k[edge_key(x, y)] = value
    root = keep if tree.root == drop else tree.root
    return _rebuild(tree, vertices, new_k, root)


def contract_degree2_circle(tree: TwoColoredRootedTree, k: IndexMap, v: str):
    """Remove a degree-2 circle vertex, fusing its two edges (indices add)."""
    if tree.is_bullet(v) or tree.degree(v) != 2:
        raise NotDegreeTwoCircle(v)
    if v == tree.root:
        raise RootContraction(v)
    a, b = tree.adjacency[v]
    ea, eb = edge_key(a, v), edge_key(v, b)
    new_k = {f: value for f, value in k.items() if f not in (ea, eb)}
    new_k[edge_key(a, b)] = k[ea] + k[eb]
    vertices = [u for u in tree.vertices if u.id != v]
    return _rebuild(tree, vertices, new_k)


def split_bullet_branch_vertex(tree: TwoColoredRootedTree, k: IndexMap, v: str):
    """Move the child edges of a branching bullet vertex onto a new circle below it.

    The new circle ``v#c`` hangs from ``v`` by an index-0 edge, so contracting
    that edge gives back the input.
    """
    if not tree.is_bullet(v) or tree.degree(v) < 3:
        raise NotBulletBranch(v)
    if v == tree.root:
        raise RootSplit(v)
    c = f"{v}{RESERVED}c"
    if c in tree.adjacency:
        raise ReservedId(c)
    kids = set(tree.children(v))
    new_k = {}
    for f, value in k.items():
        a, b = f
        if a == v and b in kids:
            f = edge_key(c, b)
        elif b == v and a in kids:
            f = edge_key(a, c)
        new_k[f] = value
    new_k[edge_key(v, c)] = 0
    vertices = list(tree.vertices) + [Vertex(c, CIRCLE)]
    return _rebuild(tree, vertices, new_k)


def move_root(tree: TwoColoredRootedTree, k: IndexMap, new_root: str):
    """Re-root at ``new_root``; returns ``(tree, sign)`` with sign = (-1)^k(path)."""
    moved = tree.with_root(new_root)
    sign = -1 if path_index_sum(tree, k, tree.root, new_root) % 2 else 1
    return moved, sign


def _contract_all(tree, k):
    changed = True
    while changed:
        changed = False
        for e in tree.edges:
            if k[e] == 0 and not (tree.is_bullet(e[0]) and tree.is_bullet(e[1])):
                tree, k = contract_zero_circle_edge(tree, k, e)
                changed = True
                break
        if changed:
            continue
        for v in tree.ids:
            if v != tree.root and not tree.is_bullet(v) and tree.degree(v) == 2:
                tree, k = contract_degree2_circle(tree, k, v)
                changed = True
                break
    return tree, k


def harvestable_form(tree: TwoColoredRootedTree, k: IndexMap) -> SignedTreePair:
    """Bring an essentially positive pair into harvestable shape.

    Pipeline: contract zero circle edges and degree-2 circles to a fixpoint;
    if the root is not a terminal, move it to the smallest terminal (and
    contract again, in case the old root was a degree-2 circle); finally
    split every bullet vertex of degree at least 3.  A pair that is already
    harvestable is returned unchanged.
    """
    k = dict(k)
    if not is_essentially_positive(tree, k):
        raise NotEssentiallyPositive("index vanishes on a path between two bullet vertices")
    if is_harvestable(tree, k):
        return SignedTreePair(tree, k, 1)

    tree, k = _contract_all(tree, k)
    sign = 1
    if not tree.is_terminal(tree.root):
        tree, sign = move_root(tree, k, min(tree.terminals))
        tree, k = _contract_all(tree, k)
    for v in [u for u in tree.ids if tree.is_bullet(u) and tree.degree(u) >= 3]:
        tree, k = split_bullet_branch_vertex(tree, k, v)
    return SignedTreePair(tree, k, sign)
