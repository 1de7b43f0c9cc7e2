"""Reduction of tree-FMZVs to integer combinations of ordinary FMZVs.

For a harvestable pair the word is built by structural recursion on the
branch point nearest the root::

    w = (w_1 sh ... sh w_s) x^{k'} z_{k_1} ... z_{k_r}

where ``k'`` indexes the edge from the branch point towards the root,
``k_1, ..., k_r`` the bullet chain above it, and ``w_j`` is the word of
the j-th subtree below the branch point re-rooted at a fresh bullet vertex.
A path (no branch point) gives the single word z_{k_1} ... z_{k_r} read
from the leaf.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import hoffman
from .errors import NotEssentiallyPositive, NotHarvestable, RootNotTerminal
from .hoffman import LinComb
from .transforms import harvestable_form
from .trees import (
    BULLET,
    RESERVED,
    IndexMap,
    TwoColoredRootedTree,
    Vertex,
    edge_key,
    is_essentially_positive,
    is_harvestable,
)

# Re-check harvestability and positivity at every recursion level.
DEBUG = False


@dataclass(frozen=True)
class SignedReduction:
    sign: int
    comb: LinComb

    def to_json(self) -> dict:
        return {"sign": self.sign, "terms": self.comb.to_z_json()}

    def __str__(self):
        body = self.comb.pretty_z()
        return body if self.sign == 1 else f"-({body})"


def _root_chain(tree: TwoColoredRootedTree):
    """Walk down from the root while the current vertex has one child.

    Returns the list of edges walked (root first) and the vertex where the
    walk stopped: a branch point, or the leaf at the end of a path.
    """
    if not tree.is_terminal(tree.root):
        raise RootNotTerminal(tree.root)
    chain = []
    v = tree.root
    while True:
        kids = tree.children(v)
        if len(kids) != 1:
            return chain, v
        chain.append(edge_key(v, kids[0]))
        v = kids[0]


def nearest_branch_point(tree: TwoColoredRootedTree) -> str | None:
    """First vertex of degree >= 3 met walking down from a terminal root."""
    _, v = _root_chain(tree)
    return v if tree.degree(v) >= 3 else None


def branch_statistic(tree: TwoColoredRootedTree, k: IndexMap) -> int:
    """Total index on the edges below the nearest branch point (0 for a path)."""
    v = nearest_branch_point(tree)
    if v is None:
        return 0
    total = 0
    stack = [v]
    while stack:
        u = stack.pop()
        for c in tree.children(u):
            total += k[edge_key(u, c)]
            stack.append(c)
    return total


def _subtree(tree, k, top, attach_index):
    """Subtree hanging from ``top`` plus a new bullet root joined to ``top``."""
    keep = set(_descendants(tree, top))
    root = f"{top}{RESERVED}u"
    vertices = [v for v in tree.vertices if v.id in keep] + [Vertex(root, BULLET)]
    sub_k = {e: c for e, c in k.items() if e[0] in keep and e[1] in keep}
    sub_k[edge_key(root, top)] = attach_index
    sub = TwoColoredRootedTree(vertices, sub_k.keys(), root)
    return sub, {e: sub_k[e] for e in sub.edges}


def reduce_harvestable(tree: TwoColoredRootedTree, k: IndexMap) -> LinComb:
    """Word combination w with tree value = Z_A(w), for a harvestable pair."""
    if not is_harvestable(tree, k):
        raise NotHarvestable(f"root {tree.root}")
    if not is_essentially_positive(tree, k):
        raise NotEssentiallyPositive("index vanishes on a path between two bullet vertices")
    return _reduce(tree, k)


def _reduce(tree, k):
    if DEBUG:
        assert is_harvestable(tree, k) and is_essentially_positive(tree, k), tree
    chain, v = _root_chain(tree)
    if tree.degree(v) < 3:
        # chain edges were collected from the root; the word reads from the leaf
        return LinComb.word(hoffman.z_word([k[e] for e in reversed(chain)]))

    # chain[-1] is the edge from the branch point towards the root
    k_prime = k[chain[-1]]
    upper = hoffman.z_word([k[e] for e in reversed(chain[:-1])])
    branches = sorted(
        tree.children(v), key=lambda c: min(_descendants(tree, c))
    )
    acc = LinComb.one()
    for c in branches:
        sub, sub_k = _subtree(tree, k, c, k[edge_key(v, c)])
        acc = hoffman.shuffle_lincomb(acc, _reduce(sub, sub_k))
    return hoffman.concat_right(acc, "x" * k_prime + upper)


def _descendants(tree, v):
    out = [v]
    for c in tree.children(v):
        out.extend(_descendants(tree, c))
    return out


def reduce(tree: TwoColoredRootedTree, k: IndexMap) -> SignedReduction:
    """Signed word combination equal to the tree-FMZV of an essentially positive pair."""
    if not is_essentially_positive(tree, k):
        raise NotEssentiallyPositive("index vanishes on a path between two bullet vertices")
    form = harvestable_form(tree, k)
    if not is_harvestable(form.tree, form.k):
        raise NotHarvestable("normalization did not reach a harvestable pair")
    return SignedReduction(form.sign, _reduce(form.tree, form.k))
