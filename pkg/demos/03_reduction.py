"""
Reducing a tree to ordinary values
==================================

Any tree with an essentially positive index reduces to a signed integer
combination of z-words.  The oracle checks the identity at a few primes.
"""

from fmzv import (
    BULLET,
    CIRCLE,
    TwoColoredRootedTree,
    harvestable_form,
    index_map,
    kmt_tree,
    reduce,
    verify_reduction,
)

# rooted in the middle of a path, so the root must move first
tree = TwoColoredRootedTree.build(
    {"v1": BULLET, "rt": BULLET, "v2": BULLET}, [("v1", "rt"), ("rt", "v2")], "rt"
)
k = index_map(tree, {("v1", "rt"): 1, ("rt", "v2"): 2})

form = harvestable_form(tree, k)
print(form.tree.root, form.sign)

red = reduce(tree, k)
print(red)
print(verify_reduction(tree, k, (7, 11, 13)).passed)

# two branches through a circle vertex
colors = {"r": BULLET, "c": CIRCLE, "a": BULLET, "b": BULLET, "d": BULLET}
edges = {("r", "c"): 2, ("c", "a"): 1, ("c", "b"): 1, ("c", "d"): 1}
star = TwoColoredRootedTree.build(colors, edges.keys(), "r")
print(reduce(star, index_map(star, edges)))

# two chains meeting at a bullet, then a tail to the root
t, kk = kmt_tree((1, 2), (1,), (1,))
print(reduce(t, kk).comb.pretty_z())
print(verify_reduction(t, kk).to_json())
