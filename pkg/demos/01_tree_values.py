"""
Tree values modulo a prime
==========================

A tree with edge indices defines a sum over ways of splitting p into
positive parts, one part per bullet vertex.  Chains give ordinary finite
multiple zeta values, stars give Mordell-Tornheim type sums.
"""

from fmzv import chain, eval_fmzv_mod_p, eval_mt_mod_p, eval_tree_mod_p, mt_star

# chain v1 -2- v2 -1- v3, rooted at v3
tree, k = chain([2, 1])
print(tree.ids, tree.root, k)

for p in (5, 7, 11, 13):
    print(p, eval_tree_mod_p(tree, k, p), eval_fmzv_mod_p((2, 1), p))

# three leaves on a circle vertex, root below it
star, ks = mt_star([1, 1], 1)
for p in (5, 7, 11, 13):
    print(p, eval_tree_mod_p(star, ks, p), eval_mt_mod_p((1, 1), 1, p))

# moving the root flips the sign by the index sum along the path
moved = tree.with_root("v1")
print(eval_tree_mod_p(moved, k, 7), -eval_tree_mod_p(tree, k, 7) % 7)
