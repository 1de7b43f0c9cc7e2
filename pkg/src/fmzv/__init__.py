"""Finite multiple zeta values attached to 2-colored rooted trees.

Exact reduction to integer combinations of ordinary finite multiple zeta
values, with a brute-force modulo-p evaluator to check every identity.
"""

from .errors import FMZVError
from .families import caterpillar, chain, kmt_tree, mt_star, random_pair
from .hoffman import LinComb, concat_right, shuffle, shuffle_lincomb, word_to_ztuple, z_word
from .oracle import (
    DEFAULT_PRIMES,
    VerificationReport,
    bernoulli_mod_p,
    eval_fmzv_mod_p,
    eval_mt_mod_p,
    eval_tree_mod_p,
    eval_word_mod_p,
    verify_reduction,
    verify_shuffle_relation,
)
from .reducer import SignedReduction, branch_statistic, nearest_branch_point, reduce, reduce_harvestable
from .transforms import (
    SignedTreePair,
    contract_degree2_circle,
    contract_zero_circle_edge,
    harvestable_form,
    move_root,
    split_bullet_branch_vertex,
)
from .trees import (
    BULLET,
    CIRCLE,
    EdgeCut,
    TwoColoredRootedTree,
    Vertex,
    bullet_descendants,
    edge_key,
    index_map,
    is_essentially_positive,
    is_harvestable,
    path,
    path_index_sum,
    validate,
)

__version__ = "0.1.0"
