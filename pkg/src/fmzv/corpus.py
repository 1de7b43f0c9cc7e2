"""Exhaustive small corpus of (tree, index) pairs and its verification sweep.

Unlabeled tree shapes come from networkx (WROM level-sequence generation).
Each shape is expanded over colorings with bullet terminals, all roots, and
all essentially positive indices up to a total weight; labeled duplicates
are rejected through a canonical string of the rooted, colored, indexed tree.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

import networkx as nx

from .errors import FMZVError
from .oracle import DEFAULT_PRIMES, check_prime, verify_reduction
from .trees import BULLET, CIRCLE, TwoColoredRootedTree, edge_key, is_essentially_positive

MAX_EDGES = 8
MAX_WEIGHT = 10


@dataclass(frozen=True)
class CorpusSpec:
    max_edges: int
    max_weight: int
    primes: tuple[int, ...] = DEFAULT_PRIMES

    def __post_init__(self):
        if not 1 <= self.max_edges <= MAX_EDGES:
            raise FMZVError(f"max_edges must be in 1..{MAX_EDGES}")
        if not 0 <= self.max_weight <= MAX_WEIGHT:
            raise FMZVError(f"max_weight must be in 0..{MAX_WEIGHT}")
        for p in self.primes:
            check_prime(p)


def canonical_form(tree: TwoColoredRootedTree, k) -> str:
    """String that is equal for two pairs iff they are isomorphic as rooted,
    colored, indexed trees."""

    def canon(v):
        kids = sorted(f"{k[edge_key(v, c)]}:{canon(c)}" for c in tree.children(v))
        return ("b" if tree.is_bullet(v) else "c") + "(" + ",".join(kids) + ")"

    return canon(tree.root)


def _weight_vectors(n: int, max_weight: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(max_weight + 1):
        for rest in _weight_vectors(n - 1, max_weight - first):
            yield (first,) + rest


def enumerate_pairs(max_edges: int, max_weight: int) -> Iterator[tuple[TwoColoredRootedTree, dict]]:
    """All essentially positive pairs with 1..max_edges edges and weight <= max_weight,
    up to isomorphism, in a deterministic order."""
    for n_edges in range(1, max_edges + 1):
        for shape in nx.nonisomorphic_trees(n_edges + 1):
            ids = [f"v{i}" for i in sorted(shape.nodes)]
            edges = sorted(edge_key(f"v{a}", f"v{b}") for a, b in shape.edges)
            inner = [f"v{v}" for v in sorted(shape.nodes) if shape.degree(v) >= 2]
            seen: set[str] = set()
            for colours in product((BULLET, CIRCLE), repeat=len(inner)):
                colors = {v: BULLET for v in ids}
                colors.update(zip(inner, colours))
                base = TwoColoredRootedTree.build(colors, edges, ids[0])
                for root in ids:
                    tree = base.with_root(root)
                    for ks in _weight_vectors(len(edges), max_weight):
                        k = dict(zip(tree.edges, ks))
                        if not is_essentially_positive(tree, k):
                            continue
                        key = canonical_form(tree, k)
                        if key in seen:
                            continue
                        seen.add(key)
                        yield tree, k


@dataclass
class CorpusResult:
    pairs: int = 0
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "pass": self.passed,
            "pairs": self.pairs,
            "checks": self.checks,
            "failures": self.failures,
        }


def _verify_chunk(args):
    from .serialize import pair_to_json

    pairs, primes = args
    out = []
    for tree, k in pairs:
        report = verify_reduction(tree, k, primes)
        bad = [c.to_json() for c in report.checks if not c.passed]
        out.append((len(report.checks), [{"tree": pair_to_json(tree, k), **c} for c in bad]))
    return out


def _workers() -> int:
    cores = os.cpu_count() or 1
    env = os.environ.get("FMZV_THREADS")
    return max(1, min(cores, int(env))) if env else cores


def run_corpus(spec: CorpusSpec, workers: int | None = None, chunk: int = 500) -> CorpusResult:
    """Verify the reduction on every corpus pair at every prime of ``spec``."""
    pairs = list(enumerate_pairs(spec.max_edges, spec.max_weight))
    chunks = [(pairs[i:i + chunk], spec.primes) for i in range(0, len(pairs), chunk)]
    workers = workers or _workers()
    result = CorpusResult(pairs=len(pairs))
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outputs = list(pool.map(_verify_chunk, chunks))
    else:
        outputs = [_verify_chunk(c) for c in chunks]
    for out in outputs:
        for n_checks, bad in out:
            result.checks += n_checks
            result.failures.extend(bad)
    return result
