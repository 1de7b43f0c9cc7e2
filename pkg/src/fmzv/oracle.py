"""Brute-force evaluation modulo a prime, and identity checks built on it.

An element of the ring A is a family of residues indexed by primes; here
one component is computed at a time.  Agreement at a finite set of sampled
primes is a necessary condition for an identity in A, not a proof of it.

Residues are returned as plain ``int`` values in ``[0, p)``.

The tree evaluator sums over all compositions of ``p`` into one positive
part per bullet vertex (C(p-1, b-1) of them); the per-edge partial sums
and inverse powers are vectorized with numpy but nothing is simplified.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import hoffman
from .errors import EvenPrime, NotPIntegral, NotPrime
from .reducer import reduce
from .trees import IndexMap, TwoColoredRootedTree

DEFAULT_PRIMES = (5, 7, 11, 13)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    if isinstance(p, bool) or not isinstance(p, (int, np.integer)) or not is_prime(int(p)):
        raise NotPrime(f"{p!r} is not prime")
    if p == 2:
        raise EvenPrime("p = 2")
    return int(p)


@lru_cache(maxsize=None)
def inverse_table(p: int) -> np.ndarray:
    """``inv[n] = n^(-1) mod p`` for 1 <= n < p (``inv[0]`` unused, set to 0)."""
    inv = np.zeros(p, dtype=np.int64)
    for n in range(1, p):
        inv[n] = pow(n, p - 2, p)
    return inv


@lru_cache(maxsize=None)
def inverse_power_table(p: int, k: int) -> np.ndarray:
    """``n^(-k) mod p`` for every residue n (entry 0 unused)."""
    inv = inverse_table(p)
    out = np.array([pow(int(a), k, p) for a in inv], dtype=np.int64)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=64)
def compositions(total: int, parts: int) -> np.ndarray:
    """All ordered ways to write ``total`` as ``parts`` positive integers, one per row."""
    if parts < 1 or total < parts:
        return np.zeros((0, max(parts, 0)), dtype=np.int64)
    rows = list(combinations(range(1, total), parts - 1))
    n = len(rows)
    cuts = np.array(rows, dtype=np.int64).reshape(n, parts - 1)
    bounds = np.hstack([np.zeros((n, 1), np.int64), cuts, np.full((n, 1), total, np.int64)])
    out = np.diff(bounds, axis=1)
    out.setflags(write=False)
    return out


def eval_tree_mod_p(tree: TwoColoredRootedTree, k: IndexMap, p: int) -> int:
    """The tree-FMZV at the prime ``p``, by summing over every composition."""
    p = check_prime(p)
    bullets = tree.bullets
    comps = compositions(p, len(bullets))
    if comps.shape[0] == 0:
        return 0
    column = {v: i for i, v in enumerate(bullets)}
    acc = np.ones(comps.shape[0], dtype=np.int64)
    for cut in tree.cuts:
        power = k[cut.edge]
        if power == 0:
            continue
        L = comps[:, [column[v] for v in sorted(cut.far_bullets)]].sum(axis=1)
        # 1 <= L <= p - 1 since the far side misses at least one bullet
        acc = acc * inverse_power_table(p, power)[L] % p
    return int(acc.sum() % p)


@lru_cache(maxsize=None)
def _fmzv(t: tuple[int, ...], p: int) -> int:
    # A_j(n) = n^{-k_j} * sum_{m < n} A_{j-1}(m), with A_0 = 1 at "n = 0"
    prev = [0] * p
    prev[0] = 1
    for kj in t:
        cur = [0] * p
        running = 0
        for n in range(1, p):
            running = (running + prev[n - 1]) % p
            cur[n] = running * pow(n, -kj, p) % p
        prev = cur
        prev[0] = 0
    if not t:
        return 1
    return sum(prev) % p


def eval_fmzv_mod_p(t: Sequence[int], p: int) -> int:
    """Sum over 0 < n_1 < ... < n_r < p of 1 / (n_1^k_1 ... n_r^k_r), mod p."""
    p = check_prime(p)
    t = tuple(int(k) for k in t)
    if any(k < 1 for k in t):
        raise ValueError(f"FMZV indices must be positive, got {t}")
    return _fmzv(t, p)


def eval_mt_mod_p(ks: Sequence[int], k_last: int, p: int) -> int:
    """Mordell-Tornheim type sum over m_i >= 1 with m_1 + ... + m_r <= p - 1."""
    p = check_prime(p)
    if not ks:
        raise ValueError("need at least one m-variable")
    if any(k < 1 for k in ks) or k_last < 0:
        raise ValueError("ks must be positive and k_last nonnegative")
    total = 0
    for ms in product(range(1, p), repeat=len(ks)):
        s = sum(ms)
        if s > p - 1:
            continue
        term = pow(s, -k_last, p)
        for m, k in zip(ms, ks):
            term = term * pow(m, -k, p) % p
        total += term
    return total % p


def eval_word_mod_p(A: Mapping[str, int], p: int) -> int:
    """Z_A applied to a word combination, i.e. sum of coeff * FMZV(word)."""
    p = check_prime(p)
    total = 0
    for w, c in A.items():
        total += c * eval_fmzv_mod_p(hoffman.word_to_ztuple(w), p)
    return total % p


def bernoulli_mod_p(n: int, p: int) -> int:
    """B_n mod p from sum_{j<=n} C(n+1, j) B_j = 0 (convention B_1 = -1/2).

    Supported for 0 <= n <= p - 2; B_n with (p - 1) | n, n > 0, has p in
    its denominator.
    """
    p = check_prime(p)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > 0 and n % (p - 1) == 0:
        raise NotPIntegral(f"B_{n} is not {p}-integral")
    if n > p - 2:
        raise NotPIntegral(f"B_{n} mod {p}: recurrence needs n <= p - 2")
    B = [1]
    for m in range(1, n + 1):
        s = sum(comb(m + 1, j) * B[j] for j in range(m)) % p
        B.append(-s * pow(m + 1, -1, p) % p)
    return B[n]


# --- verification -------------------------------------------------------------------


@dataclass(frozen=True)
class PrimeCheck:
    p: int
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {"p": self.p, "lhs": self.lhs, "rhs": self.rhs, "pass": self.passed}


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[PrimeCheck, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        return {"pass": self.passed, "primes": [c.to_json() for c in self.checks]}


def _primes(primes: Iterable[int]) -> list[int]:
    return [check_prime(p) for p in primes]


def verify_reduction(tree: TwoColoredRootedTree, k: IndexMap, primes: Iterable[int] = DEFAULT_PRIMES,
                     reduction=None) -> VerificationReport:
    """Compare the tree value with sign * Z_A(word combination) at each prime."""
    primes = _primes(primes)
    red = reduction if reduction is not None else reduce(tree, k)
    checks = []
    for p in primes:
        lhs = eval_tree_mod_p(tree, k, p)
        rhs = red.sign * eval_word_mod_p(red.comb, p) % p
        checks.append(PrimeCheck(p, lhs, rhs))
    return VerificationReport(tuple(checks))


def verify_shuffle_relation(t: Sequence[int], u: Sequence[int],
                            primes: Iterable[int] = DEFAULT_PRIMES) -> VerificationReport:
    """Check Z_A(z_t sh z_u) = (-1)^{|u|} Z_A(z_t z_{reversed u}) at each prime."""
    if not t or not u:
        raise ValueError("both index tuples must be nonempty")
    primes = _primes(primes)
    lhs_comb = hoffman.shuffle(hoffman.z_word(t), hoffman.z_word(u))
    sign = -1 if sum(u) % 2 else 1
    rhs_t = tuple(t) + tuple(reversed(u))
    checks = []
    for p in primes:
        lhs = eval_word_mod_p(lhs_comb, p)
        rhs = sign * eval_fmzv_mod_p(rhs_t, p) % p
        checks.append(PrimeCheck(p, lhs, rhs))
    return VerificationReport(tuple(checks))
