"""Words in x, y and their integer linear combinations.

Words are plain strings over ``"xy"``; the empty string is the unit.  The
letter ``z_k`` is ``"y" + "x" * (k - 1)``.  A :class:`LinComb` is a
finitely supported map from words to nonzero ``int`` coefficients.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import NotInYH

LETTERS = "xy"


def _check_word(w: str) -> str:
    if w.strip(LETTERS):
        raise ValueError(f"not a word in x, y: {w!r}")
    return w


def word_key(w: str) -> tuple[int, str]:
    """Canonical order: by length, then lexicographic with x < y."""
    return (len(w), w)


class LinComb(Mapping[str, int]):
    """Immutable integer combination of words; zero coefficients are dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[str, int] = {}
        for w, c in items:
            _check_word(w)
            acc[w] = acc.get(w, 0) + int(c)
        self._terms = {w: acc[w] for w in sorted(acc, key=word_key) if acc[w]}

    @classmethod
    def word(cls, w: str, coeff: int = 1) -> "LinComb":
        return cls({w: coeff})

    @classmethod
    def one(cls) -> "LinComb":
        return cls({"": 1})

    def __getitem__(self, w):
        return self._terms[w]

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self == LinComb(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __add__(self, other: "LinComb") -> "LinComb":
        return LinComb(list(self.items()) + list(other.items()))

    def __neg__(self):
        return LinComb({w: -c for w, c in self.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar: int) -> "LinComb":
        return LinComb({w: scalar * c for w, c in self.items()})

    __rmul__ = __mul__

    def __repr__(self):
        return f"LinComb({self._terms!r})"

    def __str__(self):
        return format_terms((c, w) for w, c in self.items()) if self else "0"

    def in_yh(self) -> bool:
        return all(w == "" or w[0] == "y" for w in self)

    def z_form(self) -> list[tuple[tuple[int, ...], int]]:
        """``[(index, coeff), ...]`` with each word read as z_{k_1}...z_{k_r}."""
        return [(word_to_ztuple(w), c) for w, c in self.items()]

    def to_json(self) -> list[dict]:
        return [{"word": w, "coeff": str(c)} for w, c in self.items()]

    def to_z_json(self) -> list[dict]:
        return [{"index": list(t), "coeff": str(c)} for t, c in self.z_form()]

    @classmethod
    def from_json(cls, data: Sequence[Mapping]) -> "LinComb":
        items = []
        for entry in data:
            if "word" in entry:
                w = entry["word"]
            else:
                w = z_word(entry["index"])
            items.append((w, int(entry["coeff"])))
        return cls(items)

    def pretty_z(self) -> str:
        if not self:
            return "0"
        return format_terms(
            (c, "".join(f"z{k}" for k in t) or "1") for t, c in self.z_form()
        )


def format_terms(terms: Iterable[tuple[int, str]]) -> str:
    out = []
    for c, label in terms:
        label = label or "1"
        mag = f"{abs(c)}·{label}"
        if not out:
            out.append(mag if c > 0 else f"-{mag}")
        else:
            out.append(("+ " if c > 0 else "- ") + mag)
    return " ".join(out)


# --- z letters ------------------------------------------------------------------


def z_word(t: Sequence[int]) -> str:
    """The word z_{t_1} ... z_{t_r} with z_k = y x^(k-1)."""
    parts = []
    for k in t:
        if isinstance(k, bool) or int(k) != k or k < 1:
            raise ValueError(f"z-index entries must be positive integers, got {k!r}")
        parts.append("y" + "x" * (int(k) - 1))
    return "".join(parts)


def word_to_ztuple(w: str) -> tuple[int, ...]:
    _check_word(w)
    if not w:
        return ()
    if w[0] != "y":
        raise NotInYH(w)
    return tuple(len(block) + 1 for block in w[1:].split("y"))


# --- products ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def _shuffle_words(a: str, b: str) -> tuple[tuple[str, int], ...]:
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    acc: dict[str, int] = {}
    # (w1 u1) sh (w2 u2) = (w1 sh w2 u2) u1 + (w1 u1 sh w2) u2
    for w, c in _shuffle_words(a[:-1], b):
        acc[w + a[-1]] = acc.get(w + a[-1], 0) + c
    for w, c in _shuffle_words(a, b[:-1]):
        acc[w + b[-1]] = acc.get(w + b[-1], 0) + c
    return tuple(acc.items())


def shuffle(a: str, b: str) -> LinComb:
    """Shuffle product of two words."""
    _check_word(a)
    _check_word(b)
    # order-independent cache key; the product is commutative
    if word_key(b) < word_key(a):
        a, b = b, a
    return LinComb(_shuffle_words(a, b))


def shuffle_lincomb(A: Mapping[str, int], B: Mapping[str, int]) -> LinComb:
    acc: dict[str, int] = {}
    for a, ca in A.items():
        for b, cb in B.items():
            for w, c in shuffle(a, b).items():
                acc[w] = acc.get(w, 0) + ca * cb * c
    return LinComb(acc)


def concat_right(A: Mapping[str, int], w: str) -> LinComb:
    _check_word(w)
    return LinComb({u + w: c for u, c in A.items()})
