"""2-colored rooted trees and indices on them.

A tree is an immutable value: a set of bullet/circle vertices with string
ids, a set of undirected edges, and a root.  Edges are named by the sorted
pair of their endpoint ids.  An index is a plain mapping from edges to
nonnegative integers; :func:`index_map` normalizes and checks one.

Iteration order is deterministic everywhere: vertices and edges are kept
sorted by id.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import (
    CircleTerminal,
    DuplicateVertexId,
    InvalidIndex,
    NotATree,
    RootMissing,
    UnknownEdge,
    UnknownVertex,
)

BULLET = "bullet"
CIRCLE = "circle"
COLORS = (BULLET, CIRCLE)

# Separator for ids minted by transforms ("v#c", "v#u"); user ids may not contain it.
RESERVED = "#"

Edge = tuple[str, str]
IndexMap = Mapping[Edge, int]


def edge_key(a: str, b: str) -> Edge:
    """Canonical name of the undirected edge between ``a`` and ``b``."""
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True, order=True)
class Vertex:
    id: str
    color: str = BULLET

    @property
    def is_bullet(self) -> bool:
        return self.color == BULLET


@dataclass(frozen=True)
class EdgeCut:
    """An edge together with the bullet vertices lying beyond it (away from the root)."""

    edge: Edge
    far_bullets: frozenset[str]


@dataclass(frozen=True)
class TwoColoredRootedTree:
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    root: str
    _colors: dict = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[tuple[str, str]], root: str):
        vs = tuple(sorted(vertices))
        es = tuple(sorted(edge_key(a, b) for a, b in edges))
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)
        object.__setattr__(self, "root", root)
        object.__setattr__(self, "_colors", {v.id: v.color for v in vs})

    @classmethod
    def build(cls, colors: Mapping[str, str], edges: Iterable[tuple[str, str]], root: str):
        """Construct from an ``id -> color`` mapping and validate."""
        tree = cls([Vertex(v, c) for v, c in colors.items()], edges, root)
        validate(tree)
        return tree

    # --- basic accessors -------------------------------------------------

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.vertices)

    def color(self, v: str) -> str:
        try:
            return self._colors[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def is_bullet(self, v: str) -> bool:
        return self.color(v) == BULLET

    @cached_property
    def bullets(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.vertices if v.is_bullet)

    @cached_property
    def adjacency(self) -> dict[str, tuple[str, ...]]:
        adj: dict[str, list[str]] = {v.id: [] for v in self.vertices}
        for a, b in self.edges:
            if a in adj:
                adj[a].append(b)
            if b in adj:
                adj[b].append(a)
        return {v: tuple(sorted(ns)) for v, ns in adj.items()}

    def degree(self, v: str) -> int:
        self.color(v)
        return len(self.adjacency[v])

    def is_terminal(self, v: str) -> bool:
        if len(self.vertices) == 1:
            return v == self.vertices[0].id
        return self.degree(v) == 1

    @cached_property
    def terminals(self) -> tuple[str, ...]:
        return tuple(v for v in self.ids if self.is_terminal(v))

    @cached_property
    def parent(self) -> dict[str, str | None]:
        """Parent of every vertex when the tree hangs from its root."""
        parent: dict[str, str | None] = {self.root: None}
        queue = deque([self.root])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if w not in parent:
                    parent[w] = u
                    queue.append(w)
        return parent

    @cached_property
    def _children(self) -> dict[str, tuple[str, ...]]:
        par = self.parent
        return {v: tuple(w for w in ns if par.get(w) == v) for v, ns in self.adjacency.items()}

    def children(self, v: str) -> tuple[str, ...]:
        self.color(v)
        return self._children[v]

    @cached_property
    def cuts(self) -> tuple["EdgeCut", ...]:
        return edge_cuts(self)

    def with_root(self, root: str) -> "TwoColoredRootedTree":
        self.color(root)
        return TwoColoredRootedTree(self.vertices, self.edges, root)


# --- validation -----------------------------------------------------------


def validate(tree: TwoColoredRootedTree) -> None:
    """Raise unless ``tree`` is a finite tree whose terminals are all bullet."""
    ids = [v.id for v in tree.vertices]
    if len(set(ids)) != len(ids):
        dup = sorted({i for i in ids if ids.count(i) > 1})
        raise DuplicateVertexId(", ".join(dup))
    for v in tree.vertices:
        if not v.id:
            raise DuplicateVertexId("empty vertex id")
        if v.color not in COLORS:
            raise ValueError(f"unknown color {v.color!r} for vertex {v.id}")
    if tree.root not in tree.adjacency:
        raise RootMissing(tree.root)
    known = set(ids)
    for a, b in tree.edges:
        if a not in known or b not in known:
            raise NotATree(f"edge ({a}, {b}) has an unknown endpoint")
        if a == b:
            raise NotATree(f"loop at {a}")
    if len(set(tree.edges)) != len(tree.edges):
        raise NotATree("repeated edge")
    if len(tree.edges) != len(ids) - 1:
        raise NotATree(f"{len(ids)} vertices but {len(tree.edges)} edges")
    if len(tree.parent) != len(ids):
        raise NotATree("graph is disconnected")
    for v in tree.terminals:
        if not tree.is_bullet(v):
            raise CircleTerminal(f"vertex {v}")


def index_map(tree: TwoColoredRootedTree, k: Mapping[tuple[str, str], int]) -> dict[Edge, int]:
    """Normalize edge keys of ``k`` and check it is an index on ``tree``."""
    out: dict[Edge, int] = {}
    for (a, b), value in k.items():
        e = edge_key(a, b)
        if e in out:
            raise InvalidIndex(f"edge {e} given twice")
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise InvalidIndex(f"index of {e} must be a nonnegative integer, got {value!r}")
        out[e] = value
    if set(out) != set(tree.edges):
        missing = sorted(set(tree.edges) - set(out))
        extra = sorted(set(out) - set(tree.edges))
        raise InvalidIndex(f"index domain mismatch: missing {missing}, extra {extra}")
    return {e: out[e] for e in tree.edges}


# --- paths and cuts ---------------------------------------------------------


def _require_edge(tree: TwoColoredRootedTree, edge: tuple[str, str]) -> Edge:
    e = edge_key(*edge)
    if e not in set(tree.edges):
        raise UnknownEdge(str(e))
    return e


def bullet_descendants(tree: TwoColoredRootedTree, edge: tuple[str, str]) -> frozenset[str]:
    """Bullet vertices whose path to the root uses ``edge``."""
    a, b = _require_edge(tree, edge)
    par = tree.parent
    child = a if par[a] == b else b
    found = set()
    stack = [child]
    while stack:
        u = stack.pop()
        if tree.is_bullet(u):
            found.add(u)
        stack.extend(tree.children(u))
    return frozenset(found)


def edge_cuts(tree: TwoColoredRootedTree) -> tuple[EdgeCut, ...]:
    return tuple(EdgeCut(e, bullet_descendants(tree, e)) for e in tree.edges)


def path(tree: TwoColoredRootedTree, v: str, w: str) -> list[Edge]:
    """Edges of the unique path from ``v`` to ``w``, in walking order."""
    tree.color(v)
    tree.color(w)
    prev: dict[str, str | None] = {v: None}
    queue = deque([v])
    while queue and w not in prev:
        u = queue.popleft()
        for n in tree.adjacency[u]:
            if n not in prev:
                prev[n] = u
                queue.append(n)
    out = []
    u = w
    while prev[u] is not None:
        out.append(edge_key(prev[u], u))
        u = prev[u]
    out.reverse()
    return out


def path_index_sum(tree: TwoColoredRootedTree, k: IndexMap, v: str, w: str) -> int:
    return sum(k[e] for e in path(tree, v, w))


# --- predicates ---------------------------------------------------------------


def is_essentially_positive(tree: TwoColoredRootedTree, k: IndexMap) -> bool:
    """Every path between two distinct bullet vertices has positive total index."""
    # Bullets joined by index-0 paths form connected components of the
    # zero-edge subgraph; positivity fails iff one component holds two bullets.
    comp: dict[str, str] = {}

    def find(u):
        while comp.get(u, u) != u:
            u = comp[u]
        return u

    for (a, b) in tree.edges:
        if k[(a, b)] == 0:
            comp[find(a)] = find(b)
    seen = set()
    for v in tree.bullets:
        r = find(v)
        if r in seen:
            return False
        seen.add(r)
    return True


def is_harvestable(tree: TwoColoredRootedTree, k: IndexMap) -> bool:
    if not tree.is_terminal(tree.root):
        return False
    for v in tree.ids:
        d = tree.degree(v)
        if tree.is_bullet(v) and d > 2:
            return False
        if not tree.is_bullet(v) and d < 3:
            return False
    for v in tree.ids:
        if tree.is_bullet(v) or tree.degree(v) < 3:
            continue
        for c in tree.children(v):
            if tree.is_bullet(c) and k[edge_key(v, c)] == 0:
                return False
    return True
