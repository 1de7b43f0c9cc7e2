"""JSON encoding of trees with indices.

Format::

    {"vertices": [{"id": "v1", "color": "bullet"}, ...],
     "edges": [{"a": "v1", "b": "c", "k": 2}, ...],
     "root": "v1"}

Transform outputs may carry an extra top-level ``"sign"``.
"""

from __future__ import annotations

import json
from typing import Any, Mapping

from .errors import FMZVError, InvalidIndex, ReservedId
from .trees import RESERVED, TwoColoredRootedTree, Vertex, index_map, validate


def pair_from_json(data: Mapping[str, Any], allow_reserved: bool = False):
    """Parse and validate; returns ``(tree, k)``."""
    try:
        vertices = [Vertex(str(v["id"]), v["color"]) for v in data["vertices"]]
        raw_edges = [(str(e["a"]), str(e["b"]), e["k"]) for e in data["edges"]]
        root = str(data["root"])
    except (KeyError, TypeError) as exc:
        raise FMZVError(f"malformed tree JSON: {exc!r}") from None
    if not allow_reserved:
        for v in vertices:
            if RESERVED in v.id:
                raise ReservedId(f"vertex id {v.id!r} contains {RESERVED!r}")
    tree = TwoColoredRootedTree(vertices, [(a, b) for a, b, _ in raw_edges], root)
    validate(tree)
    if len({(a, b) if a <= b else (b, a) for a, b, _ in raw_edges}) != len(raw_edges):
        raise InvalidIndex("edge listed twice")
    k = index_map(tree, {(a, b): value for a, b, value in raw_edges})
    return tree, k


def pair_to_json(tree: TwoColoredRootedTree, k: Mapping, sign: int | None = None) -> dict:
    out: dict[str, Any] = {
        "vertices": [{"id": v.id, "color": v.color} for v in tree.vertices],
        "edges": [{"a": a, "b": b, "k": k[(a, b)]} for a, b in tree.edges],
        "root": tree.root,
    }
    if sign is not None:
        out["sign"] = sign
    return out


def load_pair(path, allow_reserved: bool = False):
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FMZVError(f"{path}: invalid JSON ({exc})") from None
    return pair_from_json(data, allow_reserved=allow_reserved)


def dumps(obj) -> str:
    """Compact, key-order-preserving JSON (byte-deterministic)."""
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)
