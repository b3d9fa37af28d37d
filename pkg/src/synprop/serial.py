"""JSON encodings of morphisms in each category."""

from __future__ import annotations

import json
import re

from synprop.ancestry import CocomMap
from synprop.corel import Corelation
from synprop.cospan import Cospan
from synprop.errors import ContractError
from synprop.syn import Leaf, Node, SynMorphism, Tree

CATEGORIES = ("syn", "corel", "cospan", "cocom")


class ParseError(ValueError):
    """Input could not be decoded as a morphism."""


def tree_to_json(tree: Tree):
    if isinstance(tree, Leaf):
        return {"leaf": tree.label}
    return {"node": [tree_to_json(tree.left), tree_to_json(tree.right)]}


def tree_from_json(obj) -> Tree:
    if isinstance(obj, dict) and set(obj) == {"leaf"} and isinstance(obj["leaf"], int):
        return Leaf(obj["leaf"])
    if isinstance(obj, dict) and set(obj) == {"node"}:
        pair = obj["node"]
        if isinstance(pair, list) and len(pair) == 2:
            return Node(tree_from_json(pair[0]), tree_from_json(pair[1]))
    raise ParseError(f"not a tree: {obj!r}")


_ELEMENT = re.compile(r"([io])(\d+)$")


def to_json(x) -> dict:
    if isinstance(x, SynMorphism):
        return {"m": x.m, "n": x.n, "trees": [tree_to_json(t) for t in x.trees]}
    if isinstance(x, Corelation):
        return {"m": x.m, "n": x.n, "classes": x.named_classes()}
    if isinstance(x, Cospan):
        return {
            "m": x.m,
            "n": x.n,
            "apex": x.apex,
            "a": list(x.a.table),
            "b": list(x.b.table),
        }
    if isinstance(x, CocomMap):
        return {"m": x.m, "n": x.n, "phi": list(x.phi.table)}
    raise TypeError(f"no JSON encoding for {type(x).__name__}")


def from_json(category: str, obj):
    """Decode ``obj`` (already parsed JSON) as a morphism of ``category``.

    Malformed structure raises ``ParseError``; well-formed data violating a
    size invariant raises ``ContractError``.
    """
    if not isinstance(obj, dict):
        raise ParseError(f"expected a JSON object, got {obj!r}")
    try:
        m, n = obj["m"], obj["n"]
        if not (isinstance(m, int) and isinstance(n, int)):
            raise ParseError("m and n must be integers")
        if category == "syn":
            return SynMorphism(m, n, tuple(tree_from_json(t) for t in obj["trees"]))
        if category == "corel":
            classes = [[_element(e) for e in block] for block in obj["classes"]]
            return Corelation.from_classes(m, n, classes)
        if category == "cospan":
            return Cospan.make(m, n, obj["apex"], obj["a"], obj["b"])
        if category == "cocom":
            phi = tuple(obj["phi"])
            if len(phi) != n:
                raise ContractError(f"phi has length {len(phi)}, expected {n}")
            return CocomMap.from_table(m, phi)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed {category} morphism: {exc}") from exc
    raise ParseError(f"unknown category {category!r}")


def _element(name) -> tuple[str, int]:
    match = _ELEMENT.match(name) if isinstance(name, str) else None
    if not match:
        raise ParseError(f"bad boundary element {name!r}; expected i<k> or o<k>")
    return match.group(1), int(match.group(2))


def dumps(x) -> str:
    return json.dumps(to_json(x), separators=(",", ":"))


def loads(category: str, text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(str(exc)) from exc
    return from_json(category, obj)
