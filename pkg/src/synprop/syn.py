"""The free PROP on one generator ``delta: 1 -> 2``.

A morphism ``m -> n`` is an ordered forest of ``m`` ordered binary trees.
Tree ``i`` is rooted at input ``i``; every internal node is a copy of the
generator with an ordered (left, right) pair of outputs; each leaf carries
the output position it is wired to. Swaps are not nodes: they only permute
leaf labels. This forest is a complete invariant for the diagrams, so
structural equality is equality of morphisms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

from synprop.errors import ContractError


@dataclass(frozen=True)
class Leaf:
    label: int


@dataclass(frozen=True)
class Node:
    left: "Tree"
    right: "Tree"


Tree = Union[Leaf, Node]


def leaves(tree: Tree) -> list[int]:
    """Leaf labels, left to right."""
    if isinstance(tree, Leaf):
        return [tree.label]
    return leaves(tree.left) + leaves(tree.right)


def node_count(tree: Tree) -> int:
    if isinstance(tree, Leaf):
        return 0
    return 1 + node_count(tree.left) + node_count(tree.right)


def relabel(tree: Tree, mapping) -> Tree:
    """Replace every leaf ``Leaf(j)`` by ``mapping(j)`` (a tree)."""
    if isinstance(tree, Leaf):
        return mapping(tree.label)
    return Node(relabel(tree.left, mapping), relabel(tree.right, mapping))


@dataclass(frozen=True)
class SynMorphism:
    m: int
    n: int
    trees: tuple[Tree, ...]

    def __post_init__(self):
        object.__setattr__(self, "trees", tuple(self.trees))
        if len(self.trees) != self.m:
            raise ContractError(f"expected {self.m} trees, got {len(self.trees)}")
        labels = sorted(j for t in self.trees for j in leaves(t))
        if labels != list(range(self.n)):
            raise ContractError(f"leaf labels {labels} do not cover 0..{self.n - 1}")

    def node_count(self) -> int:
        return sum(node_count(t) for t in self.trees)

    def __rshift__(self, other: "SynMorphism") -> "SynMorphism":
        return then(self, other)

    def __matmul__(self, other: "SynMorphism") -> "SynMorphism":
        return tensor(self, other)


def generator() -> SynMorphism:
    return SynMorphism(1, 2, (Node(Leaf(0), Leaf(1)),))


def identity(k: int) -> SynMorphism:
    return SynMorphism(k, k, tuple(Leaf(i) for i in range(k)))


def symmetry(p: int, q: int) -> SynMorphism:
    """Block swap ``p + q -> q + p``."""
    trees = [Leaf(q + i) for i in range(p)] + [Leaf(j) for j in range(q)]
    return SynMorphism(p + q, p + q, tuple(trees))


def permutation(images) -> SynMorphism:
    """Wire input ``i`` straight to output ``images[i]``."""
    images = tuple(images)
    return SynMorphism(len(images), len(images), tuple(Leaf(j) for j in images))


def then(f: SynMorphism, g: SynMorphism) -> SynMorphism:
    """Diagrammatic composite ``g . f``: graft tree ``j`` of ``g`` onto leaf ``j`` of ``f``."""
    if f.n != g.m:
        raise ContractError(f"cannot compose {f.m}->{f.n} with {g.m}->{g.n}")
    graft = g.trees.__getitem__
    return SynMorphism(f.m, g.n, tuple(relabel(t, graft) for t in f.trees))


def tensor(f: SynMorphism, g: SynMorphism) -> SynMorphism:
    shift = f.n
    moved = tuple(relabel(t, lambda j: Leaf(shift + j)) for t in g.trees)
    return SynMorphism(f.m + g.m, f.n + g.n, f.trees + moved)


@lru_cache(maxsize=None)
def tree_shapes(k: int) -> tuple[Tree, ...]:
    """All ordered binary tree shapes with ``k`` leaves (leaves labelled -1).

    Order: by size of the left subtree, then recursively.
    """
    if k == 1:
        return (Leaf(-1),)
    out = []
    for split in range(1, k):
        for left in tree_shapes(split):
            for right in tree_shapes(k - split):
                out.append(Node(left, right))
    return tuple(out)


def compositions(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """Ordered ways to write ``n`` as a sum of ``m`` positive parts."""
    if m == 0:
        if n == 0:
            yield ()
        return
    for cuts in itertools.combinations(range(1, n), m - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def _fill(shape: Tree, labels: Iterator[int]) -> Tree:
    if isinstance(shape, Leaf):
        return Leaf(next(labels))
    left = _fill(shape.left, labels)
    return Node(left, _fill(shape.right, labels))


def enumerate_syn(m: int, n: int) -> list[SynMorphism]:
    """The whole hom-set ``Syn(m, n)`` in a fixed order.

    Order: leaf-count composition, then per-tree shapes, then leaf labels as
    a permutation in lexicographic order.
    """
    out = []
    for parts in compositions(n, m):
        for shapes in itertools.product(*(tree_shapes(k) for k in parts)):
            for perm in itertools.permutations(range(n)):
                it = iter(perm)
                out.append(SynMorphism(m, n, tuple(_fill(s, it) for s in shapes)))
    return out


# Terms over the generating data, used to witness that every forest is a
# composite of the generator, identities and symmetries.
#   ("gen",) | ("id", k) | ("sym", p, q) | ("then", a, b) | ("tensor", a, b)


def evaluate_term(term) -> SynMorphism:
    tag = term[0]
    if tag == "gen":
        return generator()
    if tag == "id":
        return identity(term[1])
    if tag == "sym":
        return symmetry(term[1], term[2])
    if tag == "then":
        return then(evaluate_term(term[1]), evaluate_term(term[2]))
    if tag == "tensor":
        return tensor(evaluate_term(term[1]), evaluate_term(term[2]))
    raise ValueError(f"unknown term tag {tag!r}")


def _tree_term(tree: Tree):
    if isinstance(tree, Leaf):
        return ("id", 1)
    return ("then", ("gen",), ("tensor", _tree_term(tree.left), _tree_term(tree.right)))


def _tensor_all(terms, empty):
    if not terms:
        return empty
    acc = terms[0]
    for t in terms[1:]:
        acc = ("tensor", acc, t)
    return acc


def permutation_term(images):
    """A term for ``permutation(images)`` built from adjacent swaps only."""
    n = len(images)
    current = list(images)
    swaps = []
    # bubble sort; each swap of positions (k, k+1) is one layer
    for i in range(n):
        for k in range(n - 1 - i):
            if current[k] > current[k + 1]:
                current[k], current[k + 1] = current[k + 1], current[k]
                swaps.append(k)
    term = ("id", n)
    # sorting applied swaps on the input side; replay them in reverse
    for k in reversed(swaps):
        layer = ("tensor", ("tensor", ("id", k), ("sym", 1, 1)), ("id", n - k - 2))
        term = ("then", layer, term)
    return term


def decompose(f: SynMorphism):
    """A term whose evaluation is ``f``.

    Each tree becomes a nest of generators with its leaves in left-to-right
    order; a permutation layer then routes those positions to the actual
    output labels.
    """
    forest = _tensor_all([_tree_term(t) for t in f.trees], ("id", 0))
    order = [j for t in f.trees for j in leaves(t)]
    return ("then", forest, permutation_term(order))
