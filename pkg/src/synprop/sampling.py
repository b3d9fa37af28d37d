"""Seeded random morphisms for randomized law checks."""

from __future__ import annotations

import random

from synprop.ancestry import CocomMap
from synprop.corel import Corelation
from synprop.cospan import Cospan
from synprop.syn import Leaf, Node, SynMorphism, Tree


def syn_homset_nonempty(m: int, n: int) -> bool:
    return (m == 0 and n == 0) or 1 <= m <= n


def random_shape(rng: random.Random, k: int) -> Tree:
    if k == 1:
        return Leaf(-1)
    split = rng.randint(1, k - 1)
    return Node(random_shape(rng, split), random_shape(rng, k - split))


def _fill(shape: Tree, labels) -> Tree:
    if isinstance(shape, Leaf):
        return Leaf(next(labels))
    left = _fill(shape.left, labels)
    return Node(left, _fill(shape.right, labels))


def random_syn(rng: random.Random, m: int, n: int) -> SynMorphism:
    if not syn_homset_nonempty(m, n):
        raise ValueError(f"Syn({m}, {n}) is empty")
    cuts = sorted(rng.sample(range(1, n), m - 1)) if m else []
    bounds = [0] + cuts + [n]
    parts = [b - a for a, b in zip(bounds, bounds[1:])] if m else []
    labels = list(range(n))
    rng.shuffle(labels)
    it = iter(labels)
    return SynMorphism(m, n, tuple(_fill(random_shape(rng, k), it) for k in parts))


def random_surjection_table(rng: random.Random, n: int, m: int) -> tuple[int, ...]:
    """A uniformly-shaped table ``n -> m`` hitting every target (needs ``m <= n``)."""
    table = [rng.randrange(m) for _ in range(n)] if m else [0] * n
    spots = rng.sample(range(n), m)
    targets = list(range(m))
    rng.shuffle(targets)
    for spot, t in zip(spots, targets):
        table[spot] = t
    return tuple(table)


def random_cocom(rng: random.Random, m: int, n: int) -> CocomMap:
    if not syn_homset_nonempty(m, n):
        raise ValueError(f"Cocom({m}, {n}) is empty")
    return CocomMap.from_table(m, random_surjection_table(rng, n, m))


def random_corel(rng: random.Random, m: int, n: int) -> Corelation:
    k = m + n
    return Corelation.from_labels(m, n, [rng.randrange(max(k, 1)) for _ in range(k)])


def random_cospan(rng: random.Random, m: int, n: int, max_apex: int = 5) -> Cospan:
    low = 1 if m + n else 0
    apex = rng.randint(low, max(low, max_apex))
    a = [rng.randrange(apex) for _ in range(m)]
    b = [rng.randrange(apex) for _ in range(n)]
    return Cospan.make(m, n, apex, a, b)


def random_syn_sizes(rng: random.Random, count: int, max_width: int) -> list[int]:
    """A nondecreasing chain of boundary sizes along which Syn hom-sets are nonempty."""
    start = rng.randint(0, max_width)
    sizes = [start]
    for _ in range(count - 1):
        cur = sizes[-1]
        sizes.append(0 if cur == 0 else rng.randint(cur, max(cur, max_width)))
    return sizes
