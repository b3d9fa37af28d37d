"""Finite-set primitives: functions, partitions, pushouts.

Everything is skeletal: a finite set is a natural number ``k`` standing for
``{0, ..., k-1}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from synprop.errors import ContractError


@dataclass(frozen=True)
class FinFunction:
    dom_size: int
    cod_size: int
    table: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        if self.dom_size < 0 or self.cod_size < 0:
            raise ContractError("sizes must be natural numbers")
        if len(self.table) != self.dom_size:
            raise ContractError(
                f"table has length {len(self.table)}, expected {self.dom_size}"
            )
        for x in self.table:
            if not 0 <= x < self.cod_size:
                raise ContractError(f"entry {x} outside codomain of size {self.cod_size}")

    @classmethod
    def _trusted(cls, dom_size: int, cod_size: int, table: tuple[int, ...]) -> "FinFunction":
        # skips validation; callers guarantee the invariants
        self = object.__new__(cls)
        object.__setattr__(self, "dom_size", dom_size)
        object.__setattr__(self, "cod_size", cod_size)
        object.__setattr__(self, "table", table)
        return self

    @classmethod
    def identity(cls, k: int) -> "FinFunction":
        return cls(k, k, tuple(range(k)))

    @classmethod
    def from_table(cls, table: Sequence[int], cod_size: int) -> "FinFunction":
        return cls(len(table), cod_size, tuple(table))

    def __call__(self, k: int) -> int:
        return self.table[k]

    def image(self) -> frozenset[int]:
        return frozenset(self.table)

    def is_surjective(self) -> bool:
        return len(self.image()) == self.cod_size

    def fiber(self, y: int) -> tuple[int, ...]:
        return tuple(k for k, v in enumerate(self.table) if v == y)


def compose_fn(f: FinFunction, g: FinFunction) -> FinFunction:
    """Diagrammatic composite: first ``f``, then ``g``."""
    if f.cod_size != g.dom_size:
        raise ContractError(
            f"cannot compose {f.dom_size}->{f.cod_size} with {g.dom_size}->{g.cod_size}"
        )
    gt = g.table
    return FinFunction._trusted(f.dom_size, g.cod_size, tuple([gt[x] for x in f.table]))


def coproduct_fn(f: FinFunction, g: FinFunction) -> FinFunction:
    """Block sum ``f + g``: domains and codomains concatenated."""
    shift = f.cod_size
    return FinFunction._trusted(
        f.dom_size + g.dom_size,
        f.cod_size + g.cod_size,
        f.table + tuple([shift + x for x in g.table]),
    )


def merge_classes(size: int, pairs) -> list[int]:
    """Union ``x ~ y`` for every pair; returns each element's root.

    Inline union-find with path halving: this sits under every composite.
    """
    parent = list(range(size))
    for x, y in pairs:
        while parent[x] != x:
            parent[x] = x = parent[parent[x]]
        while parent[y] != y:
            parent[y] = y = parent[parent[y]]
        if x != y:
            parent[y] = x
    roots = []
    for x in range(size):
        while parent[x] != x:
            parent[x] = x = parent[parent[x]]
        roots.append(x)
    return roots


def canonical_labels(keys) -> tuple[int, ...]:
    seen: dict = {}
    return tuple([seen.setdefault(key, len(seen)) for key in keys])


@dataclass(frozen=True)
class Partition:
    """An equivalence relation on ``{0..carrier_size-1}``.

    ``class_id`` is always in restricted-growth form, so two partitions are
    equal as values exactly when they relate the same pairs.
    """

    carrier_size: int
    class_id: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "class_id", tuple(self.class_id))
        if len(self.class_id) != self.carrier_size:
            raise ContractError("class_id length must equal carrier_size")
        top = -1
        for c in self.class_id:
            if c < 0 or c > top + 1:
                raise ContractError(f"class labels {self.class_id} are not canonical")
            top = max(top, c)

    @classmethod
    def from_labels(cls, labels) -> "Partition":
        """Build from arbitrary hashable labels, relabelling canonically."""
        return cls._trusted(canonical_labels(labels))

    @classmethod
    def _trusted(cls, class_id: tuple[int, ...]) -> "Partition":
        self = object.__new__(cls)
        object.__setattr__(self, "carrier_size", len(class_id))
        object.__setattr__(self, "class_id", class_id)
        return self

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        return cls(n, tuple(range(n)))

    @property
    def num_classes(self) -> int:
        # canonical labels: the largest label is the last new one
        return max(self.class_id, default=-1) + 1

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_classes)]
        for x, c in enumerate(self.class_id):
            out[c].append(x)
        return out

    def related(self, x: int, y: int) -> bool:
        return self.class_id[x] == self.class_id[y]


def pushout(f: FinFunction, g: FinFunction) -> tuple[int, FinFunction, FinFunction]:
    """Pushout of the span ``N <-f- Y -g-> N'``.

    Returns the apex size and the two injections ``N -> P``, ``N' -> P``.
    Apex labels follow first occurrence over ``N`` then ``N'``.
    """
    if f.dom_size != g.dom_size:
        raise ContractError(
            f"span legs have different sources: {f.dom_size} vs {g.dom_size}"
        )
    left, right = f.cod_size, g.cod_size
    roots = merge_classes(left + right, zip(f.table, [left + y for y in g.table]))
    labels = canonical_labels(roots)
    apex = max(labels, default=-1) + 1
    inj_f = FinFunction._trusted(left, apex, labels[:left])
    inj_g = FinFunction._trusted(right, apex, labels[left:])
    return apex, inj_f, inj_g


def kernel_partition(maps: Sequence[FinFunction]) -> Partition:
    """Partition of the disjoint union of the domains by equality of images."""
    if not maps:
        raise ContractError("kernel_partition needs at least one map")
    cod = maps[0].cod_size
    if any(h.cod_size != cod for h in maps):
        raise ContractError("maps must share a codomain")
    return Partition.from_labels(itertools.chain.from_iterable(h.table for h in maps))


def all_functions(n: int, m: int) -> Iterator[FinFunction]:
    """Every function ``n -> m`` in lexicographic table order."""
    for table in itertools.product(range(m), repeat=n):
        yield FinFunction(n, m, table)


def fiber_nonempty_functions(n: int, m: int) -> list[FinFunction]:
    """Functions ``n -> m`` whose fibers are all nonempty, lexicographically.

    Built by a restricted search that tracks how many targets are still
    unhit, so it never materialises the full ``m**n`` table space.
    """
    if m > n or (m == 0 and n > 0):
        return []
    out: list[FinFunction] = []
    table = [0] * n
    counts = [0] * m

    def fill(k: int, missing: int) -> None:
        if n - k < missing:
            return
        if k == n:
            out.append(FinFunction(n, m, tuple(table)))
            return
        for y in range(m):
            table[k] = y
            counts[y] += 1
            fill(k + 1, missing - (counts[y] == 1))
            counts[y] -= 1

    fill(0, m)
    return out
