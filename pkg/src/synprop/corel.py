"""Finite corelations: equivalence relations on ``inputs + outputs``.

For ``R: m -> n`` carrier element ``k < m`` is input ``k`` and ``m + j`` is
output ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass

from synprop.config import current_limits
from synprop.errors import ContractError, ResourceLimitError
from synprop.finset import Partition, merge_classes


@dataclass(frozen=True)
class Corelation:
    m: int
    n: int
    partition: Partition

    def __post_init__(self):
        if self.partition.carrier_size != self.m + self.n:
            raise ContractError(
                f"partition carrier {self.partition.carrier_size} != {self.m} + {self.n}"
            )

    @classmethod
    def from_labels(cls, m: int, n: int, labels) -> "Corelation":
        labels = tuple(labels)
        if len(labels) != m + n:
            raise ContractError(f"{len(labels)} labels for boundary {m} + {n}")
        return cls._trusted(m, n, Partition.from_labels(labels))

    @classmethod
    def _trusted(cls, m: int, n: int, partition: Partition) -> "Corelation":
        self = object.__new__(cls)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "partition", partition)
        return self

    @classmethod
    def from_classes(cls, m: int, n: int, classes) -> "Corelation":
        """``classes`` lists blocks of ``("i", k)`` / ``("o", k)`` pairs."""
        labels = [None] * (m + n)
        for c, block in enumerate(classes):
            for side, k in block:
                pos = k if side == "i" else m + k
                if labels[pos] is not None:
                    raise ContractError(f"element {side}{k} appears twice")
                labels[pos] = c
        if None in labels:
            raise ContractError("classes do not cover the boundary")
        return cls.from_labels(m, n, labels)

    @property
    def class_id(self) -> tuple[int, ...]:
        return self.partition.class_id

    def element_name(self, pos: int) -> str:
        return f"i{pos}" if pos < self.m else f"o{pos - self.m}"

    def named_classes(self) -> list[list[str]]:
        return [[self.element_name(x) for x in c] for c in self.partition.classes()]

    def __str__(self) -> str:
        inner = ",".join("{" + ",".join(c) + "}" for c in self.named_classes())
        return "{" + inner + "}"


def corel_identity(k: int) -> Corelation:
    return Corelation.from_labels(k, k, list(range(k)) * 2)


def corel_symmetry(p: int, q: int) -> Corelation:
    # input i < p meets output q + i; input p + j meets output j
    outputs = [p + j for j in range(q)] + list(range(p))
    return Corelation.from_labels(p + q, p + q, list(range(p + q)) + outputs)


def corel_compose(r: Corelation, s: Corelation) -> Corelation:
    """Diagrammatic composite: ``r`` then ``s``.

    Classes of ``r`` and of ``s`` are merged whenever they share a middle
    point; the surviving labels are restricted to the outer boundary.
    """
    if r.n != s.m:
        raise ContractError(f"cannot compose {r.m}->{r.n} with {s.m}->{s.n}")
    rid, sid = r.class_id, s.class_id
    kr = r.partition.num_classes
    ks = s.partition.num_classes
    middle = zip(rid[r.m :], [kr + c for c in sid[: s.m]])
    roots = merge_classes(kr + ks, middle)
    labels = [roots[c] for c in rid[: r.m]] + [roots[kr + c] for c in sid[s.m :]]
    return Corelation._trusted(r.m, s.n, Partition.from_labels(labels))


def corel_tensor(r: Corelation, s: Corelation) -> Corelation:
    shift = r.partition.num_classes
    rid, sid = r.class_id, s.class_id
    labels = (
        rid[: r.m]
        + tuple(shift + c for c in sid[: s.m])
        + rid[r.m :]
        + tuple(shift + c for c in sid[s.m :])
    )
    return Corelation.from_labels(r.m + s.m, r.n + s.n, labels)


def is_in_circ(r: Corelation) -> bool:
    """Every class holds exactly one input and at least one output."""
    inputs = [0] * r.partition.num_classes
    outputs = [0] * r.partition.num_classes
    for x, c in enumerate(r.class_id):
        if x < r.m:
            inputs[c] += 1
        else:
            outputs[c] += 1
    return all(i == 1 for i in inputs) and all(o >= 1 for o in outputs)


def restricted_growth_strings(k: int):
    """Set partitions of ``k`` elements as canonical label tuples."""
    if k == 0:
        yield ()
        return
    labels = [0] * k

    def rec(pos: int, top: int):
        if pos == k:
            yield tuple(labels)
            return
        for c in range(top + 2):
            labels[pos] = c
            yield from rec(pos + 1, max(top, c))

    yield from rec(1, 0)


def check_boundary(m: int, n: int, bound: int | None = None) -> None:
    limit = current_limits().max_boundary if bound is None else bound
    if m + n > limit:
        raise ResourceLimitError(f"boundary {m}+{n} exceeds limit {limit}")


def enumerate_corel(m: int, n: int, bound: int | None = None) -> list[Corelation]:
    """All ``Bell(m+n)`` corelations ``m -> n``."""
    check_boundary(m, n, bound)
    return [
        Corelation(m, n, Partition(m + n, rgs)) for rgs in restricted_growth_strings(m + n)
    ]


__all__ = [
    "Corelation",
    "corel_compose",
    "corel_identity",
    "corel_symmetry",
    "corel_tensor",
    "enumerate_corel",
    "is_in_circ",
]
