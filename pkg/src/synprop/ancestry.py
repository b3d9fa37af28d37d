"""The ancestry functor and the cocommutative-comonoid model of its quotient.

``pi`` sends a forest to the partition of its boundary into connected
components. Its kernel is classified by ``CocomMap``: for ``f: m -> n`` the
function ``outputs -> inputs`` naming the tree each output hangs from.
"""

from __future__ import annotations

from dataclasses import dataclass

from synprop.corel import Corelation, is_in_circ
from synprop.errors import ContractError
from synprop.finset import FinFunction, compose_fn, coproduct_fn
from synprop.syn import Leaf, Node, SynMorphism, Tree, leaves


@dataclass(frozen=True)
class CocomMap:
    """A morphism ``m -> n`` given by ``phi: n -> m`` with nonempty fibers."""

    m: int
    n: int
    phi: FinFunction

    def __post_init__(self):
        if self.phi.dom_size != self.n or self.phi.cod_size != self.m:
            raise ContractError(
                f"phi must map {self.n} -> {self.m}, got "
                f"{self.phi.dom_size} -> {self.phi.cod_size}"
            )
        if not self.phi.is_surjective():
            raise ContractError(f"phi {self.phi.table} has an empty fiber")

    @classmethod
    def from_table(cls, m: int, table) -> "CocomMap":
        table = tuple(table)
        return cls(m, len(table), FinFunction(len(table), m, table))


def _owner_table(f: SynMorphism) -> tuple[int, ...]:
    owner = [0] * f.n
    for i, tree in enumerate(f.trees):
        for j in leaves(tree):
            owner[j] = i
    return tuple(owner)


def pi(f: SynMorphism) -> Corelation:
    """Boundary components: input ``i`` together with the leaves of tree ``i``."""
    return Corelation.from_labels(f.m, f.n, tuple(range(f.m)) + _owner_table(f))


def cocom_of(f: SynMorphism) -> CocomMap:
    return CocomMap(f.m, f.n, FinFunction(f.n, f.m, _owner_table(f)))


def cocom_identity(k: int) -> CocomMap:
    return CocomMap(k, k, FinFunction.identity(k))


def cocom_symmetry(p: int, q: int) -> CocomMap:
    # output j < q came from input p + j; output q + i from input i
    table = tuple(p + j for j in range(q)) + tuple(range(p))
    return CocomMap.from_table(p + q, table)


def cocom_generator() -> CocomMap:
    return CocomMap.from_table(1, (0, 0))


def cocom_compose(u: CocomMap, v: CocomMap) -> CocomMap:
    """Diagrammatic composite ``u`` then ``v``; ``phi`` runs backwards."""
    if u.n != v.m:
        raise ContractError(f"cannot compose {u.m}->{u.n} with {v.m}->{v.n}")
    return CocomMap(u.m, v.n, compose_fn(v.phi, u.phi))


def cocom_tensor(u: CocomMap, v: CocomMap) -> CocomMap:
    return CocomMap(u.m + v.m, u.n + v.n, coproduct_fn(u.phi, v.phi))


def corelation_of(u: CocomMap) -> Corelation:
    """Classes ``{i} + phi^-1(i)``."""
    return Corelation.from_labels(u.m, u.n, tuple(range(u.m)) + u.phi.table)


def cocom_of_corelation(r: Corelation) -> CocomMap:
    """Inverse of ``corelation_of`` on corelations that pass ``is_in_circ``."""
    if not is_in_circ(r):
        raise ContractError(f"{r} is not of the form {{i}} + fiber")
    owner = {c: i for i, c in enumerate(r.class_id[: r.m])}
    return CocomMap.from_table(r.m, (owner[c] for c in r.class_id[r.m :]))


def left_comb(labels) -> Tree:
    tree: Tree = Leaf(labels[0])
    for j in labels[1:]:
        tree = Node(tree, Leaf(j))
    return tree


def realize_leftcomb(u: CocomMap) -> SynMorphism:
    """A forest whose tree ``i`` is a left comb over ``phi^-1(i)`` in increasing order."""
    return SynMorphism(u.m, u.n, tuple(left_comb(u.phi.fiber(i)) for i in range(u.m)))
