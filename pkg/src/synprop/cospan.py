"""Cospans of finite sets up to apex isomorphism.

A cospan ``m -> n`` is ``m -a-> apex <-b- n``. The stored form is canonical:
apex points hit by a leg are numbered by first occurrence over ``a`` then
``b``, and unhit points take the remaining top labels. Unhit points are kept
(only their number matters) because ``[0 -> 1 <- 0]`` is not the identity
on 0 here; dropping them would impose the extra law.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from dataclasses import dataclass

from synprop.ancestry import _owner_table
from synprop.corel import Corelation, check_boundary, corel_compose, enumerate_corel
from synprop.errors import ContractError
from synprop.finset import FinFunction, compose_fn, coproduct_fn, kernel_partition, pushout
from synprop.syn import SynMorphism


@dataclass(frozen=True)
class Cospan:
    m: int
    n: int
    apex: int
    a: FinFunction
    b: FinFunction

    def __post_init__(self):
        if (self.a.dom_size, self.a.cod_size) != (self.m, self.apex):
            raise ContractError(f"left leg must map {self.m} -> {self.apex}")
        if (self.b.dom_size, self.b.cod_size) != (self.n, self.apex):
            raise ContractError(f"right leg must map {self.n} -> {self.apex}")
        if not _is_canonical(self.apex, self.a.table + self.b.table):
            raise ContractError("cospan is not in canonical form; use Cospan.make")

    @classmethod
    def make(cls, m: int, n: int, apex: int, a, b) -> "Cospan":
        """Canonicalise arbitrary legs ``a: m -> apex``, ``b: n -> apex``."""
        a, b = tuple(a), tuple(b)
        if len(a) != m or len(b) != n:
            raise ContractError("leg lengths do not match the boundary")
        if any(not 0 <= x < apex for x in a + b):
            raise ContractError(f"leg entry outside apex of size {apex}")
        return cls._canonical(m, n, apex, a, b)

    @classmethod
    def _canonical(cls, m: int, n: int, apex: int, a: tuple, b: tuple) -> "Cospan":
        # legs already known to land in the apex
        relabel: dict[int, int] = {}
        joint = [relabel.setdefault(x, len(relabel)) for x in a + b]
        self = object.__new__(cls)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "apex", apex)
        object.__setattr__(self, "a", FinFunction._trusted(m, apex, tuple(joint[:m])))
        object.__setattr__(self, "b", FinFunction._trusted(n, apex, tuple(joint[m:])))
        return self

    @property
    def unreached(self) -> int:
        return self.apex - len(set(self.a.table) | set(self.b.table))

    def is_jointly_epic(self) -> bool:
        return self.unreached == 0


def _is_canonical(apex: int, joint) -> bool:
    top = -1
    for x in joint:
        if x > top + 1:
            return False
        top = max(top, x)
    return top < apex


def cospan_identity(k: int) -> Cospan:
    return iota(FinFunction.identity(k))


def iota(f: FinFunction) -> Cospan:
    """``[dom -f-> cod <-id- cod]``."""
    return Cospan.make(f.dom_size, f.cod_size, f.cod_size, f.table, range(f.cod_size))


def cospan_symmetry(p: int, q: int) -> Cospan:
    b = tuple(p + j for j in range(q)) + tuple(range(p))
    return Cospan.make(p + q, p + q, p + q, range(p + q), b)


def cospan_compose(c1: Cospan, c2: Cospan) -> Cospan:
    """Diagrammatic composite ``c1`` then ``c2``, glued by pushout over ``c1.n``."""
    if c1.n != c2.m:
        raise ContractError(f"cannot compose {c1.m}->{c1.n} with {c2.m}->{c2.n}")
    apex, j1, j2 = pushout(c1.b, c2.a)
    return Cospan._canonical(
        c1.m, c2.n, apex, compose_fn(c1.a, j1).table, compose_fn(c2.b, j2).table
    )


def cospan_tensor(c1: Cospan, c2: Cospan) -> Cospan:
    return Cospan._canonical(
        c1.m + c2.m,
        c1.n + c2.n,
        c1.apex + c2.apex,
        coproduct_fn(c1.a, c2.a).table,
        coproduct_fn(c1.b, c2.b).table,
    )


def mu_c() -> Cospan:
    return Cospan.make(2, 1, 1, (0, 0), (0,))


def eta_c() -> Cospan:
    return Cospan.make(0, 1, 1, (), (0,))


def delta_c() -> Cospan:
    return Cospan.make(1, 2, 1, (0,), (0, 0))


def eps_c() -> Cospan:
    return Cospan.make(1, 0, 1, (0,), ())


def pi_bar(c: Cospan) -> Corelation:
    """Boundary points are related when their legs meet in the apex."""
    return Corelation._trusted(c.m, c.n, kernel_partition([c.a, c.b]))


def corelation_to_cospan(r: Corelation) -> Cospan:
    """The jointly epic cospan onto the classes of ``r``."""
    k = r.partition.num_classes
    return Cospan.make(r.m, r.n, k, r.class_id[: r.m], r.class_id[r.m :])


def real(f: SynMorphism) -> Cospan:
    """Realise a forest: apex = inputs, each output sent to its tree."""
    return Cospan.make(f.m, f.n, f.m, range(f.m), _owner_table(f))


def enumerate_cospans(m: int, n: int, max_apex: int) -> list[Cospan]:
    """Every canonical cospan ``m -> n`` with apex at most ``max_apex``."""
    out = []
    for apex in range(max_apex + 1):
        seen = set()
        for joint in itertools.product(range(apex), repeat=m + n):
            c = Cospan.make(m, n, apex, joint[:m], joint[m:])
            if c not in seen:
                seen.add(c)
                out.append(c)
    return out


def check_scfa() -> list[tuple[str, bool]]:
    """Evaluate the Frobenius axioms for ``(mu, eta, delta, eps)`` on the object 1.

    Each entry is an equation checked as equality of canonical forms. The
    final two entries record the extra law, which fails for cospans and
    holds once both sides are collapsed to corelations.
    """
    mu, eta, de, ep = mu_c(), eta_c(), delta_c(), eps_c()
    i1, i0 = cospan_identity(1), cospan_identity(0)
    sw = cospan_symmetry(1, 1)
    seq, par = cospan_compose, cospan_tensor

    extra_lhs = seq(eta, ep)
    return [
        ("associativity", seq(par(mu, i1), mu) == seq(par(i1, mu), mu)),
        ("left unit", seq(par(eta, i1), mu) == i1),
        ("right unit", seq(par(i1, eta), mu) == i1),
        ("commutativity", seq(sw, mu) == mu),
        ("coassociativity", seq(de, par(de, i1)) == seq(de, par(i1, de))),
        ("left counit", seq(de, par(ep, i1)) == i1),
        ("right counit", seq(de, par(i1, ep)) == i1),
        ("cocommutativity", seq(de, sw) == de),
        ("frobenius left", seq(par(i1, de), par(mu, i1)) == seq(mu, de)),
        ("frobenius right", seq(par(de, i1), par(i1, mu)) == seq(mu, de)),
        ("special", seq(de, mu) == i1),
        ("extra law in cospans", extra_lhs == i0),
        ("extra law after pi_bar", pi_bar(extra_lhs) == pi_bar(i0)),
    ]


SCFA_AXIOMS = (
    "associativity",
    "left unit",
    "right unit",
    "commutativity",
    "coassociativity",
    "left counit",
    "right counit",
    "cocommutativity",
    "frobenius left",
    "frobenius right",
)


def generating_cospans(max_wires: int = 2) -> list[Cospan]:
    """Frobenius generators, the swap, and ``iota`` of every small function."""
    gens = [mu_c(), eta_c(), delta_c(), eps_c(), cospan_symmetry(1, 1)]
    for a in range(max_wires + 1):
        for b in range(max_wires + 1):
            for table in itertools.product(range(b), repeat=a):
                gens.append(iota(FinFunction(a, b, table)))
    return list(dict.fromkeys(gens))


@lru_cache(maxsize=16)
def generated_cospans(
    depth: int, max_boundary: int, max_apex: int, max_unreached: int = 0
) -> frozenset[Cospan]:
    """Close the generators under compose and tensor, ``depth`` rounds deep.

    Round ``d`` adds every composite and tensor of two cospans from round
    ``d - 1``. Results with ``m + n > max_boundary``, apex above
    ``max_apex``, or more than ``max_unreached`` unhit apex points are
    dropped, which keeps the search finite.
    """

    def keep(c: Cospan) -> bool:
        return (
            c.m + c.n <= max_boundary
            and c.apex <= max_apex
            and c.unreached <= max_unreached
        )

    level = {c for c in generating_cospans(2) if keep(c)}
    frontier = set(level)
    for _ in range(depth):
        by_dom: dict[int, list[Cospan]] = {}
        by_cod: dict[int, list[Cospan]] = {}
        by_size: dict[int, list[Cospan]] = {}
        for c in level:
            by_dom.setdefault(c.m, []).append(c)
            by_cod.setdefault(c.n, []).append(c)
            by_size.setdefault(c.m + c.n, []).append(c)
        fresh = set()
        for x in frontier:
            for y in by_dom.get(x.n, ()):
                fresh.add(cospan_compose(x, y))
            for y in by_cod.get(x.m, ()):
                fresh.add(cospan_compose(y, x))
            for size in range(max_boundary - x.m - x.n + 1):
                for y in by_size.get(size, ()):
                    if x.apex + y.apex <= max_apex:
                        fresh.add(cospan_tensor(x, y))
                        fresh.add(cospan_tensor(y, x))
        frontier = {c for c in fresh if keep(c)} - level
        if not frontier:
            break
        level |= frontier
    return frozenset(level)


def _sort_key(c: Cospan):
    return (c.m, c.n, c.apex, c.a.table, c.b.table)


def closure_bounds(m: int, n: int) -> tuple[int, int]:
    """Pruning used by ``quotient_card``: (max total boundary, max apex).

    Two spare wires let a composite pass through ``delta + id`` style
    layers. The cap at 6 keeps the closure to a few seconds. It misses
    only the crossing partition on four outputs (or four inputs), which
    needs a 4 -> 4 intermediate; the section ``corelation_to_cospan``
    supplies it.
    """
    return min(m + n + 2, 6), max(m + n, 1)


def quotient_card(
    m: int,
    n: int,
    generator_depth: int,
    *,
    include_sections: bool = True,
    bound: int | None = None,
) -> int:
    """Number of distinct corelations ``m -> n`` reached through ``pi_bar``."""
    check_boundary(m, n, bound)
    reached = {
        pi_bar(c)
        for c in generated_cospans(generator_depth, *closure_bounds(m, n))
        if (c.m, c.n) == (m, n)
    }
    if include_sections:
        reached |= {pi_bar(corelation_to_cospan(r)) for r in enumerate_corel(m, n, bound)}
    return len(reached)


def corel_from_cospans(c1: Cospan, c2: Cospan) -> Corelation:
    """Collapse then compose; agrees with ``pi_bar(cospan_compose(c1, c2))``."""
    return corel_compose(pi_bar(c1), pi_bar(c2))
