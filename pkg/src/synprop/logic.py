"""Predicates on finite carriers, modalities, and monotone fixed points.

A predicate is a bitmask over ``{0..size-1}``. Python integers are
unbounded, so the same representation serves every carrier size.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import reduce
from typing import Callable, Iterable, Sequence

from synprop.config import current_limits
from synprop.errors import ContractError, MonotonicityError
from synprop.finset import FinFunction


@dataclass(frozen=True)
class Pred:
    size: int
    bits: int = 0

    def __post_init__(self):
        if self.size < 0:
            raise ContractError("carrier size must be a natural number")
        if self.bits < 0 or self.bits >> self.size:
            raise ContractError(f"members outside carrier of size {self.size}")

    @classmethod
    def of(cls, size: int, members: Iterable[int]) -> "Pred":
        bits = 0
        for x in members:
            if not 0 <= x < size:
                raise ContractError(f"{x} is not in a carrier of size {size}")
            bits |= 1 << x
        return cls(size, bits)

    @classmethod
    def empty(cls, size: int) -> "Pred":
        return cls(size, 0)

    @classmethod
    def full(cls, size: int) -> "Pred":
        return cls(size, (1 << size) - 1)

    def __contains__(self, x: int) -> bool:
        return bool(self.bits >> x & 1)

    def members(self) -> list[int]:
        return [x for x in range(self.size) if self.bits >> x & 1]

    def __le__(self, other: "Pred") -> bool:
        _same(self, other)
        return self.bits & ~other.bits == 0

    def __len__(self) -> int:
        return bin(self.bits).count("1")


@dataclass(frozen=True)
class Rel:
    size: int
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "pairs", frozenset(self.pairs))
        for x, y in self.pairs:
            if not (0 <= x < self.size and 0 <= y < self.size):
                raise ContractError(f"pair {(x, y)} outside carrier of size {self.size}")

    def as_pred(self) -> Pred:
        """The relation as a predicate on ``X x X``, pair ``(x, y)`` at ``x*size + y``."""
        return Pred.of(self.size * self.size, (x * self.size + y for x, y in self.pairs))


def _same(a: Pred, b: Pred) -> None:
    if a.size != b.size:
        raise ContractError(f"carrier mismatch: {a.size} vs {b.size}")


def meet(a: Pred, b: Pred) -> Pred:
    _same(a, b)
    return Pred(a.size, a.bits & b.bits)


def join(a: Pred, b: Pred) -> Pred:
    _same(a, b)
    return Pred(a.size, a.bits | b.bits)


def complement(a: Pred) -> Pred:
    return Pred(a.size, ~a.bits & ((1 << a.size) - 1))


def implies(a: Pred, b: Pred) -> Pred:
    # powerset lattices are Boolean, so a => b is (not a) or b
    _same(a, b)
    return join(complement(a), b)


def big_meet(size: int, family: Iterable[Pred]) -> Pred:
    return reduce(meet, family, Pred.full(size))


def big_join(size: int, family: Iterable[Pred]) -> Pred:
    return reduce(join, family, Pred.empty(size))


def exists_f(f: FinFunction, a: Pred) -> Pred:
    """Direct image."""
    if a.size != f.dom_size:
        raise ContractError("predicate must live on the domain of f")
    return Pred.of(f.cod_size, (f.table[x] for x in a.members()))


def pullback_f(f: FinFunction, b: Pred) -> Pred:
    """Inverse image."""
    if b.size != f.cod_size:
        raise ContractError("predicate must live on the codomain of f")
    return Pred.of(f.dom_size, (x for x, y in enumerate(f.table) if y in b))


def forall_f(f: FinFunction, a: Pred) -> Pred:
    """Points whose whole fiber lies in ``a``."""
    if a.size != f.dom_size:
        raise ContractError("predicate must live on the domain of f")
    outside = {f.table[x] for x in range(f.dom_size) if x not in a}
    return Pred.of(f.cod_size, (y for y in range(f.cod_size) if y not in outside))


def projections(size: int) -> tuple[FinFunction, FinFunction]:
    pairs = range(size * size)
    first = FinFunction(size * size, size, tuple(k // size for k in pairs))
    second = FinFunction(size * size, size, tuple(k % size for k in pairs))
    return first, second


def _check_rel(r: Rel, a: Pred) -> None:
    if r.size != a.size:
        raise ContractError(f"relation on {r.size} points, predicate on {a.size}")


def diamond(r: Rel, a: Pred) -> Pred:
    """Points with some successor in ``a``, via image along the first projection."""
    _check_rel(r, a)
    p1, p2 = projections(r.size)
    return exists_f(p1, meet(r.as_pred(), pullback_f(p2, a)))


def box(r: Rel, a: Pred) -> Pred:
    """Points all of whose successors lie in ``a``."""
    _check_rel(r, a)
    p1, p2 = projections(r.size)
    return forall_f(p1, implies(r.as_pred(), pullback_f(p2, a)))


def diamond_direct(r: Rel, a: Pred) -> Pred:
    _check_rel(r, a)
    return Pred.of(r.size, {x for x, y in r.pairs if y in a})


def box_direct(r: Rel, a: Pred) -> Pred:
    _check_rel(r, a)
    bad = {x for x, y in r.pairs if y not in a}
    return Pred.of(r.size, (x for x in range(r.size) if x not in bad))


PredMap = Callable[[tuple[Pred, ...]], Sequence[Pred]]


def _leq(xs: Sequence[Pred], ys: Sequence[Pred]) -> bool:
    return all(x <= y for x, y in zip(xs, ys))


def _lift(f, arity: int | None):
    if arity is None:
        return (lambda xs: (f(xs[0]),)), 1
    return (lambda xs: tuple(f(xs))), arity


def check_monotone(
    f: PredMap, size: int, arity: int, samples: int, seed: int = 0
) -> None:
    """Spot-check ``f`` on random comparable pairs ``A <= B``."""
    rng = random.Random(seed)
    top = (1 << size) - 1
    for _ in range(samples):
        lo, hi = [], []
        for _ in range(arity):
            big = rng.randint(0, top)
            lo.append(Pred(size, big & rng.randint(0, top)))
            hi.append(Pred(size, big))
        flo, fhi = f(tuple(lo)), f(tuple(hi))
        if not _leq(flo, fhi):
            raise MonotonicityError(
                f"map is not monotone: {[p.members() for p in lo]} <= "
                f"{[p.members() for p in hi]} but images are not ordered"
            )


def _iterate(f: PredMap, start: tuple[Pred, ...], size: int, arity: int):
    current = start
    for _ in range(arity * size + 1):
        nxt = tuple(f(current))
        if nxt == current:
            return current
        current = nxt
    raise MonotonicityError(
        f"no fixed point after {arity * size + 1} steps; the map is not monotone"
    )


def _fixpoint(f, size, arity, bottom: bool, samples, seed):
    g, k = _lift(f, arity)
    if samples is None:
        samples = current_limits().monotonicity_samples
    check_monotone(g, size, k, samples, seed)
    make = Pred.empty if bottom else Pred.full
    result = _iterate(g, tuple(make(size) for _ in range(k)), size, k)
    return result[0] if arity is None else result


def lfp(f, size: int, arity: int | None = None, *, samples: int | None = None, seed: int = 0):
    """Least fixed point by Kleene iteration from the bottom.

    With ``arity=None`` ``f`` maps a ``Pred`` to a ``Pred``; otherwise it
    maps a tuple of ``arity`` predicates to a sequence of the same length.
    """
    return _fixpoint(f, size, arity, True, samples, seed)


def gfp(f, size: int, arity: int | None = None, *, samples: int | None = None, seed: int = 0):
    """Greatest fixed point by iteration from the top."""
    return _fixpoint(f, size, arity, False, samples, seed)


def fixpoint_oracle(f: Callable[[Pred], Pred], size: int) -> tuple[Pred, Pred, list[Pred]]:
    """Exhaustive Knaster-Tarski oracle over all ``2**size`` subsets.

    Returns the meet of all pre-fixed points, the join of all post-fixed
    points, and the list of every fixed point.
    """
    low, high, fixed = Pred.full(size), Pred.empty(size), []
    for bits in range(1 << size):
        p = Pred(size, bits)
        image = f(p)
        if image <= p:
            low = meet(low, p)
        if p <= image:
            high = join(high, p)
        if image == p:
            fixed.append(p)
    return low, high, fixed


# Formula terms for the command line:
#   {"var": k} | {"const": [..]} | {"not": t} | {"and": [t, ..]} | {"or": [t, ..]}
#   {"implies": [t, t]} | {"diamond": t} | {"box": t}


def eval_formula(term, env: Sequence[Pred], rel: Rel) -> Pred:
    size = rel.size
    if not isinstance(term, dict) or len(term) != 1:
        raise ContractError(f"malformed formula {term!r}")
    (op, arg), = term.items()
    if op == "var":
        return env[0 if arg is None else arg]
    if op == "const":
        return Pred.of(size, arg)
    if op == "not":
        return complement(eval_formula(arg, env, rel))
    if op == "and":
        return big_meet(size, (eval_formula(t, env, rel) for t in arg))
    if op == "or":
        return big_join(size, (eval_formula(t, env, rel) for t in arg))
    if op == "implies":
        lhs, rhs = arg
        return implies(eval_formula(lhs, env, rel), eval_formula(rhs, env, rel))
    if op == "diamond":
        return diamond(rel, eval_formula(arg, env, rel))
    if op == "box":
        return box(rel, eval_formula(arg, env, rel))
    raise ContractError(f"unknown formula operator {op!r}")


def solve_fixpoint(spec: dict, *, seed: int = 0) -> dict:
    """Evaluate the JSON fixpoint request used by the command line.

    ``spec`` holds ``size``, ``relation`` (list of pairs) and either
    ``formula`` (one variable) or ``formulas`` (a system, variable ``k`` is
    component ``k``).
    """
    size = spec["size"]
    rel = Rel(size, frozenset(tuple(p) for p in spec.get("relation", [])))
    if "formulas" in spec:
        terms = spec["formulas"]

        def system(xs):
            return tuple(eval_formula(t, xs, rel) for t in terms)

        lo = lfp(system, size, len(terms), seed=seed)
        hi = gfp(system, size, len(terms), seed=seed)
        return {"lfp": [p.members() for p in lo], "gfp": [p.members() for p in hi]}

    term = spec["formula"]

    def single(x):
        return eval_formula(term, (x,), rel)

    return {
        "lfp": lfp(single, size, seed=seed).members(),
        "gfp": gfp(single, size, seed=seed).members(),
    }
