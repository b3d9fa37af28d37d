"""Verification suites behind ``synprop check``.

Each suite returns a ``CheckReport``. Suites are deterministic for a given
seed and bounds.
"""

from __future__ import annotations

import itertools
import random
import time
from functools import lru_cache, wraps
from dataclasses import dataclass, field
from typing import Callable

from synprop import ancestry as anc
from synprop import cospan as cs
from synprop import logic as lg
from synprop import sampling as smp
from synprop import syn as sy
from synprop.corel import (
    Corelation,
    corel_compose,
    corel_identity,
    corel_symmetry,
    corel_tensor,
    enumerate_corel,
    is_in_circ,
)
from synprop.errors import ResourceLimitError
from synprop.finset import all_functions, fiber_nonempty_functions


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class CheckReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0
    resource_error: str | None = None

    def add(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(passed), detail))
        return passed

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def exit_status(self) -> int:
        if self.resource_error is not None:
            return 4
        return 0 if self.passed else 1

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "exit_status": self.exit_status,
            "resource_error": self.resource_error,
            "checks": [
                {"name": c.name, "status": "pass" if c.passed else "fail", "detail": c.detail}
                for c in self.checks
            ],
        }

    def lines(self) -> list[str]:
        out = [
            f"{'PASS' if c.passed else 'FAIL'}  {self.suite}: {c.name}"
            + (f"  ({c.detail})" if c.detail else "")
            for c in self.checks
        ]
        if self.resource_error is not None:
            out.append(f"STOP  {self.suite}: {self.resource_error}")
        return out


def suite(name: str):
    """Turn ``body(report, ...)`` into a function returning a ``CheckReport``.

    A ``ResourceLimitError`` stops the suite early; the checks gathered so
    far are kept.
    """

    def deco(body):
        @wraps(body)
        def run(*args, **kwargs) -> CheckReport:
            report = CheckReport(name)
            start = time.perf_counter()
            try:
                body(report, *args, **kwargs)
            except ResourceLimitError as exc:
                report.resource_error = str(exc)
            report.seconds = time.perf_counter() - start
            return report

        return run

    return deco


@dataclass(frozen=True)
class PropOps:
    """The structure maps of one PROP, plus ways to produce morphisms."""

    name: str
    identity: Callable
    symmetry: Callable
    then: Callable
    tensor: Callable
    homset: Callable  # (m, n) -> list, exhaustive for small sizes
    sample: Callable  # (rng, m, n) -> morphism
    nonempty: Callable  # (m, n) -> bool
    dom: Callable = lambda f: f.m
    cod: Callable = lambda f: f.n


def _cocom_homset(m: int, n: int):
    return [anc.CocomMap(m, n, phi) for phi in fiber_nonempty_functions(n, m)]


SYN = PropOps(
    "syn", sy.identity, sy.symmetry, sy.then, sy.tensor,
    sy.enumerate_syn, smp.random_syn, smp.syn_homset_nonempty,
)
COCOM = PropOps(
    "cocom", anc.cocom_identity, anc.cocom_symmetry, anc.cocom_compose, anc.cocom_tensor,
    _cocom_homset, smp.random_cocom, smp.syn_homset_nonempty,
)
COREL = PropOps(
    "corel", corel_identity, corel_symmetry, corel_compose, corel_tensor,
    enumerate_corel, smp.random_corel, lambda m, n: True,
)
COSPAN = PropOps(
    "cospan", cs.cospan_identity, cs.cospan_symmetry, cs.cospan_compose, cs.cospan_tensor,
    lambda m, n: cs.enumerate_cospans(m, n, 2), smp.random_cospan, lambda m, n: True,
)

PROPS = {p.name: p for p in (SYN, COCOM, COREL, COSPAN)}


class _Tally:
    """Counts cases per law and keeps the first counterexample."""

    def __init__(self):
        self.cases: dict[str, int] = {}
        self.failures: dict[str, str] = {}

    def __call__(self, law: str, ok: bool, witness=None) -> None:
        self.cases[law] = self.cases.get(law, 0) + 1
        if not ok and law not in self.failures:
            self.failures[law] = repr(witness)[:300]

    def report_into(self, report: CheckReport, prefix: str) -> None:
        for law, n in self.cases.items():
            bad = self.failures.get(law)
            detail = f"{n} cases" + (f"; counterexample {bad}" if bad else "")
            report.add(f"{prefix} {law}", bad is None, detail)


def _homsets(ops: PropOps, size: int) -> dict:
    return {
        (a, b): ops.homset(a, b) for a in range(size + 1) for b in range(size + 1)
    }


def _laws(ops: PropOps, tally: _Tally, f, g, h) -> None:
    """Laws involving one composable triple ``f ; g ; h``."""
    then, tensor, ident = ops.then, ops.tensor, ops.identity
    tally("associativity", then(then(f, g), h) == then(f, then(g, h)), (f, g, h))
    tally("identity", then(ident(f.m), f) == f == then(f, ident(f.n)), f)
    tally("tensor associativity",
          tensor(tensor(f, g), h) == tensor(f, tensor(g, h)), (f, g, h))
    tally("tensor unit", tensor(f, ident(0)) == f == tensor(ident(0), f), f)
    nat_l = then(tensor(f, h), ops.symmetry(f.n, h.n))
    nat_r = then(ops.symmetry(f.m, h.m), tensor(h, f))
    tally("symmetry naturality", nat_l == nat_r, (f, h))


def _interchange(ops: PropOps, tally: _Tally, f, h, g, k, tensor=None, then=None) -> None:
    tensor = tensor or ops.tensor
    then = then or ops.then
    lhs = ops.then(tensor(f, g), tensor(h, k))
    rhs = ops.tensor(then(f, h), then(g, k))
    tally("interchange", lhs == rhs, (f, h, g, k))


def _symmetry_laws(ops: PropOps, tally: _Tally, size: int) -> None:
    for p, q, r in itertools.product(range(size + 1), repeat=3):
        inv = ops.then(ops.symmetry(p, q), ops.symmetry(q, p)) == ops.identity(p + q)
        tally("symmetry involution", inv, (p, q))
        hexagon = ops.then(
            ops.tensor(ops.symmetry(p, q), ops.identity(r)),
            ops.tensor(ops.identity(q), ops.symmetry(p, r)),
        )
        tally("symmetry hexagon", hexagon == ops.symmetry(p, q + r), (p, q, r))


def prop_law_tally(ops: PropOps, size: int, random_cases: int, seed: int,
                   max_width: int = 4) -> _Tally:
    tally = _Tally()
    homs = _homsets(ops, size)
    sizes = range(size + 1)
    for a, b, c, d in itertools.product(sizes, repeat=4):
        for f in homs[a, b]:
            for g in homs[b, c]:
                for h in homs[c, d]:
                    _laws(ops, tally, f, g, h)
    pairs = [
        (f, g)
        for a, b, c in itertools.product(sizes, repeat=3)
        for f in homs[a, b]
        for g in homs[b, c]
    ]
    # every factor recurs across many quadruples
    tensor_memo = lru_cache(maxsize=None)(ops.tensor)
    then_memo = lru_cache(maxsize=None)(ops.then)
    for (f, h), (g, k) in itertools.product(pairs, repeat=2):
        _interchange(ops, tally, f, h, g, k, tensor_memo, then_memo)
    _symmetry_laws(ops, tally, size)

    rng = random.Random(seed)
    for _ in range(random_cases):
        chain = _random_chain(ops, rng, 4, max_width)
        f, g, h = (ops.sample(rng, x, y) for x, y in zip(chain, chain[1:]))
        _laws(ops, tally, f, g, h)
        other = _random_chain(ops, rng, 3, max_width)
        k1, k2 = (ops.sample(rng, x, y) for x, y in zip(other, other[1:]))
        _interchange(ops, tally, f, g, k1, k2)
    return tally


def _random_chain(ops: PropOps, rng: random.Random, length: int, width: int) -> list[int]:
    if ops.nonempty(width + 1, 0):
        return [rng.randint(0, width) for _ in range(length)]
    return smp.random_syn_sizes(rng, length, width)


@suite("prop-laws")
def suite_prop_laws(report: CheckReport, size: int = 2, random_cases: int = 10_000,
                    seed: int = 0, props=("syn", "corel", "cospan", "cocom")) -> None:
    for name in props:
        width = 5 if name in ("syn", "cocom") else 3
        prop_law_tally(PROPS[name], size, random_cases, seed, width).report_into(report, name)


@dataclass(frozen=True)
class FunctorSpec:
    name: str
    source: PropOps
    target: PropOps
    on_morphisms: Callable


FUNCTORS = {
    "pi": FunctorSpec("pi", SYN, COREL, anc.pi),
    "cocom_of": FunctorSpec("cocom_of", SYN, COCOM, anc.cocom_of),
    "corelation_of": FunctorSpec("corelation_of", COCOM, COREL, anc.corelation_of),
    "real": FunctorSpec("real", SYN, COSPAN, cs.real),
    "pi_bar": FunctorSpec("pi_bar", COSPAN, COREL, cs.pi_bar),
}


def functor_tally(spec: FunctorSpec, size: int, random_cases: int, seed: int,
                  max_width: int = 5) -> _Tally:
    src, tgt, fn = spec.source, spec.target, spec.on_morphisms
    tally = _Tally()

    def check_pair(f, g) -> None:
        tally("preserves composition",
              fn(src.then(f, g)) == tgt.then(fn(f), fn(g)), (f, g))

    def check_tensor(f, g) -> None:
        tally("preserves tensor",
              fn(src.tensor(f, g)) == tgt.tensor(fn(f), fn(g)), (f, g))

    for k in range(max_width + 1):
        tally("preserves identities", fn(src.identity(k)) == tgt.identity(k), k)
    for p, q in itertools.product(range(max_width + 1), repeat=2):
        tally("preserves symmetries", fn(src.symmetry(p, q)) == tgt.symmetry(p, q), (p, q))

    homs = _homsets(src, size)
    sizes = range(size + 1)
    for a, b, c in itertools.product(sizes, repeat=3):
        for f in homs[a, b]:
            for g in homs[b, c]:
                check_pair(f, g)
    flat = [f for fs in homs.values() for f in fs]
    for f, g in itertools.product(flat, repeat=2):
        check_tensor(f, g)

    rng = random.Random(seed)
    width = 3 if src.nonempty(max_width + 1, 0) else max_width
    for _ in range(random_cases):
        a, b, c = _random_chain(src, rng, 3, width)
        f, g = src.sample(rng, a, b), src.sample(rng, b, c)
        check_pair(f, g)
        check_tensor(f, g)
    return tally


@suite("functoriality")
def suite_functoriality(report: CheckReport, size: int = 2, random_cases: int = 10_000,
                        seed: int = 0, functors=tuple(FUNCTORS)) -> None:
    for name in functors:
        functor_tally(FUNCTORS[name], size, random_cases, seed).report_into(report, name)


def surjection_count_brute(n: int, m: int) -> int:
    """Count functions ``n -> m`` hitting every target by filtering all ``m**n`` tables."""
    return sum(1 for f in all_functions(n, m) if f.is_surjective())


@suite("theorem-a")
def suite_theorem_a(report: CheckReport, max_m: int = 3, max_n: int = 4) -> None:
    """Ancestry lands in, and exhausts, the one-input-per-class corelations.

    Also checks that the kernel of ``pi`` is the kernel of ``cocom_of``,
    that the comb construction is a section, and that every forest is a
    composite of the generator, identities and swaps.
    """
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            hom = sy.enumerate_syn(m, n)
            tag = f"({m},{n})"
            images = [anc.pi(f) for f in hom]
            classes = [anc.cocom_of(f) for f in hom]
            report.add(f"{tag} image in circ", all(is_in_circ(r) for r in images),
                       f"{len(hom)} morphisms")
            circ = {r for r in enumerate_corel(m, n) if is_in_circ(r)}
            report.add(f"{tag} image equals circ", set(images) == circ,
                       f"{len(circ)} corelations")
            kernels_agree = (
                len(set(images)) == len(set(classes)) == len(set(zip(images, classes)))
            )
            report.add(f"{tag} pi kernel = cocom kernel", kernels_agree)
            expected = surjection_count_brute(n, m)
            report.add(
                f"{tag} class count = surjections",
                len(set(images)) == expected == len(fiber_nonempty_functions(n, m)),
                f"{len(set(images))} vs {expected}",
            )
            sections = _cocom_homset(m, n)
            combs = [anc.realize_leftcomb(u) for u in sections]
            report.add(
                f"{tag} left comb is a section",
                all(anc.cocom_of(f) == u and anc.pi(f) == anc.corelation_of(u)
                    for f, u in zip(combs, sections)),
            )
            report.add(
                f"{tag} corelation_of injective",
                len({anc.corelation_of(u) for u in sections}) == len(sections),
            )
            report.add(
                f"{tag} generated by delta, id, swap",
                all(sy.evaluate_term(sy.decompose(f)) == f for f in hom),
            )
    # the kernel is a congruence: cocom_of of a composite depends only on the parts
    homs = {(a, b): sy.enumerate_syn(a, b)
            for a in range(max_n + 1) for b in range(max_n + 1) if a <= max_m or a == b}
    congruent, cases = True, 0
    for (a, b), fs in homs.items():
        for c in range(b, max_n + 1):
            for f in fs:
                for g in homs.get((b, c), ()):
                    cases += 1
                    congruent &= anc.cocom_of(sy.then(f, g)) == anc.cocom_compose(
                        anc.cocom_of(f), anc.cocom_of(g))
    for f, g in itertools.product([f for fs in homs.values() for f in fs if f.n <= 2], repeat=2):
        cases += 1
        congruent &= anc.cocom_of(sy.tensor(f, g)) == anc.cocom_tensor(
            anc.cocom_of(f), anc.cocom_of(g))
    report.add("ancestry kernel is a PROP congruence", congruent, f"{cases} cases")


def bell_numbers(k: int) -> list[int]:
    """Bell numbers ``B(0..k)`` via the Bell triangle."""
    bells, row = [1], [1]
    for _ in range(k):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
        bells.append(row[0])
    return bells


@suite("theorem-c")
def suite_theorem_c(report: CheckReport, section_boundary: int = 6,
                    card_boundary: int = 4, depth: int = 4) -> None:
    """Collapsing cospans to corelations is full: a section exists and the
    generators reach every corelation."""
    bell = bell_numbers(max(section_boundary, card_boundary))
    for total in range(section_boundary + 1):
        for m in range(total + 1):
            n = total - m
            rels = enumerate_corel(m, n)
            ok = len(rels) == bell[total] and all(
                cs.pi_bar(cs.corelation_to_cospan(r)) == r
                and cs.corelation_to_cospan(r).is_jointly_epic()
                for r in rels
            )
            report.add(f"({m},{n}) pi_bar retracts corelation_to_cospan", ok,
                       f"{len(rels)} corelations")
    for total in range(card_boundary + 1):
        for m in range(total + 1):
            n = total - m
            card = cs.quotient_card(m, n, depth)
            alone = cs.quotient_card(m, n, depth, include_sections=False)
            report.add(f"({m},{n}) quotient_card = Bell", card == bell[total],
                       f"{card} vs {bell[total]}; generators alone reach {alone}")


@suite("scfa")
def suite_scfa(report: CheckReport) -> None:
    for name, holds in cs.check_scfa():
        if name == "extra law in cospans":
            report.add("extra law fails in cospans", not holds,
                       "[0 -> 1 <- 0] differs from id_0")
        else:
            report.add(name, holds)


@suite("triangle")
def suite_triangle(report: CheckReport, max_m: int = 3, max_n: int = 4) -> None:
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            hom = sy.enumerate_syn(m, n)
            report.add(f"({m},{n}) pi = pi_bar . real",
                       all(anc.pi(f) == cs.pi_bar(cs.real(f)) for f in hom),
                       f"{len(hom)} morphisms")
    report.add("real(generator) = delta", cs.real(sy.generator()) == cs.delta_c())


@suite("counts")
def suite_counts(report: CheckReport, max_m: int = 3, max_n: int = 4) -> None:
    report.add("|Syn(1,2)| = 2", len(sy.enumerate_syn(1, 2)) == 2)
    report.add("|Syn(1,3)| = 12", len(sy.enumerate_syn(1, 3)) == 12)
    report.add("|FinCorel(1,1)| = 2", len(enumerate_corel(1, 1)) == 2)
    report.add("|FinCorel(2,1)| = 5", len(enumerate_corel(2, 1)) == 5)
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            circ = sum(1 for r in enumerate_corel(m, n) if is_in_circ(r))
            brute = surjection_count_brute(n, m)
            report.add(f"|FinCorel°({m},{n})| = surjections({n},{m})", circ == brute,
                       f"{circ} vs {brute}")


@suite("logic")
def suite_logic(report: CheckReport, max_size: int = 4, fix_size: int = 12,
                seed: int = 0) -> None:
    _logic_residuation(report, max_size)
    _logic_adjunctions(report, max_size)
    _logic_modalities(report, max_size)
    _logic_fixpoints(report, fix_size, seed)


def _subsets(size: int) -> list[lg.Pred]:
    return [lg.Pred(size, b) for b in range(1 << size)]


def _logic_residuation(report: CheckReport, max_size: int) -> None:
    ok, cases = True, 0
    for size in range(max_size + 1):
        preds = _subsets(size)
        for b, c in itertools.product(preds, repeat=2):
            imp = lg.implies(b, c)
            for a in preds:
                cases += 1
                ok &= (lg.meet(a, b) <= c) == (a <= imp)
    report.add("residuation", ok, f"{cases} triples")


def _logic_adjunctions(report: CheckReport, max_size: int) -> None:
    left_ok = right_ok = True
    cases = 0
    for dx, dy in itertools.product(range(max_size + 1), repeat=2):
        xs, ys = _subsets(dx), _subsets(dy)
        for f in all_functions(dx, dy):
            ex = [lg.exists_f(f, a) for a in xs]
            fa = [lg.forall_f(f, a) for a in xs]
            pb = [lg.pullback_f(f, b) for b in ys]
            for ia, a in enumerate(xs):
                for ib, b in enumerate(ys):
                    cases += 1
                    left_ok &= (ex[ia] <= b) == (a <= pb[ib])
                    right_ok &= (pb[ib] <= a) == (b <= fa[ia])
    report.add("exists -| pullback", left_ok, f"{cases} cases")
    report.add("pullback -| forall", right_ok, f"{cases} cases")


def _logic_modalities(report: CheckReport, max_size: int) -> None:
    """Every relation on every carrier up to ``max_size``, every predicate.

    The adjoint route is evaluated from ``exists_f``/``forall_f``/``pullback_f``
    on the projections, memoised per mask of ``X x X``; the direct route is
    an independent row-by-row bit computation. ``diamond``/``box`` themselves
    are compared against both for carriers up to 3.
    """
    route_ok = mono_ok = dual_ok = api_ok = True
    cases = 0
    for size in range(max_size + 1):
        full = (1 << size) - 1
        cells = size * size
        p1, p2 = lg.projections(size)
        pulled = [lg.pullback_f(p2, lg.Pred(size, a)).bits for a in range(full + 1)]
        image: dict[int, int] = {}
        universal: dict[int, int] = {}
        cell_full = (1 << cells) - 1
        covers = [(a, a | 1 << x) for a in range(full + 1) for x in range(size)
                  if not a >> x & 1]
        preds = range(full + 1)
        # hits[x][row][a]: bit x of the direct diamond when row x of R is ``row``
        hits = [[[(1 << x) if row & a else 0 for a in preds] for row in preds]
                for x in range(size)]
        safe = [[[(1 << x) if not row & ~a else 0 for a in preds] for row in preds]
                for x in range(size)]
        for rel in range(1 << cells):
            rows = [(rel >> (x * size)) & full for x in range(size)]
            dia_direct = [0] * (full + 1)
            box_direct = [0] * (full + 1)
            for x, row in enumerate(rows):
                hx, sx = hits[x][row], safe[x][row]
                for a in preds:
                    dia_direct[a] |= hx[a]
                    box_direct[a] |= sx[a]
            dia, bx = [], []
            for a in preds:
                m = rel & pulled[a]
                d = image.get(m)
                if d is None:
                    d = image[m] = lg.exists_f(p1, lg.Pred(cells, m)).bits
                m = (~rel & cell_full) | pulled[a]
                b = universal.get(m)
                if b is None:
                    b = universal[m] = lg.forall_f(p1, lg.Pred(cells, m)).bits
                dia.append(d)
                bx.append(b)
            cases += full + 1
            route_ok &= dia == dia_direct and bx == box_direct
            for a in preds:
                dual_ok &= bx[a] == ~dia[~a & full] & full
            for a, b in covers:
                mono_ok &= dia[a] & ~dia[b] == 0 and bx[a] & ~bx[b] == 0
            if size <= 3:
                r = _rel_from_mask(size, rel)
                for a in range(full + 1):
                    pa = lg.Pred(size, a)
                    api_ok &= lg.diamond(r, pa).bits == dia[a] == lg.diamond_direct(r, pa).bits
                    api_ok &= lg.box(r, pa).bits == bx[a] == lg.box_direct(r, pa).bits
    report.add("adjoint route = direct formula", route_ok, f"{cases} (R, A) pairs")
    report.add("diamond/box functions agree with both routes", api_ok, "carriers <= 3")
    report.add("modalities monotone", mono_ok)
    report.add("box/diamond duality", dual_ok)


def _rel_from_mask(size: int, mask: int) -> lg.Rel:
    cells = size * size
    return lg.Rel(size, frozenset(
        (k // size, k % size) for k in range(cells) if mask >> k & 1
    ))


def fixpoint_cases(fix_size: int, seed: int):
    """Monotone maps ``F`` used to test iteration against the exhaustive oracle."""
    rng = random.Random(seed)
    cases = []
    for size in range(fix_size + 1):
        for _ in range(3):
            pairs = frozenset(
                (x, y) for x in range(size) for y in range(size) if rng.random() < 0.2
            )
            rel = lg.Rel(size, pairs)
            c1 = lg.Pred(size, rng.getrandbits(size) if size else 0)
            c2 = lg.Pred(size, rng.getrandbits(size) if size else 0)
            cases.append((f"size {size} reach", size,
                          lambda a, r=rel, c=c1: lg.join(c, lg.diamond_direct(r, a))))
            cases.append((f"size {size} invariant", size,
                          lambda a, r=rel, c=c2: lg.meet(c, lg.box_direct(r, a))))
            cases.append((f"size {size} until", size,
                          lambda a, r=rel, c=c1, d=c2:
                          lg.join(c, lg.meet(d, lg.diamond_direct(r, a)))))
    return cases


def _logic_fixpoints(report: CheckReport, fix_size: int, seed: int) -> None:
    lfp_ok = gfp_ok = bounds_ok = True
    cases = 0
    for _, size, fn in fixpoint_cases(fix_size, seed):
        cases += 1
        lo, hi = lg.lfp(fn, size, seed=seed), lg.gfp(fn, size, seed=seed)
        least, greatest, fixed = lg.fixpoint_oracle(fn, size)
        lfp_ok &= lo == least and lo in fixed
        gfp_ok &= hi == greatest and hi in fixed
        bounds_ok &= all(lo <= p <= hi for p in fixed)
    report.add("lfp = exhaustive oracle", lfp_ok, f"{cases} maps up to size {fix_size}")
    report.add("gfp = exhaustive oracle", gfp_ok)
    report.add("lfp <= every fixed point <= gfp", bounds_ok)


SUITES = {
    "theorem-a": suite_theorem_a,
    "theorem-c": suite_theorem_c,
    "scfa": suite_scfa,
    "prop-laws": suite_prop_laws,
    "functoriality": suite_functoriality,
    "triangle": suite_triangle,
    "logic": suite_logic,
    "counts": suite_counts,
}
