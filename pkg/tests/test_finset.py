import itertools

import hypothesis.strategies as st
import pytest
from hypothesis import given

from synprop.errors import ContractError
from synprop.finset import (
    FinFunction,
    Partition,
    all_functions,
    canonical_labels,
    compose_fn,
    fiber_nonempty_functions,
    kernel_partition,
    merge_classes,
    pushout,
)


def fn(table, cod):
    return FinFunction.from_table(table, cod)


@st.composite
def fin_functions(draw, max_dom=4, max_cod=4, dom=None):
    cod = draw(st.integers(1, max_cod))
    dom = draw(st.integers(0, max_dom)) if dom is None else dom
    table = draw(st.lists(st.integers(0, cod - 1), min_size=dom, max_size=dom))
    return fn(table, cod)


class TestFinFunction:
    def test_rejects_out_of_range(self):
        with pytest.raises(ContractError):
            fn([0, 2], 2)

    def test_rejects_wrong_length(self):
        with pytest.raises(ContractError):
            FinFunction(3, 2, (0, 1))

    def test_identity_then_g(self):
        g = fn([2, 0, 1], 3)
        assert compose_fn(FinFunction.identity(3), g) == g

    def test_swap_is_involution(self):
        swap = fn([1, 0], 2)
        assert compose_fn(swap, swap) == FinFunction.identity(2)

    def test_compose_pointwise(self):
        assert compose_fn(fn([0, 1, 1], 2), fn([1, 0], 2)) == fn([1, 0, 0], 2)

    def test_compose_mismatch(self):
        with pytest.raises(ContractError):
            compose_fn(fn([0], 2), fn([0], 1))

    def test_empty_function_is_legal(self):
        empty = FinFunction(0, 0, ())
        assert compose_fn(empty, empty) == empty


class TestPartition:
    def test_canonical_labels_required(self):
        with pytest.raises(ContractError):
            Partition(2, (1, 0))
        with pytest.raises(ContractError):
            Partition(3, (0, 2, 1))

    @given(st.lists(st.integers(0, 5), max_size=8))
    def test_from_labels_same_relation(self, labels):
        p = Partition.from_labels(labels)
        for x, y in itertools.combinations(range(len(labels)), 2):
            assert p.related(x, y) == (labels[x] == labels[y])

    @given(st.lists(st.integers(0, 5), max_size=8), st.permutations(range(6)))
    def test_relabelling_does_not_change_value(self, labels, perm):
        assert Partition.from_labels(labels) == Partition.from_labels([perm[x] for x in labels])

    def test_merge_classes(self):
        roots = merge_classes(5, [(3, 1), (4, 1)])
        assert canonical_labels(roots) == (0, 1, 2, 1, 1)

    @given(st.integers(1, 8).flatmap(
        lambda k: st.lists(st.tuples(st.integers(0, k - 1), st.integers(0, k - 1))).map(
            lambda ps: (k, ps))))
    def test_merge_classes_is_closure(self, case):
        size, pairs = case
        roots = merge_classes(size, pairs)
        reach = [{x} for x in range(size)]
        changed = True
        while changed:
            changed = False
            for x, y in pairs:
                for group in reach:
                    if (x in group) != (y in group):
                        group |= {x, y}
                        changed = True
        for x in range(size):
            for y in range(size):
                assert (roots[x] == roots[y]) == (y in reach[x])


class TestPushout:
    def test_empty_span_is_coproduct(self):
        apex, jf, jg = pushout(FinFunction(0, 2, ()), FinFunction(0, 3, ()))
        assert apex == 5
        assert jf == fn([0, 1], 5)
        assert jg == fn([2, 3, 4], 5)

    def test_single_merge(self):
        apex, jf, jg = pushout(fn([0], 1), fn([0], 2))
        assert apex == 2
        assert jf == fn([0], 2)
        assert jg == fn([0, 1], 2)

    @pytest.mark.parametrize("k", [0, 1, 3])
    def test_identity_span(self, k):
        ident = FinFunction.identity(k)
        apex, jf, jg = pushout(ident, ident)
        assert apex == k and jf == ident and jg == ident

    def test_source_mismatch(self):
        with pytest.raises(ContractError):
            pushout(fn([0], 1), fn([0, 0], 1))

    @given(st.data())
    def test_symmetry(self, data):
        y = data.draw(st.integers(0, 4))
        f = data.draw(fin_functions(dom=y))
        g = data.draw(fin_functions(dom=y))
        apex, jf, jg = pushout(f, g)
        apex2, jg2, jf2 = pushout(g, f)
        assert apex == apex2
        # same equivalence relation on N + N'
        assert Partition.from_labels(jf.table + jg.table) == Partition.from_labels(
            jf2.table + jg2.table
        )

    @given(st.data())
    def test_square_commutes(self, data):
        y = data.draw(st.integers(0, 4))
        f = data.draw(fin_functions(dom=y))
        g = data.draw(fin_functions(dom=y))
        _, jf, jg = pushout(f, g)
        assert compose_fn(f, jf) == compose_fn(g, jg)

    def test_universal_property_exhaustive(self):
        # every cocone (u, v) factors through the pushout exactly once
        for ny, nl, nr, nz in itertools.product(range(3), range(3), range(3), range(3)):
            for f, g in itertools.product(all_functions(ny, nl), all_functions(ny, nr)):
                apex, jf, jg = pushout(f, g)
                cands = list(all_functions(apex, nz))
                for u, v in itertools.product(all_functions(nl, nz), all_functions(nr, nz)):
                    if compose_fn(f, u) != compose_fn(g, v):
                        continue
                    hits = [w for w in cands
                            if compose_fn(jf, w) == u and compose_fn(jg, w) == v]
                    assert len(hits) == 1, (f, g, u, v)


class TestKernelPartition:
    def test_injective_map_is_discrete(self):
        assert kernel_partition([fn([2, 0, 1], 3)]) == Partition.discrete(3)

    def test_forced_merge(self):
        assert kernel_partition([fn([0], 1), fn([0], 1)]) == Partition(2, (0, 0))

    def test_compare_images(self):
        p = kernel_partition([fn([0, 1], 2), fn([1], 2)])
        assert p.classes() == [[0], [1, 2]]

    def test_empty_sequence(self):
        with pytest.raises(ContractError):
            kernel_partition([])

    def test_codomain_mismatch(self):
        with pytest.raises(ContractError):
            kernel_partition([fn([0], 1), fn([0], 2)])

    @given(st.integers(0, 5), st.integers(1, 4), st.randoms(use_true_random=False))
    def test_surjection_has_cod_classes(self, extra, c, rng):
        table = list(range(c)) + [rng.randrange(c) for _ in range(extra)]
        rng.shuffle(table)
        assert kernel_partition([fn(table, c)]).num_classes == c


class TestFiberNonempty:
    def test_constant_only(self):
        assert fiber_nonempty_functions(2, 1) == [fn([0, 0], 1)]

    def test_three_onto_two(self):
        assert len(fiber_nonempty_functions(3, 2)) == 6

    def test_empty_function(self):
        assert fiber_nonempty_functions(0, 0) == [FinFunction(0, 0, ())]

    @pytest.mark.parametrize("n,m", [(1, 2), (2, 0), (3, 0)])
    def test_empty_cases(self, n, m):
        assert fiber_nonempty_functions(n, m) == []

    @pytest.mark.parametrize("n,m", list(itertools.product(range(6), range(5))))
    def test_matches_brute_filter(self, n, m):
        brute = [f for f in all_functions(n, m) if len(set(f.table)) == m]
        assert fiber_nonempty_functions(n, m) == brute
