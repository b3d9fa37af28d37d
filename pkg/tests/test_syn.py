import itertools
import math

import pytest
from hypothesis import given

from synprop.errors import ContractError
from synprop.syn import (
    Leaf,
    Node,
    SynMorphism,
    decompose,
    enumerate_syn,
    evaluate_term,
    generator,
    identity,
    permutation,
    permutation_term,
    symmetry,
    tensor,
    then,
    tree_shapes,
)

from .conftest import syn_chain, syn_morphisms

L = Leaf


def catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


def forest_count(m: int, n: int) -> int:
    """Ordered forests of ``m`` binary trees on ``n`` labelled leaves."""
    if m == 0:
        return 1 if n == 0 else 0
    total = 0
    for sizes in itertools.product(range(1, n + 1), repeat=m):
        if sum(sizes) == n:
            total += math.prod(catalan(k - 1) for k in sizes)
    return total * math.factorial(n)


class TestConstructors:
    def test_generator(self):
        g = generator()
        assert (g.m, g.n, g.trees) == (1, 2, (Node(L(0), L(1)),))

    def test_identity(self):
        assert identity(0).trees == ()
        assert identity(3).trees == (L(0), L(1), L(2))

    def test_symmetry_transposition(self):
        assert symmetry(1, 1).trees == (L(1), L(0))
        assert symmetry(2, 1).trees == (L(1), L(2), L(0))

    @pytest.mark.parametrize("q", range(4))
    def test_symmetry_empty_block(self, q):
        assert symmetry(0, q) == identity(q)
        assert symmetry(q, 0) == identity(q)

    @pytest.mark.parametrize("p,q", list(itertools.product(range(4), repeat=2)))
    def test_symmetry_involution(self, p, q):
        assert then(symmetry(p, q), symmetry(q, p)) == identity(p + q)

    def test_rejects_repeated_leaf(self):
        with pytest.raises(ContractError):
            SynMorphism(2, 2, (L(0), L(0)))

    def test_rejects_wrong_tree_count(self):
        with pytest.raises(ContractError):
            SynMorphism(2, 2, (Node(L(0), L(1)),))


class TestComposition:
    def test_graft_left_comb(self):
        f = then(generator(), tensor(generator(), identity(1)))
        assert f.trees == (Node(Node(L(0), L(1)), L(2)),)

    def test_identity_then_generator(self):
        assert then(identity(1), generator()) == generator()

    def test_generator_then_swap(self):
        swapped = then(generator(), symmetry(1, 1))
        assert swapped.trees == (Node(L(1), L(0)),)
        assert swapped != generator()

    def test_tensor_shift(self):
        assert tensor(generator(), generator()).trees == (
            Node(L(0), L(1)),
            Node(L(2), L(3)),
        )

    def test_tensor_units(self):
        assert tensor(generator(), identity(0)) == generator()
        assert tensor(identity(1), identity(1)) == identity(2)

    def test_mismatch(self):
        with pytest.raises(ContractError):
            then(generator(), generator())

    def test_operators(self):
        g = generator()
        assert g >> (g @ identity(1)) == then(g, tensor(g, identity(1)))

    @given(syn_chain(length=3))
    def test_associativity(self, chain):
        f, g, h = chain
        assert then(then(f, g), h) == then(f, then(g, h))

    @given(syn_morphisms())
    def test_units(self, f):
        assert then(identity(f.m), f) == f == then(f, identity(f.n))

    @given(syn_morphisms(), syn_morphisms())
    def test_symmetry_naturality(self, f, g):
        lhs = then(tensor(f, g), symmetry(f.n, g.n))
        rhs = then(symmetry(f.m, g.m), tensor(g, f))
        assert lhs == rhs

    @given(syn_chain(length=2), syn_chain(length=2))
    def test_interchange(self, fh, gk):
        (f, h), (g, k) = fh, gk
        assert then(tensor(f, g), tensor(h, k)) == tensor(then(f, h), then(g, k))

    @given(syn_chain(length=2))
    def test_node_count_additive(self, chain):
        f, g = chain
        assert f.node_count() == f.n - f.m
        assert then(f, g).node_count() == f.node_count() + g.node_count()
        assert tensor(f, g).node_count() == f.node_count() + g.node_count()


class TestEnumeration:
    @pytest.mark.parametrize("m,n,count", [(1, 2, 2), (1, 3, 12), (0, 0, 1)])
    def test_examples(self, m, n, count):
        assert len(enumerate_syn(m, n)) == count

    @pytest.mark.parametrize("m,n", [(2, 1), (0, 1), (3, 0)])
    def test_empty(self, m, n):
        assert enumerate_syn(m, n) == []

    @pytest.mark.parametrize("m,n", [(m, n) for m in range(4) for n in range(6)])
    def test_count_formula_and_distinct(self, m, n):
        homset = enumerate_syn(m, n)
        assert len(homset) == forest_count(m, n)
        assert len(set(homset)) == len(homset)
        assert all((f.m, f.n) == (m, n) for f in homset)

    def test_deterministic(self):
        assert enumerate_syn(2, 4) == enumerate_syn(2, 4)

    @pytest.mark.parametrize("k", range(1, 7))
    def test_shape_count_is_catalan(self, k):
        assert len(tree_shapes(k)) == catalan(k - 1)


class TestDecompose:
    @pytest.mark.parametrize("m,n", [(m, n) for m in range(4) for n in range(m, 5)])
    def test_every_forest_is_generated(self, m, n):
        for f in enumerate_syn(m, n):
            assert evaluate_term(decompose(f)) == f

    @pytest.mark.parametrize("k", range(5))
    def test_permutation_terms(self, k):
        for images in itertools.permutations(range(k)):
            assert evaluate_term(permutation_term(images)) == permutation(images)

    @given(syn_morphisms(max_m=4, max_extra=4))
    def test_random_forests(self, f):
        assert evaluate_term(decompose(f)) == f


def test_prop_laws_exhaustive_to_three():
    from synprop.checks import SYN, prop_law_tally

    tally = prop_law_tally(SYN, size=3, random_cases=0, seed=0)
    assert tally.failures == {}
    assert tally.cases["interchange"] > 0
