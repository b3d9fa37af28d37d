import itertools

import pytest
from hypothesis import given

from synprop.corel import (
    Corelation,
    corel_compose,
    corel_identity,
    corel_symmetry,
    corel_tensor,
    enumerate_corel,
    is_in_circ,
)
from synprop.errors import ContractError, ResourceLimitError

from .conftest import corelations


def C(m, n, *classes):
    return Corelation.from_classes(m, n, classes)


def closure_compose(r: Corelation, s: Corelation) -> Corelation:
    """Reference composite: reflexive-transitive closure on m + n + p, then restrict."""
    m, n, p = r.m, r.n, s.n
    size = m + n + p
    rel = [[x == y for y in range(size)] for x in range(size)]
    for x, y in itertools.product(range(m + n), repeat=2):
        if r.partition.related(x, y):
            rel[x][y] = True
    for x, y in itertools.product(range(n + p), repeat=2):
        if s.partition.related(x, y):
            rel[m + x][m + y] = True
    for k in range(size):
        for i in range(size):
            if rel[i][k]:
                for j in range(size):
                    if rel[k][j]:
                        rel[i][j] = True
    outer = list(range(m)) + list(range(m + n, size))
    labels = [min(outer.index(y) for y in outer if rel[x][y]) for x in outer]
    return Corelation.from_labels(m, p, labels)


def set_partitions(items):
    """All partitions of a list, by inserting the head into each block or alone."""
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for blocks in set_partitions(rest):
        yield [[head]] + blocks
        for i in range(len(blocks)):
            yield blocks[:i] + [[head] + blocks[i]] + blocks[i + 1:]


class TestCompose:
    def test_disconnected_middle(self):
        r = C(1, 1, [("i", 0), ("o", 0)])
        s = C(1, 1, [("i", 0)], [("o", 0)])
        assert corel_compose(r, s) == s

    @given(corelations())
    def test_identity(self, r):
        assert corel_compose(corel_identity(r.m), r) == r
        assert corel_compose(r, corel_identity(r.n)) == r

    def test_mismatch(self):
        with pytest.raises(ContractError):
            corel_compose(corel_identity(1), corel_identity(2))

    def test_matches_closure_exhaustive(self):
        sides = range(3)
        for m, n, p in itertools.product(sides, repeat=3):
            for r in enumerate_corel(m, n):
                for s in enumerate_corel(n, p):
                    assert corel_compose(r, s) == closure_compose(r, s)

    @given(corelations(max_side=4, n=3), corelations(max_side=4, m=3))
    def test_matches_closure_random(self, r, s):
        assert corel_compose(r, s) == closure_compose(r, s)


class TestTensorAndSymmetry:
    @given(corelations())
    def test_empty_unit(self, r):
        empty = corel_identity(0)
        assert corel_tensor(r, empty) == r == corel_tensor(empty, r)

    def test_swap(self):
        assert corel_symmetry(1, 1) == C(2, 2, [("i", 0), ("o", 1)], [("i", 1), ("o", 0)])

    @pytest.mark.parametrize("p,q", list(itertools.product(range(3), repeat=2)))
    def test_involution(self, p, q):
        both = corel_compose(corel_symmetry(p, q), corel_symmetry(q, p))
        assert both == corel_identity(p + q)

    @given(corelations(), corelations())
    def test_naturality(self, r, s):
        lhs = corel_compose(corel_tensor(r, s), corel_symmetry(r.n, s.n))
        rhs = corel_compose(corel_symmetry(r.m, s.m), corel_tensor(s, r))
        assert lhs == rhs


class TestCirc:
    def test_examples(self):
        assert is_in_circ(C(1, 2, [("i", 0), ("o", 0), ("o", 1)]))
        assert not is_in_circ(C(1, 1, [("i", 0)], [("o", 0)]))
        assert not is_in_circ(C(2, 1, [("i", 0), ("i", 1), ("o", 0)]))

    def test_closed_under_operations(self):
        circ = {k: [r for r in enumerate_corel(*k) if is_in_circ(r)]
                for k in itertools.product(range(3), repeat=2)}
        for (m, n), rs in circ.items():
            for r in rs:
                for p in range(3):
                    for s in circ[(n, p)]:
                        assert is_in_circ(corel_compose(r, s))
                for (m2, n2) in circ:
                    for s in circ[(m2, n2)]:
                        assert is_in_circ(corel_tensor(r, s))


class TestEnumerate:
    @pytest.mark.parametrize("m,n,count", [(1, 1, 2), (2, 1, 5), (0, 0, 1)])
    def test_examples(self, m, n, count):
        assert len(enumerate_corel(m, n)) == count

    @pytest.mark.parametrize("m,n", [(m, n) for m in range(4) for n in range(4)])
    def test_equals_independent_generator(self, m, n):
        listed = enumerate_corel(m, n)
        assert len(set(listed)) == len(listed)
        expected = set()
        for blocks in set_partitions(list(range(m + n))):
            labels = [0] * (m + n)
            for c, block in enumerate(blocks):
                for x in block:
                    labels[x] = c
            expected.add(Corelation.from_labels(m, n, labels))
        assert set(listed) == expected

    def test_bound(self):
        with pytest.raises(ResourceLimitError):
            enumerate_corel(6, 5)
        with pytest.raises(ResourceLimitError):
            enumerate_corel(2, 2, bound=3)

    def test_env_bound(self, monkeypatch):
        monkeypatch.setenv("SYNPROP_MAX_BOUNDARY", "2")
        with pytest.raises(ResourceLimitError):
            enumerate_corel(2, 1)
