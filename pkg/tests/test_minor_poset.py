from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from conftest import ambients, brute_delta, brute_gamma
from schubert_trace.errors import InputError
from schubert_trace.minor_poset import (
    Ambient,
    BiMinor,
    SchubertIndex,
    count_bi_interval,
    count_increasing,
    count_schubert_interval,
    enumerate_bi_interval,
    enumerate_schubert_interval,
    increasing_tuples,
    leq_bi,
    leq_schubert,
    meet_join,
    multidegree,
    top_index,
)


def S(cols, m, n):
    return SchubertIndex(tuple(cols), Ambient(m, n))


def D(rows, cols, m, n):
    return BiMinor(tuple(rows), tuple(cols), Ambient(m, n))


class TestConstruction:
    @pytest.mark.parametrize("m,n", [(0, 3), (2, 0), (-1, 4)])
    def test_bad_ambient(self, m, n):
        with pytest.raises(InputError):
            Ambient(m, n)

    @pytest.mark.parametrize(
        "cols",
        [(4, 1, 7), (1, 1, 7), (0, 4, 7), (1, 4, 9), (1, 4)],
    )
    def test_rejects_bad_index(self, cols):
        with pytest.raises(InputError):
            S(cols, 3, 8)

    def test_schubert_needs_m_le_n(self):
        with pytest.raises(InputError):
            S((1, 2, 3), 3, 2)
        with pytest.raises(InputError):
            enumerate_schubert_interval(Ambient(3, 2))

    def test_bi_minor_validation(self):
        with pytest.raises(InputError):
            D((1, 2), (1,), 3, 3)
        with pytest.raises(InputError):
            D((2, 1), (1, 2), 3, 3)
        with pytest.raises(InputError):
            D((1, 4), (1, 2), 3, 3)
        with pytest.raises(InputError):
            D((), (), 3, 3)

    def test_rendering(self):
        assert str(S((1, 4, 7), 3, 8)) == "[1 4 7]"
        assert str(D((1, 3), (1, 4), 3, 5)) == "[1 3 | 1 4]"
        assert D((1, 3), (4, 5), 3, 5).compact() == "[1 3|4 5]"

    def test_sentinel(self):
        g = S((1, 4, 7), 3, 8)
        assert g.a(1) == 1 and g.a(3) == 7 and g.a(4) == 9


class TestOrders:
    def test_examples(self):
        assert leq_schubert(S((1, 4, 7), 3, 8), S((1, 4, 7), 3, 8))
        assert leq_schubert(S((1, 4, 7), 3, 8), S((4, 5, 7), 3, 8))
        assert not leq_schubert(S((4, 5, 7), 3, 8), S((1, 4, 7), 3, 8))
        assert leq_schubert(S((1, 3, 7, 8), 4, 8), S((1, 4, 7, 8), 4, 8))

    def test_ambient_mismatch(self):
        with pytest.raises(InputError):
            leq_schubert(S((1, 2), 2, 4), S((1, 2), 2, 5))
        with pytest.raises(InputError):
            meet_join(S((1, 2), 2, 4), S((1, 2), 2, 5))
        with pytest.raises(InputError):
            leq_bi(D((1,), (1,), 2, 2), D((1,), (1,), 2, 3))

    def test_meet_join_example(self):
        lo, hi = meet_join(S((3, 4, 7), 3, 8), S((1, 5, 8), 3, 8))
        assert lo.cols == (1, 4, 7) and hi.cols == (3, 5, 8)
        x = S((2, 5, 6), 3, 8)
        assert meet_join(x, x) == (x, x)

    def test_leq_bi_examples(self):
        assert leq_bi(D((1, 3), (1, 4), 3, 5), D((3,), (1,), 3, 5))
        a = D((1, 3), (1, 4), 3, 5)
        assert leq_bi(a, a)
        assert not leq_bi(D((1,), (1,), 2, 2), D((1, 2), (1, 2), 2, 2))

    @pytest.mark.parametrize("m,n", list(ambients(3, 7)))
    def test_schubert_partial_order_exhaustive(self, m, n):
        G = brute_gamma(m, n)
        for x in G:
            assert leq_schubert(x, x)
            for y in G:
                if leq_schubert(x, y) and leq_schubert(y, x):
                    assert x == y
        for x in G:
            ups = [y for y in G if leq_schubert(x, y)]
            for y in ups:
                for z in G:
                    if leq_schubert(y, z):
                        assert leq_schubert(x, z)

    @pytest.mark.parametrize("m,n", list(ambients(3, 3, schubert=False)))
    def test_bi_partial_order_exhaustive(self, m, n):
        P = brute_delta(m, n)
        for x in P:
            assert leq_bi(x, x)
            for y in P:
                if leq_bi(x, y) and leq_bi(y, x):
                    assert x == y
                if leq_bi(x, y):
                    for z in P:
                        if leq_bi(y, z):
                            assert leq_bi(x, z)

    @pytest.mark.parametrize("m,n", list(ambients(3, 7)))
    def test_meet_join_are_glb_lub(self, m, n):
        G = brute_gamma(m, n)
        for x in G:
            for y in G:
                lo, hi = meet_join(x, y)
                lower = [z for z in G if leq_schubert(z, x) and leq_schubert(z, y)]
                upper = [z for z in G if leq_schubert(x, z) and leq_schubert(y, z)]
                assert lo in lower and all(leq_schubert(z, lo) for z in lower)
                assert hi in upper and all(leq_schubert(hi, z) for z in upper)


@st.composite
def schubert_triples(draw):
    n = draw(st.integers(1, 10))
    m = draw(st.integers(1, n))
    A = Ambient(m, n)
    pick = st.lists(st.integers(1, n), min_size=m, max_size=m, unique=True).map(sorted)
    return [SchubertIndex(tuple(draw(pick)), A) for _ in range(3)]


@settings(max_examples=300, deadline=None)
@given(schubert_triples())
def test_lattice_laws(xyz):
    x, y, z = xyz
    meet = lambda a, b: meet_join(a, b)[0]  # noqa: E731
    join = lambda a, b: meet_join(a, b)[1]  # noqa: E731
    assert meet(x, y) == meet(y, x) and join(x, y) == join(y, x)
    assert meet(meet(x, y), z) == meet(x, meet(y, z))
    assert join(join(x, y), z) == join(x, join(y, z))
    assert meet(x, join(x, y)) == x and join(x, meet(x, y)) == x
    # distributivity
    assert meet(x, join(y, z)) == join(meet(x, y), meet(x, z))


class TestMultidegree:
    def test_example(self):
        assert multidegree(S((1, 4, 7), 3, 8)) == (1, 0, 0, 1, 0, 0, 1, 0)

    @pytest.mark.parametrize("m,n", list(ambients(3, 7)))
    def test_injective_and_lattice_identity(self, m, n):
        G = brute_gamma(m, n)
        degs = [multidegree(x) for x in G]
        assert len(set(degs)) == len(G)
        assert all(sum(d) == m for d in degs)
        for x in G:
            for y in G:
                lo, hi = meet_join(x, y)
                lhs = [a + b for a, b in zip(multidegree(x), multidegree(y))]
                rhs = [a + b for a, b in zip(multidegree(hi), multidegree(lo))]
                assert lhs == rhs


class TestEnumeration:
    def test_counts(self):
        assert len(enumerate_schubert_interval(Ambient(3, 5))) == 10
        assert len(enumerate_bi_interval(Ambient(1, 1))) == 1
        assert len(enumerate_bi_interval(Ambient(2, 2))) == 5

    def test_filtered_example(self):
        got = [x.cols for x in enumerate_schubert_interval(Ambient(2, 4), S((1, 3), 2, 4))]
        assert got == [(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]

    def test_top_singleton(self):
        A = Ambient(3, 6)
        assert enumerate_schubert_interval(A, top_index(A)) == [top_index(A)]

    @pytest.mark.parametrize("m,n", list(ambients(4, 8)))
    def test_interval_matches_filter(self, m, n):
        G = brute_gamma(m, n)
        assert enumerate_schubert_interval(Ambient(m, n)) == G  # lexicographic
        assert count_schubert_interval(Ambient(m, n)) == comb(n, m)
        for g in G[:: max(1, len(G) // 12)]:
            want = [x for x in G if leq_schubert(g, x)]
            got = enumerate_schubert_interval(Ambient(m, n), g)
            assert got == want
            assert count_schubert_interval(Ambient(m, n), g) == len(want)

    @pytest.mark.parametrize("m,n", list(ambients(3, 7)))
    def test_interval_closed_under_meet_join(self, m, n):
        for g in brute_gamma(m, n):
            I = enumerate_schubert_interval(Ambient(m, n), g)
            Iset = set(I)
            for x in I:
                for y in I:
                    lo, hi = meet_join(x, y)
                    assert lo in Iset and hi in Iset

    @pytest.mark.parametrize("m,n", list(ambients(4, 4, schubert=False)))
    def test_bi_interval_matches_filter(self, m, n):
        P = brute_delta(m, n)
        full = enumerate_bi_interval(Ambient(m, n))
        assert sorted(P, key=lambda x: x.sort_key()) == full
        assert len(full) == sum(comb(m, r) * comb(n, r) for r in range(1, min(m, n) + 1))
        for d in P:
            want = sorted((x for x in P if leq_bi(d, x)), key=lambda x: x.sort_key())
            assert enumerate_bi_interval(Ambient(m, n), d) == want
            assert count_bi_interval(Ambient(m, n), d) == len(want)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 6), st.integers(0, 10), st.data())
def test_count_increasing_matches_enumeration(length, upper, data):
    lower = data.draw(st.lists(st.integers(1, max(1, upper)), max_size=length))
    got = count_increasing(length, upper, lower)
    want = sum(
        1
        for c in combinations(range(1, upper + 1), length)
        if all(c[i] >= lower[i] for i in range(len(lower)))
    )
    assert got == want
    assert len(list(increasing_tuples(length, upper, lower))) == want
