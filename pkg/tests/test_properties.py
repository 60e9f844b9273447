"""Property tests over random hypergraphs and downsets."""
from itertools import combinations
from math import comb

from hypothesis import given, settings, strategies as st

from hyperind.downset import (Downset, corners, downset_cost, downset_lex_compare, downset_of,
                              downset_space, extend, horizontal_distance_vector, i2_of_downset,
                              parse_downset, dumps_downset, realize)
from hyperind.hypergraph import (Hypergraph, count_by_enumeration, count_s_independent,
                                 read_edge_list, write_edge_list)
from hyperind.moves import all_applicable_moves, witness_holds
from hyperind.optimizer import min_cost, optimize
from hyperind.orders import compression_leq, initial_segment, pi_lex_compare
from hyperind.shifting import fully_shift, is_shifted, shift


@st.composite
def hypergraphs(draw, max_n=9, rs=(2, 3, 4)):
    r = draw(st.sampled_from(rs))
    n = draw(st.integers(r, max_n))
    sets = list(combinations(range(n), r))
    edges = draw(st.lists(st.sampled_from(sets), max_size=min(len(sets), 25), unique=True))
    return Hypergraph(n, edges, r=r)


@st.composite
def downsets(draw, lo=4, hi=40):
    n = draw(st.integers(lo, hi))
    hs, prev = [], n - 1
    for i in range(1, n - 1):
        if prev < i + 1 or not draw(st.booleans()):
            break
        h = draw(st.integers(i + 1, prev))
        hs.append(h)
        prev = h
    return Downset(n, hs)


@settings(max_examples=150, deadline=None)
@given(hypergraphs(), st.data())
def test_shift_never_lowers_counts(H, data):
    j = data.draw(st.integers(0, H.n - 2))
    i = data.draw(st.integers(j + 1, H.n - 1))
    G = shift(H, i, j)
    assert len(G) == len(H)
    for s in range(1, H.r + 1):
        assert count_s_independent(G, s) >= count_s_independent(H, s)


@settings(max_examples=100, deadline=None)
@given(hypergraphs(max_n=8, rs=(3,)))
def test_fully_shift_gives_shifted(H):
    F = fully_shift(H)
    assert is_shifted(F) and len(F) == len(H)
    assert fully_shift(F) == F


@settings(max_examples=100, deadline=None)
@given(hypergraphs(max_n=9, rs=(3,)))
def test_downset_determines_i2(H):
    F = fully_shift(H)
    assert count_by_enumeration(F, 2) == i2_of_downset(downset_of(F))


@settings(max_examples=200, deadline=None)
@given(hypergraphs(max_n=10))
def test_fast_counts_match_enumeration(H):
    for s in (1, 2):
        assert count_s_independent(H, s) == count_by_enumeration(H, s)


@settings(max_examples=200, deadline=None)
@given(downsets())
def test_downset_roundtrip_and_structure(D):
    assert parse_downset(dumps_downset(D)) == D
    assert Downset.from_cells(D.n, D.cells()) == D
    cs = corners(D)
    assert all(a[0] < b[0] and a[1] > b[1] for a, b in zip(cs, cs[1:]))
    assert len(horizontal_distance_vector(D)) == max(len(cs) - 1, 0)
    assert downset_cost(D) <= 2 ** D.n - (D.n + 1)
    assert downset_space(D) <= comb(D.n, 3)


@settings(max_examples=100, deadline=None)
@given(downsets(hi=30))
def test_extension_doubles_cost(D):
    E = extend(D, D.n + 1)
    assert downset_cost(E) == 2 * downset_cost(D)
    assert downset_space(E) == downset_space(D)
    assert downset_lex_compare(D, D) == 0


@settings(max_examples=150, deadline=None)
@given(downsets(hi=60))
def test_moves_are_sound(D):
    for mv in all_applicable_moves(D):
        assert witness_holds(D, mv)


@settings(max_examples=60, deadline=None)
@given(downsets(lo=4, hi=12), st.data())
def test_realize_is_shifted_with_downset(D, data):
    if D.size == 0:
        return
    e = data.draw(st.integers(D.size, downset_space(D)))
    H = realize(D, e)
    assert len(H) == e and is_shifted(H) and downset_of(H) == D


@settings(max_examples=100, deadline=None)
@given(st.integers(4, 40), st.data())
def test_optimum_is_monotone_and_consistent(n, data):
    e = data.draw(st.integers(0, comb(n, 3) - 1))
    rec = optimize(n, e)
    assert rec.min_cost <= min_cost(n, e + 1)
    assert downset_space(rec.witness) >= e


@settings(max_examples=100, deadline=None)
@given(st.permutations([1, 2, 3]), st.integers(3, 8), st.data())
def test_initial_segments_nest_and_are_shifted(pi, n, data):
    e = data.draw(st.integers(0, comb(n, 3) - 1))
    A, B = initial_segment(tuple(pi), n, 3, e), initial_segment(tuple(pi), n, 3, e + 1)
    assert A.edges < B.edges
    assert is_shifted(A)
    (new,) = B.edges - A.edges
    assert all(pi_lex_compare(tuple(pi), old, new) == -1 for old in A.edges)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 9), min_size=3, max_size=3, unique=True),
       st.lists(st.integers(0, 9), min_size=3, max_size=3, unique=True))
def test_compression_order_antisymmetric(A, B):
    x, y = compression_leq(A, B), compression_leq(B, A)
    if sorted(A) == sorted(B):
        assert x is True and y is True
    elif x is True:
        assert y is False
    elif x is None:
        assert y is None


@settings(max_examples=80, deadline=None)
@given(hypergraphs(max_n=8))
def test_edge_list_roundtrip(H):
    assert read_edge_list(write_edge_list(H)) == H
