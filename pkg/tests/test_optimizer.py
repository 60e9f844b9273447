from itertools import combinations
from math import comb

import pytest

from hyperind.downset import (Downset, all_cells, downset_cost, downset_lex_compare,
                              downset_space, lex_initial_downset, lex_key)
from hyperind.hypergraph import Hypergraph, count_s_independent
from hyperind.optimizer import (EXCEPTIONS_COMPUTED, EXCEPTIONS_REFERENCE, InfeasibleError,
                                brute_force_records, classify, conjecture_check, conjecture_perm,
                                enumerate_downsets, enumerate_shifted, min_cost, optimize, pareto,
                                pruned_records, reproduce_table, table_row, verify_main_theorem)
from hyperind.orders import initial_segment
from hyperind.shifting import is_shifted


def test_enumerate_downsets_counts_and_order():
    assert [len(list(enumerate_downsets(n))) for n in (3, 4, 5)] == [2, 4, 8]
    for n in range(4, 13):
        ds = list(enumerate_downsets(n))
        assert len(ds) == 2 ** (n - 2) == len(set(ds))
        assert ds == sorted(ds, key=lex_key)
        assert ds[0] == Downset.full(n) and ds[-1] == Downset.empty(n)
    with pytest.raises(ValueError):
        list(enumerate_downsets(17))


def test_optimize_examples():
    rec = optimize(7, 10)
    assert (rec.min_cost, rec.witness.heights) == (104, (4, 4, 4))
    assert rec.classification == "transient-exception" and rec.shadow_description == "K_5"
    assert rec.i2 == 24
    for n in (5, 9, 20):
        r0 = optimize(n, 0)
        assert r0.min_cost == 0 and r0.witness == Downset.empty(n)
    r1 = optimize(7, 1)
    assert r1.witness == Downset.from_cells(7, [(1, 2)]) and r1.min_cost == 64


def test_optimize_guards():
    with pytest.raises(InfeasibleError) as info:
        optimize(7, 36)
    assert info.value.record.witness == Downset.full(7)
    with pytest.raises(ValueError):
        optimize(7, -1)
    with pytest.raises(ValueError):
        optimize(61, 3)


@pytest.mark.parametrize("n", range(4, 11))
def test_dp_matches_oracle(n):
    oracle = brute_force_records(n)
    for rec, (c, D) in zip(pareto(n).entries, oracle):
        assert (rec.min_cost, rec.witness) == (c, D)
        assert optimize(n, rec.e).witness == D


@pytest.mark.parametrize("n", range(4, 12))
def test_pruned_scan_matches_oracle(n):
    assert pruned_records(n) == brute_force_records(n)


def test_pareto_invariants():
    for n in (6, 15, 33):
        entries = pareto(n).entries
        assert len(entries) == comb(n, 3) + 1
        costs = [r.min_cost for r in entries]
        assert costs == sorted(costs)
        for r in entries:
            assert downset_space(r.witness) >= r.e
            assert downset_cost(r.witness) == r.min_cost == min_cost(n, r.e)


def test_witness_is_lex_earliest_among_equal_cost():
    n = 9
    ds = list(enumerate_downsets(n))
    for rec in pareto(n).entries[::7]:
        rivals = [D for D in ds if downset_space(D) >= rec.e and downset_cost(D) == rec.min_cost]
        assert all(downset_lex_compare(rec.witness, D) <= 0 for D in rivals)


def test_classify_examples():
    assert classify(lex_initial_downset(9, 11)) == "lex-style-full"
    assert classify(Downset(9, (8, 8, 7, 5))) == "lex-style-missing-one"
    assert classify(Downset(7, (4, 4, 4))) == "transient-exception"
    for n in (10, 20, 40):
        assert classify(Downset.from_counts(n, (2, 1))) == "persistent-exception"
    assert classify(Downset(40, (4, 4, 4))) == "other"


def test_ties_are_reported():
    rec = optimize(9, 5)
    assert rec.classification == "lex-style-full" and rec.tie_with_full


def test_reproduce_table_examples():
    assert set(table_row(7).found) == {"K_5"}
    assert set(table_row(10).found) == {"K_9"}
    assert table_row(13).found == {} and table_row(13).match
    with pytest.raises(ValueError):
        reproduce_table(6, 9)


def test_computed_catalogue_matches_everywhere():
    rows = reproduce_table(7, 31, EXCEPTIONS_COMPUTED)
    assert all(r.match for r in rows)


def test_reference_catalogue_differs_at_11_and_12():
    bad = {r.n: (r.missing, r.extra) for r in reproduce_table(7, 31) if not r.match}
    assert bad == {11: (["K_11 − K_{1,9}"], ["K_11 − K_{1,8}"]),
                   12: (["K_11"], ["K_11 − e"])}
    assert {k: v for k, v in EXCEPTIONS_REFERENCE.items() if k not in (11, 12)} == \
        {k: v for k, v in EXCEPTIONS_COMPUTED.items() if k not in (11, 12)}


def test_main_theorem_guard_and_pass():
    assert verify_main_theorem(32).passed
    with pytest.raises(ValueError):
        verify_main_theorem(31)


def _shifted_by_brute_force(n, r):
    sets = list(combinations(range(n), r))
    out = []
    for mask in range(1 << len(sets)):
        H = Hypergraph(n, [s for k, s in enumerate(sets) if mask >> k & 1], r=r)
        if is_shifted(H):
            out.append(H.edges)
    return out


def test_enumerate_shifted():
    for n in (3, 4, 5):
        found = [H.edges for H in enumerate_shifted(n, 3)]
        assert len(found) == len(set(found))
        assert set(found) == set(_shifted_by_brute_force(n, 3))
    assert [sum(1 for _ in enumerate_shifted(n, 3)) for n in range(3, 8)] == [2, 5, 16, 66, 352]
    assert all(len(H) == 4 for H in enumerate_shifted(6, 3, 4))


def test_conjecture_check():
    assert conjecture_perm(3, 2) == (2, 3, 1)
    for n, e in ((6, 5), (7, 12)):
        rep = conjecture_check(3, 3, n, e)
        assert rep.best == count_s_independent(initial_segment((1, 2, 3), n, 3, e), 3)
        rep = conjecture_check(3, 1, n, e)
        assert rep.best == count_s_independent(initial_segment((3, 2, 1), n, 3, e), 1)
    with pytest.raises(ValueError):
        conjecture_check(5, 2, 7, 3)
