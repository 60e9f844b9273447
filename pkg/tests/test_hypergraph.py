from itertools import combinations

import pytest

from hyperind.hypergraph import (Graph, Hypergraph, build_named_graph, complete_hypergraph,
                                 count_by_enumeration, count_graph_independent,
                                 count_s_independent, describe_graph, graphs_match,
                                 read_edge_list, shadow2, triangle_count, triangle_hypergraph,
                                 write_edge_list)
from hyperind.orders import lex_graph


def test_count_examples():
    assert count_s_independent(Hypergraph(3, [], r=3), 2) == 8
    assert count_s_independent(complete_hypergraph(7, 3), 2) == 8
    assert count_s_independent(Hypergraph(3, [(0, 1, 2)]), 2) == 4


def test_complete_hypergraph_identity():
    for n in range(3, 12):
        assert count_s_independent(complete_hypergraph(n, 3), 2) == n + 1
        assert count_s_independent(complete_hypergraph(n, 3), 2, method="enumerate") == n + 1


def test_count_rejects_bad_s():
    with pytest.raises(ValueError):
        count_s_independent(complete_hypergraph(5, 3), 4)
    with pytest.raises(ValueError):
        count_s_independent(complete_hypergraph(5, 3), 0)
    with pytest.raises(ValueError):
        count_s_independent(complete_hypergraph(5, 3), 2, method="magic")


def test_enumeration_guard():
    with pytest.raises(ValueError):
        count_by_enumeration(Hypergraph(31, [(0, 1, 2)]), 3)


def test_graph_counts():
    assert count_graph_independent(build_named_graph("K_{3,3}")) == 15
    assert count_graph_independent(Graph(9)) == 512
    assert count_graph_independent(build_named_graph("K_5 ∪ E_2")) == 24


def test_graph_counter_matches_enumeration(rng):
    for _ in range(200):
        n = rng.randint(1, 12)
        pairs = list(combinations(range(n), 2))
        G = Graph(n, rng.sample(pairs, rng.randint(0, len(pairs))))
        assert count_graph_independent(G) == count_by_enumeration(G.as_hypergraph(), 2)


def test_shadow2_examples():
    assert shadow2(Hypergraph(3, [(0, 1, 2)])).edges == {(0, 1), (0, 2), (1, 2)}
    K = shadow2(complete_hypergraph(5, 3))
    assert K.edges == set(combinations(range(5), 2))
    G = shadow2(Hypergraph(4, [(0, 1, 2), (0, 1, 3)]))
    assert G.edges == {(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)}


def test_triangles():
    assert triangle_count(build_named_graph("K_4")) == 4
    assert triangle_count(build_named_graph("K_{3,3}")) == 0
    assert triangle_count(lex_graph(5, 7)) == 3
    assert triangle_hypergraph(build_named_graph("K_4")).edges == set(combinations(range(4), 3))
    assert not triangle_hypergraph(build_named_graph("K_{3,3}")).edges
    assert len(triangle_hypergraph(build_named_graph("K_5 − e")).edges) == 7


def test_named_graphs():
    assert graphs_match(build_named_graph("K_3 ∨ E_1"), build_named_graph("K_4"))
    G = build_named_graph("K_2 ∨ E_3")
    assert (G.n, len(G.edges)) == (5, 7)
    G = build_named_graph("K_9 − K_{1,6}")
    assert G.n == 9 and len(G.edges) == 36 - 6
    assert sorted(G.degrees())[0] == 2
    assert build_named_graph("E_{n-5}", 10).n == 5
    assert build_named_graph("(K_2 ∨ E_{n-5}) ∪ E_2", 10).n == 9


def test_named_graph_syntax_variants():
    a = build_named_graph("(K_3 v E_2) U E_1")
    b = build_named_graph(r"(K_3 \vee E_2) \cup E_1")
    c = build_named_graph("(K_3 * E_2) + E_1")
    assert a == b == c


def test_named_graph_errors():
    for bad in ("K_", "K_3 ∨", "Q_3", "K_3 − K_{1,5}", "(K_3"):
        with pytest.raises(ValueError):
            build_named_graph(bad)


def test_describe_graph_roundtrip():
    for expr in ("K_5", "K_13 − e", "K_11 − K_{1,8}", "K_3 ∨ E_4", "K_9 − K_{1,6}"):
        assert describe_graph(build_named_graph(expr), with_isolated=False) == expr
    assert describe_graph(build_named_graph("K_5 ∪ E_2")) == "K_5 ∪ E_2"


def test_edge_list_roundtrip():
    H = complete_hypergraph(6, 3)
    assert read_edge_list(write_edge_list(H)) == H
    assert read_edge_list("# comment\n4 2\n0 1\n2 3  # tail\n").edges == {(0, 1), (2, 3)}
    for bad in ("", "4\n0 1", "4 2\n0 1 2", "4 2\n1 0", "4 2\n0 9"):
        with pytest.raises(ValueError):
            read_edge_list(bad)


def test_hypergraph_validation():
    with pytest.raises(ValueError):
        Hypergraph(3, [(0, 0, 1)])
    with pytest.raises(ValueError):
        Hypergraph(3, [(0, 1, 3)])
    with pytest.raises(ValueError):
        Hypergraph(4, [(0, 1), (0, 1, 2)], r=3)
    assert Hypergraph(4, [(0, 1), (0, 1, 2)]).r is None
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
