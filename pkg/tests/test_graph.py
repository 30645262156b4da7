import random

import pytest

from jdvtools import Graph, degree_profile, format_edge_list, parse_edge_list

from conftest import make_random_graph


def test_profile_path():
    g = Graph.from_edges(3, [(1, 2), (2, 3)])
    prof = degree_profile(g)
    assert prof.class_sizes == {1: 2, 2: 1}
    assert prof.n0 == 0
    assert prof.m == 2
    assert prof.singles == frozenset({2})
    assert prof.multiples == frozenset({1})


def test_profile_edge_plus_isolated():
    g = Graph.from_edges(3, [(1, 2)])
    prof = degree_profile(g)
    assert prof.class_sizes == {1: 2}
    assert prof.n0 == 1
    assert prof.m == 1


def test_profile_half_graph_h6():
    # H_6 edges enumerated from the i + j > 6 rule, frozen here
    edges = [(1, 6), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)]
    prof = degree_profile(Graph.from_edges(6, edges))
    assert prof.class_sizes == {1: 1, 2: 1, 3: 2, 4: 1, 5: 1}
    assert prof.m == 5
    assert prof.s == 4


def test_rejects_self_loop_and_bad_range():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(2, 2)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 4)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 1)])
    with pytest.raises(ValueError):
        Graph(0, frozenset())


def test_duplicate_and_reversed_edges_collapse():
    g = Graph.from_edges(4, [(1, 2), (2, 1), (1, 2)])
    assert g.edges == frozenset({(1, 2)})


def test_degree_sum_equals_twice_edges():
    rng = random.Random(101)
    for _ in range(200):
        g = make_random_graph(rng, rng.randint(1, 25), rng.uniform(0, 1))
        assert sum(g.degrees()) == 2 * g.edge_count


def test_profile_invariant_under_relabeling():
    rng = random.Random(202)
    for _ in range(100):
        n = rng.randint(2, 15)
        g = make_random_graph(rng, n, rng.uniform(0.1, 0.9))
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        relabeled = Graph.from_edges(n, [(perm[u - 1], perm[v - 1]) for u, v in g.edges])
        assert degree_profile(relabeled) == degree_profile(g)


def test_singles_multiples_inequality():
    # s <= m <= (n + s)/2 whenever there are no isolated vertices
    rng = random.Random(303)
    checked = 0
    for _ in range(300):
        g = make_random_graph(rng, rng.randint(2, 30), rng.uniform(0.2, 0.95))
        prof = degree_profile(g)
        if prof.n0:
            continue
        checked += 1
        assert prof.s <= prof.m
        assert 2 * prof.m <= g.n + prof.s
    assert checked > 50


def test_class_sizes_total():
    rng = random.Random(404)
    for _ in range(100):
        g = make_random_graph(rng, rng.randint(1, 20), rng.uniform(0, 1))
        prof = degree_profile(g)
        assert sum(prof.class_sizes.values()) + prof.n0 == g.n
        assert prof.m == len(prof.singles) + len(prof.multiples)


def test_edge_list_round_trip():
    rng = random.Random(505)
    for _ in range(50):
        g = make_random_graph(rng, rng.randint(1, 12), rng.uniform(0, 1))
        assert parse_edge_list(format_edge_list(g)) == g


def test_edge_list_comments_and_blanks():
    text = "# a comment\n\nn 3\n1 2\n\n# trailing\n2 3\n"
    assert parse_edge_list(text) == Graph.from_edges(3, [(1, 2), (2, 3)])


@pytest.mark.parametrize(
    "text",
    [
        "",
        "3\n1 2\n",
        "n three\n",
        "n 3\n1\n",
        "n 3\n1 x\n",
        "n 3\n1 2 3\n",
    ],
)
def test_edge_list_malformed(text):
    with pytest.raises(ValueError):
        parse_edge_list(text)
