from fractions import Fraction
import itertools
import math

import networkx as nx
import pytest

import ktsp


def nx_tsp(g, s):
    d = dict(nx.all_pairs_shortest_path_length(g))
    first, rest = s[0], s[1:]
    best = None
    for perm in itertools.permutations(rest):
        order = (first,) + perm
        cost = sum(d[order[i]][order[(i + 1) % len(order)]] for i in range(len(order)))
        best = cost if best is None else min(best, cost)
    return best


def test_graph_construction_and_graph6():
    g = ktsp.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.order == 4 and g.size == 3 and not g.weighted
    assert ktsp.parse_graph6(ktsp.encode_graph6(g)).edges == g.edges
    star = ktsp.parse_graph6("D?{")
    assert star.edges == [(0, 4), (1, 4), (2, 4), (3, 4)]


def test_weighted_values_are_fractions():
    g = ktsp.Graph(3, [(0, 1), (1, 2)], [Fraction(5, 2), "1/2"])
    assert g.weighted
    assert ktsp.wiener(g) == Fraction(6)
    value, order = ktsp.tsp_distance(g, [0, 2])
    assert value == 6 and order == [0, 2]


def test_values_match_networkx():
    g = nx.petersen_graph()
    ours = ktsp.Graph(10, list(g.edges()))
    for k in (2, 3, 4):
        total = sum(nx_tsp(g, s) for s in itertools.combinations(range(10), k))
        assert ktsp.tsp_wiener(ours, k) == total
    assert ktsp.wiener(ours) == nx.wiener_index(g)


def test_families_and_closed_forms():
    assert ktsp.tsp_wiener(ktsp.family("clique:8"), 4) == 280
    assert ktsp.tsp_mean(ktsp.family("path:4"), 2) == Fraction(10, 3)
    assert ktsp.wtspk_cycle_exact(9, 4) == ktsp.tsp_wiener(ktsp.family("cycle:9"), 4)
    assert ktsp.mutspk_cycle_asymptotic(4) == Fraction(7, 8)
    assert 2 * ktsp.broom_integral(4) > Fraction(1752, 1000)
    dp = ktsp.family("dp:20,6")
    assert isinstance(dp, ktsp.Digraph)
    assert ktsp.tsp_distance(dp, [13, 14])[0] == 12
    assert ktsp.steiner_distance(dp, [13, 14]) == 8


def test_checkers():
    c5 = ktsp.check_tsp_le_2steiner(ktsp.family("cycle:5"), 4)
    assert c5["holds"] and not c5["equality"]
    triple = ktsp.check_triple(ktsp.family("cycle:6"))
    assert triple["holds"]


def test_estimator_is_deterministic():
    g = ktsp.family("cycle:101")
    a = ktsp.tsp_mean_estimate(g, 4, 20000, 3)
    b = ktsp.tsp_mean_estimate(g, 4, 20000, 3, threads=4)
    assert a == b
    exact = Fraction(ktsp.wtspk_cycle_exact(101, 4), math.comb(101, 4))
    assert abs(float(a["estimate"] - exact)) <= 4 * a["standard_error"]


def test_errors():
    with pytest.raises(ktsp.ParseError):
        ktsp.parse_graph6("A")
    with pytest.raises(ktsp.PreconditionError):
        ktsp.tsp_wiener(ktsp.family("path:4"), 5)
    with pytest.raises(ktsp.Error):
        ktsp.family("broom:7")


def test_cli_report():
    code, doc = ktsp.report("compute", "--family", "cycle:6", "--k", "3", "--wtspk", "--no-timing")
    assert code == 0
    assert doc["results"]["per_k"][0]["wtspk"]["value"] == str(ktsp.wtspk_cycle_exact(6, 3))
