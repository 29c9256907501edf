import json
import random

import pytest

from qdgg.fibonacci import fib_graphs
from qdgg.graded_graph import (
    LinearCombination,
    QDGGPair,
    VertexRef,
    WeightedGradedGraph,
    brute_force_path_gf,
    check_mixed_all,
    check_path_product_identity,
    check_specialization,
    format_combination,
    mixed_path_gf,
    pair_from_json,
    pair_to_dict,
    pair_to_json,
    pairing,
    path_gf,
    path_gf_table,
    path_weight,
    specialize,
    verify_qweyl,
)
from qdgg.permutations import perm_graphs
from qdgg.qpoly import ONE, Q, QPoly, ZERO, q_factorial, q_integer, q_power


def small_fib():
    # the r = 1 word pair up to height 3, built explicitly
    return fib_graphs(1, 3)


def test_linear_combination_basics():
    x = LinearCombination(2, {0: ONE, 1: Q})
    assert x.coefficient(0) == ONE
    assert x.coefficient(5) == ZERO
    assert (x + x).coefficient(1) == Q * 2
    assert x.scale(Q).coefficient(1) == Q * Q
    assert LinearCombination(2, {0: ZERO}).is_zero
    assert x - x == LinearCombination(2)
    with pytest.raises(ValueError):
        x + LinearCombination(1, {0: ONE})


def test_unit_and_pairing():
    v = VertexRef(1, 0)
    x = LinearCombination.unit(1, 0)
    assert pairing(x, v) == ONE
    assert pairing(x, VertexRef(1, 3)) == ZERO
    assert pairing(x.scale(ONE + Q), v) == ONE + Q
    with pytest.raises(ValueError):
        pairing(x, VertexRef(2, 0))


def test_apply_up_examples():
    pair = small_fib()
    up = pair.gamma.apply_up(pair.unit("1"))
    assert up == LinearCombination(2, {pair.vertex("11").index: ONE, pair.vertex("2").index: Q})
    assert pair.gamma.apply_up(LinearCombination(1)).is_zero
    up0 = pair.gamma.apply_up(pair.unit(""))
    assert up0 == LinearCombination(1, {0: ONE})


def test_apply_down_examples():
    pair = small_fib()
    d2 = pair.gamma_prime.apply_down(pair.unit("2"))
    assert d2 == LinearCombination(1, {0: ONE})
    d11 = pair.gamma_prime.apply_down(pair.unit("11"))
    assert d11 == LinearCombination(1, {0: ONE})
    assert pair.gamma_prime.apply_down(LinearCombination(2)).is_zero


def test_apply_range_errors():
    pair = small_fib()
    with pytest.raises(ValueError):
        pair.gamma.apply_up(LinearCombination.unit(3, 0))
    with pytest.raises(ValueError):
        pair.gamma_prime.apply_down(LinearCombination.unit(0, 0))


def test_graph_validation():
    levels = [["a"], ["b", "c"]]
    with pytest.raises(ValueError):
        WeightedGradedGraph(levels, [[(0, 0, ZERO)]])
    with pytest.raises(ValueError):
        WeightedGradedGraph(levels, [[(0, 0, QPoly([-1]))]])
    with pytest.raises(ValueError):
        WeightedGradedGraph(levels, [[(0, 0, ONE), (0, 0, Q)]])
    with pytest.raises(ValueError):
        WeightedGradedGraph(levels, [[(0, 2, ONE)]])
    with pytest.raises(ValueError):
        WeightedGradedGraph(levels, [])
    with pytest.raises(ValueError):
        QDGGPair.build(levels, [[]], [[]], 0)
    with pytest.raises(ValueError):
        QDGGPair.build([["a", "a"]], [], [], 1)


def test_pair_requires_shared_levels():
    g1 = WeightedGradedGraph([["a"], ["b"]], [[(0, 0, ONE)]])
    g2 = WeightedGradedGraph([["a"], ["x"]], [[(0, 0, ONE)]])
    with pytest.raises(ValueError):
        QDGGPair(g1, g2, 1)


def test_adjointness_on_edges():
    pair = fib_graphs(1, 5)
    g = pair.gamma
    for i in range(g.height):
        for src, dst, w in g.edges(i):
            up = g.apply_up(LinearCombination.unit(i, src))
            down = g.apply_down(LinearCombination.unit(i + 1, dst))
            assert up.coefficient(dst) == w
            assert down.coefficient(src) == w


def test_adjointness_bilinear_random():
    pair = fib_graphs(1, 5)
    g = pair.gamma
    rng = random.Random(7)
    for _ in range(25):
        i = rng.randrange(g.height)
        x = LinearCombination(
            i, {k: QPoly([rng.randint(-3, 3) for _ in range(3)]) for k in range(g.level_size(i))}
        )
        y = LinearCombination(
            i + 1,
            {k: QPoly([rng.randint(-3, 3) for _ in range(3)]) for k in range(g.level_size(i + 1))},
        )
        lhs = ZERO
        for k, c in g.apply_up(x).items():
            lhs = lhs + c * y.coefficient(k)
        rhs = ZERO
        for k, c in g.apply_down(y).items():
            rhs = rhs + c * x.coefficient(k)
        assert lhs == rhs


def test_verify_qweyl_passes_and_validates_range():
    pair = small_fib()
    assert verify_qweyl(pair, 2).passed
    assert verify_qweyl(pair, -1).passed  # vacuous
    with pytest.raises(ValueError):
        verify_qweyl(pair, 3)


def test_verify_qweyl_mutation_fails_at_affected_vertices():
    pair = small_fib()
    # multiply the gamma edge ("1" -> "2") by q and rebuild
    d = pair_to_dict(pair)
    src = pair.vertex("1", 1).index
    dst = pair.vertex("2", 2).index
    for edge in d["gamma_edges"][1]:
        if edge[0] == src and edge[1] == dst:
            edge[2] = [0] + edge[2]
    from qdgg.graded_graph import pair_from_dict

    mutated = pair_from_dict(d)
    report = verify_qweyl(mutated, 2)
    assert not report.passed
    failing = {
        row.where.split("'")[1]
        for row in report.failures
        if row.where.startswith("vertex")
    }
    # the source vertex, plus everything it reaches by a gamma_prime up edge
    expected = {"1"} | {
        mutated.levels[2][t]
        for s, t, _ in mutated.gamma_prime.edges(1)
        if s == src
    }
    assert failing == expected


def test_path_gf_examples(perm_h7):
    pair = small_fib()
    assert path_gf(pair.gamma, pair.vertex("")) == ONE
    assert path_gf(pair.gamma, pair.vertex("2")) == Q
    assert path_gf(perm_h7.gamma, perm_h7.vertex("4123")) == q_power(3)


def test_path_gf_requires_unique_minimum():
    g = WeightedGradedGraph([["a", "b"], ["c"]], [[(0, 0, ONE)]])
    with pytest.raises(ValueError):
        path_gf_table(g)


def test_path_gf_against_brute_force():
    for pair in (fib_graphs(1, 4), fib_graphs(2, 4), perm_graphs(4)):
        for graph in (pair.gamma, pair.gamma_prime):
            table = path_gf_table(graph)
            for level in range(graph.height + 1):
                for idx in range(graph.level_size(level)):
                    assert table[level][idx] == brute_force_path_gf(graph, VertexRef(level, idx))


def test_path_counts_at_one():
    pair = fib_graphs(1, 5)
    table = path_gf_table(pair.gamma)
    from qdgg.graded_graph import enumerate_paths

    for level in range(6):
        for idx in range(len(pair.levels[level])):
            count = len(enumerate_paths(pair.gamma, VertexRef(level, idx)))
            poly = table[level][idx]
            assert all(c >= 0 for c in poly.coeffs)
            assert poly.evaluate(1) == count


def test_path_weight_helper():
    pair = small_fib()
    refs = pair.path_refs(["", "1", "2"])
    assert path_weight(pair.gamma, refs) == Q
    with pytest.raises(ValueError):
        path_weight(pair.gamma, pair.path_refs(["", "1"]) + [pair.vertex("11")][::-1] * 2)
    with pytest.raises(ValueError):
        path_weight(pair.gamma, [pair.vertex(""), pair.vertex("2")])


def test_path_product_identity(perm_h7, fib2_h7):
    rep = check_path_product_identity(perm_h7, 3)
    assert rep.passed
    assert rep.rows[0].actual == str(q_factorial(3))
    assert check_path_product_identity(perm_h7, 0).passed
    rep2 = check_path_product_identity(fib2_h7, 3)
    assert rep2.passed
    assert rep2.rows[0].expected == str(q_factorial(3) * 8)


def test_mixed_path_gf_examples(perm_h7):
    value, rep = mixed_path_gf(perm_h7, perm_h7.vertex("1"), 2)
    assert rep.passed
    assert value == ONE + Q
    # n = m: reduces to the plain path gf
    v = perm_h7.vertex("312")
    value, rep = mixed_path_gf(perm_h7, v, 3)
    assert rep.passed
    assert value == path_gf(perm_h7.gamma, v)
    # w = minimum: the full factorial
    value, rep = mixed_path_gf(perm_h7, perm_h7.vertex(""), 3)
    assert rep.passed
    assert value == q_factorial(3)
    with pytest.raises(ValueError):
        mixed_path_gf(perm_h7, perm_h7.vertex("312"), 2)


def test_check_mixed_all(fib2_h7):
    assert check_mixed_all(fib2_h7, 4).passed


def test_specialize_and_check():
    pair = fib_graphs(1, 5)
    g1 = specialize(pair.gamma, 1)
    assert g1.up[1][pair.gamma.edges(1).index((0, 1, Q))][2] == 1
    assert check_specialization(pair, 1, 4).passed
    assert check_specialization(pair, -1, 4).passed
    weights = {w for group in specialize(pair.gamma, -1).up for _, _, w in group}
    assert weights <= {1, -1}


def test_json_round_trip_bit_exact():
    pair = fib_graphs(2, 4)
    text = pair_to_json(pair)
    again = pair_to_json(pair_from_json(text))
    assert text == again
    data = json.loads(text)
    assert data["r"] == 2
    assert data["height"] == 4
    assert [len(l) for l in data["levels"]] == [1, 2, 5, 12, 29]


def test_pair_from_dict_validates_height():
    pair = fib_graphs(1, 2)
    d = pair_to_dict(pair)
    d["height"] = 5
    from qdgg.graded_graph import pair_from_dict

    with pytest.raises(ValueError):
        pair_from_dict(d)


def test_format_combination():
    pair = small_fib()
    x = LinearCombination(2, {0: ONE + Q, 1: ONE})
    assert format_combination(pair, x) == "(1 + q)*'11' + '2'"
    assert format_combination(pair, LinearCombination(2)) == "0"


def test_vertex_lookup():
    pair = small_fib()
    assert pair.key_of(pair.vertex("21", 3)) == "21"
    with pytest.raises(KeyError):
        pair.vertex("nope")
    with pytest.raises(KeyError):
        pair.vertex("21", 2)
