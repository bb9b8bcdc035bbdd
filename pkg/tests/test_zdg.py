from itertools import combinations

import pytest
import sympy

from zdgraph.errors import CapExceeded, RingError
from zdgraph.graph import Graph, complete_graph, find_induced_embedding, induced_subgraph, matching_graph, path_graph
from zdgraph.rings import (
    BooleanRing,
    GaloisField,
    ModularRing,
    MonomialQuotientRing,
    ProductRing,
    fixture_descriptor,
    localex_ring,
    make_ring,
)
from zdgraph.threshold import ThresholdCertificate, is_threshold, recognize_threshold
from zdgraph.zdg import (
    ann_threshold_conditions,
    check_pair,
    classify_nonlocal_threshold,
    f2_times_field,
    is_complete_graph_check,
    is_star,
    principal_local_threshold_check,
    zero_divisor_graph,
)


def brute_zdg(R):
    """Oracle: annihilator scan for zero-divisors, pairwise products for edges."""
    elems = list(R.elements())
    zds = [a for a in elems if a != R.zero and any(R.mul(a, b) == R.zero for b in elems if b != R.zero)]
    edges = [(i, j) for i, j in combinations(range(len(zds)), 2) if R.mul(zds[i], zds[j]) == R.zero]
    return zds, Graph.from_edges(len(zds), edges)


RINGS = [
    ModularRing(4),
    ModularRing(6),
    ModularRing(36),
    BooleanRing(4),
    ProductRing([GaloisField(2), GaloisField(5)]),
    ProductRing([ModularRing(2), ModularRing(4)]),
    localex_ring(),
    MonomialQuotientRing(3, ["x", "y"], [[2, 0], [0, 2], [1, 1]]),
]


@pytest.mark.parametrize("R", RINGS, ids=repr)
def test_zero_divisor_graph_matches_oracle(R):
    lg = zero_divisor_graph(R)
    zds, g = brute_zdg(R)
    assert list(lg.elements) == zds
    assert lg.graph == g
    assert len(set(lg.labels)) == len(lg.labels)


def test_z6_is_p3():
    lg = zero_divisor_graph(ModularRing(6))
    assert lg.labels == ("2", "3", "4")
    assert lg.graph.edges() == [(0, 1), (1, 2)]


def test_z4_single_isolated_vertex():
    lg = zero_divisor_graph(ModularRing(4))
    assert lg.labels == ("2",) and lg.graph.edge_count == 0


def test_f2xf5_is_star_centred_at_1_0():
    lg = zero_divisor_graph(make_ring(fixture_descriptor("f2xf5")))
    centre = lg.vertex_of("(1,0)")
    assert lg.graph.degree(centre) == 4
    leaves = [v for v in range(lg.graph.n) if v != centre]
    assert sorted(lg.labels[v] for v in leaves) == ["(0,1)", "(0,2)", "(0,3)", "(0,4)"]
    assert is_star(lg.graph)


def test_localex_induced_subgraphs():
    lg = zero_divisor_graph(localex_ring())
    vs = [lg.vertex_of(t) for t in ("x", "z", "x+y", "x+y+2")]
    assert induced_subgraph(lg.graph, vs) == Graph.from_edges(4, [(0, 1), (2, 3)])
    vs = [lg.vertex_of(t) for t in ("x", "z+2", "x+z", "x+y")]
    assert induced_subgraph(lg.graph, vs) == path_graph(4)
    assert find_induced_embedding(path_graph(4), lg.graph) is not None
    assert find_induced_embedding(matching_graph(2), lg.graph) is not None


def test_zdg_cap():
    with pytest.raises(CapExceeded):
        zero_divisor_graph(BooleanRing(25))


def test_labeled_graph_serialisation():
    lg = zero_divisor_graph(ModularRing(6))
    assert lg.to_json() == {"graph6": "Bg", "labels": ["2", "3", "4"]}
    assert 'label="3"' in lg.to_dot()


# -- prime powers and squarefree moduli ------------------------------------------------


PRIME_POWERS = [n for n in range(2, 257) if len(sympy.factorint(n)) == 1]


@pytest.mark.parametrize("n", PRIME_POWERS)
def test_zpk_is_threshold_with_valuation_weights(n):
    v = principal_local_threshold_check(ModularRing(n))
    assert v.threshold and v.valuation_weights_agree
    g = v.graph.graph
    assert v.certificate.replay() == g and v.certificate.weights_realize(g)


def test_z9_is_k2():
    v = principal_local_threshold_check(ModularRing(9))
    assert v.graph.labels == ("3", "6") and v.graph.graph == complete_graph(2)


def test_principal_local_rejects_non_prime_power():
    with pytest.raises(RingError):
        principal_local_threshold_check(ModularRing(12))


def test_squarefree_with_three_primes_not_threshold():
    checked = 0
    for n in range(2, 1001):
        f = sympy.factorint(n)
        if len(f) >= 3 and all(e == 1 for e in f.values()):
            assert not is_threshold(zero_divisor_graph(ModularRing(n)).graph), n
            checked += 1
    assert checked > 0


# -- non-local classification ------------------------------------------------------------


def test_classify_examples():
    v = classify_nonlocal_threshold(ProductRing([GaloisField(2), GaloisField(3)]))
    assert v.graph_threshold and v.condition_holds and v.star_leaves == 2
    v = classify_nonlocal_threshold(ProductRing([GaloisField(3), GaloisField(3)]))
    assert not v.graph_threshold and not v.condition_holds
    v = classify_nonlocal_threshold(ProductRing([ModularRing(2), ModularRing(4)]))
    assert not v.graph_threshold and not v.condition_holds


def test_f2_times_field_either_order():
    assert f2_times_field(ProductRing([GaloisField(5), GaloisField(2)]))
    assert not f2_times_field(ProductRing([GaloisField(2), ModularRing(4)]))
    assert not f2_times_field(ProductRing([GaloisField(2)] * 3))


def test_classify_rejects_single_factor():
    with pytest.raises(RingError):
        classify_nonlocal_threshold(ProductRing([GaloisField(5)]))


# -- annihilator conditions --------------------------------------------------------------


def test_z2_cubed_pair_violates_b():
    Z2 = ModularRing(2)
    R = ProductRing([Z2, Z2, Z2])
    verdict = check_pair(R, (1, 1, 0), (0, 0, 1))
    assert verdict["b"][0]
    rep = ann_threshold_conditions(R)
    assert "b" in rep.violated()


def test_z8_passes_all_conditions():
    rep = ann_threshold_conditions(ModularRing(8))
    assert rep.passed and rep.literally_passed


def test_localex_violates_b_with_2k2():
    R = localex_ring()
    rep = ann_threshold_conditions(R)
    assert rep.violated() == ["b"]
    w = rep.conditions["b"].realized
    assert w == {"x": "z", "y": "y", "a": "x+z", "b": "y+z"}
    lg = zero_divisor_graph(R)
    sub = induced_subgraph(lg.graph, [lg.vertex_of(w[k]) for k in ("x", "a", "y", "b")])
    assert not is_threshold(sub)


def test_f2_times_fq_literal_vs_realised():
    # x = (1,0), y = (0,1): the annihilators meet trivially, but the only
    # cross elements are y and x themselves, so no forbidden subgraph arises
    R = ProductRing([GaloisField(2), GaloisField(3)])
    verdict = check_pair(R, (1, 0), (0, 1))
    assert verdict["a"] == (True, None)
    rep = ann_threshold_conditions(R)
    assert rep.passed and not rep.literally_passed


@pytest.mark.parametrize("R", RINGS + [ProductRing([ModularRing(4), ModularRing(4)])], ids=repr)
def test_realised_violations_are_forbidden_subgraphs(R):
    rep = ann_threshold_conditions(R)
    lg = zero_divisor_graph(R)
    for c in rep.conditions.values():
        if c.realized and c.name in "ab":
            vs = [lg.vertex_of(c.realized[k]) for k in ("x", "a", "y", "b")]
            assert len(set(vs)) == 4
            assert not is_threshold(induced_subgraph(lg.graph, vs))
    if is_threshold(lg.graph):
        assert rep.passed


# -- monomial quotients ------------------------------------------------------------------


@pytest.mark.parametrize("p", [2, 3])
def test_square_zero_quotient_is_complete(p):
    R = MonomialQuotientRing(p, ["x1", "x2"], [[2, 0], [0, 2], [1, 1]])
    gens = [R.variable(0), R.variable(1)]
    assert is_complete_graph_check(R, gens)
    assert zero_divisor_graph(R).graph.n == p**2 - 1


def test_single_variable_square_zero_is_k1():
    R = MonomialQuotientRing(2, ["x1"], [[2]])
    assert is_complete_graph_check(R, [R.variable(0)])
    assert zero_divisor_graph(R).graph.n == 1


def test_complete_check_validates_generators():
    R = MonomialQuotientRing(2, ["x1"], [[3]])
    with pytest.raises(RingError):
        is_complete_graph_check(R, [R.variable(0)])


@pytest.mark.parametrize("n", [3, 4, 5])
def test_nested_split_quotients_are_threshold(n):
    R = MonomialQuotientRing(2, ["x1", "x2"], [[n, 0], [0, 2], [1, 1]])
    res = recognize_threshold(zero_divisor_graph(R).graph)
    assert isinstance(res, ThresholdCertificate)


def test_degree_four_quotient_not_threshold():
    R = make_ring(fixture_descriptor("prop_nonthreshold"))
    lg = zero_divisor_graph(R)
    assert not is_threshold(lg.graph)
    rep = ann_threshold_conditions(R)
    assert rep.conditions["b"].realized is not None
    assert check_pair(R, R.from_text("x"), R.from_text("y"))["b"][0]
