from dataclasses import replace
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zdgraph.dotprod import (
    BLUE,
    COLORS,
    GREEN,
    RED,
    ColoredCompleteGraph,
    all_colorings,
    augment_coloring,
    build_dot_embedding,
    componentwise_product,
    dot_product,
    dot_product_graph,
    parse_colored,
    random_coloring,
    verify_trichotomy,
)
from zdgraph.embed import Embedding, verify_embedding
from zdgraph.errors import CapExceeded, GraphError, ParseError
from zdgraph.graph import Graph
from zdgraph.rings import BooleanRing, ModularRing, ProductRing
from zdgraph.zdg import zero_divisor_graph


def colorings(max_n=7):
    @st.composite
    def build(draw):
        n = draw(st.integers(0, max_n))
        cs = draw(st.lists(st.sampled_from(COLORS), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
        return ColoredCompleteGraph(n, tuple(cs))

    return build()


# -- colourings and the text format ----------------------------------------------


def test_every_pair_must_be_coloured():
    with pytest.raises(GraphError):
        ColoredCompleteGraph(3, (RED, RED))
    with pytest.raises(GraphError):
        ColoredCompleteGraph(2, ("purple",))


def test_parse_colored():
    x = parse_colored("n=3\n0 1 r\n0 2 g\n1 2 b\n")
    assert x.colors == (RED, GREEN, BLUE)
    assert x.color(2, 0) == GREEN
    assert parse_colored(x.to_text()) == x


def test_parse_colored_missing_pair():
    with pytest.raises(GraphError):
        parse_colored("n=3\n0 1 r\n0 2 g\n")


@pytest.mark.parametrize("text", ["n=2\n0 1 q", "n=2\n0 0 r", "n=2\n0 x r", "n=2\n0 5 r"])
def test_parse_colored_malformed(text):
    with pytest.raises(ParseError):
        parse_colored(text)


def test_random_coloring_is_deterministic():
    assert random_coloring(6, 3) == random_coloring(6, 3)
    assert len(random_coloring(6, 3).colors) == 15


# -- augmentation -------------------------------------------------------------------


def test_augment_all_red_k2():
    aug = augment_coloring(ColoredCompleteGraph(2, (RED,)))
    assert aug.n == 4
    assert aug.color(0, 1) == RED
    assert [aug.color(u, v) for u, v in aug.pairs() if v >= 2] == [GREEN] * 5


def test_augment_degenerate_inputs_get_three_vertices():
    assert augment_coloring(ColoredCompleteGraph(0, ())).n == 3
    assert augment_coloring(ColoredCompleteGraph(1, ())).n == 4


def test_augment_all_blue_k3():
    x = ColoredCompleteGraph(3, (BLUE,) * 3)
    aug = augment_coloring(x)
    green = aug.graph_of(GREEN)
    assert green.edges() == [(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert aug.graph_of(BLUE).edges() == [(0, 1), (0, 2), (1, 2)]


@given(colorings())
def test_augmented_green_min_degree(x):
    green = augment_coloring(x).graph_of(GREEN)
    assert min(green.degree(v) for v in range(green.n)) >= 2


# -- the construction ---------------------------------------------------------------


def test_edge_indexing_is_lexicographic():
    x = ColoredCompleteGraph(2, (BLUE,))
    emb = build_dot_embedding(x)
    assert emb.edges == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    assert emb.ring == {"kind": "boolean", "ground_size": 6}


@pytest.mark.parametrize("color", COLORS)
def test_single_edge_intersections(color):
    x = ColoredCompleteGraph(2, (color,))
    emb = build_dot_embedding(x)
    (s0, t0), (s1, t1) = emb.pairs[0], emb.pairs[1]
    e = 1 << emb.edges.index((0, 1)) if color != RED else 0
    assert t0 & t1 == e
    assert s0 & s1 == (e if color == GREEN else 0)


@given(colorings())
def test_embedding_invariants(x):
    emb = build_dot_embedding(x)
    aug = emb.augmented
    assert len(set(emb.pairs)) == len(emb.pairs)
    index = {e: i for i, e in enumerate(emb.edges)}
    for v, (s, t) in enumerate(emb.pairs):
        assert s & ~t == 0 and t != 0
        expected_s = sum(1 << i for (a, b), i in index.items() if v in (a, b) and aug.color(a, b) == GREEN)
        assert s == expected_s
    # exact intersection law on original pairs
    for u, v in x.pairs():
        c = x.color(u, v)
        e = 0 if c == RED else 1 << index[(u, v)]
        assert emb.pairs[u][1] & emb.pairs[v][1] == e
        assert emb.pairs[u][0] & emb.pairs[v][0] == (e if c == GREEN else 0)


def trichotomy_oracle(x, emb):
    """Recompute the three conditions with Python sets."""
    def as_sets(v):
        s, t = emb.pairs[v]
        return {i for i in range(len(emb.edges)) if s >> i & 1}, {i for i in range(len(emb.edges)) if t >> i & 1}

    for u, v in x.pairs():
        (su, tu), (sv, tv) = as_sets(u), as_sets(v)
        star_zero = not (su & sv) and not (tu & tv)
        dot_zero = not ((su & sv) ^ (tu & tv))
        c = x.color(u, v)
        if c == RED and not star_zero:
            return False
        if c == GREEN and (star_zero or not dot_zero):
            return False
        if c == BLUE and dot_zero:
            return False
    return True


@given(colorings())
def test_trichotomy_property(x):
    emb = build_dot_embedding(x)
    rep = verify_trichotomy(x, emb)
    assert rep.passed and rep.failures == []
    assert trichotomy_oracle(x, emb)
    assert rep.checked == x.n * (x.n - 1) // 2


@pytest.mark.parametrize("color", COLORS)
def test_single_colour_k4(color):
    x = ColoredCompleteGraph(4, (color,) * 6)
    assert verify_trichotomy(x, build_dot_embedding(x)).passed


def test_corrupted_embedding_reports_the_pair():
    x = ColoredCompleteGraph(2, (BLUE,))
    emb = build_dot_embedding(x)
    e = 1 << emb.edges.index((0, 1))
    s0, t0 = emb.pairs[0]
    bad = replace(emb, pairs=((s0, t0 & ~e),) + emb.pairs[1:])
    rep = verify_trichotomy(x, bad)
    assert not rep.passed
    assert rep.failures[0]["pair"] == [0, 1] and rep.failures[0]["color"] == BLUE


@settings(max_examples=50, deadline=None)
@given(colorings(max_n=6))
def test_star_zero_implies_dot_zero(x):
    emb = build_dot_embedding(x)
    A = BooleanRing(len(emb.edges))
    zero2 = (0, 0)
    for a, b in combinations(emb.pairs, 2):
        if componentwise_product(A, a, b) == zero2:
            assert dot_product(A, a, b) == 0


def test_red_green_part_is_a_boolean_universality_embedding():
    # T(v) alone turns red pairs into disjoint sets, i.e. zero products in A
    x = random_coloring(6, 11)
    emb = build_dot_embedding(x)
    red = x.graph_of(RED)
    A = BooleanRing(len(emb.edges))
    images = tuple(A.to_text(emb.pairs[v][1]) for v in range(x.n))
    sentinel = A.to_text(1 << emb.edges.index((x.n, x.n + 1)))
    e = Embedding("boolean", A.descriptor(), images, (sentinel,) * x.n)
    assert verify_embedding(red, e).adjacency


def test_dot_minus_star_realises_the_green_graph():
    x = random_coloring(6, 12)
    emb = build_dot_embedding(x)
    A = BooleanRing(len(emb.edges))
    green = [
        (u, v)
        for u, v in x.pairs()
        if dot_product(A, emb.pairs[u], emb.pairs[v]) == 0
        and componentwise_product(A, emb.pairs[u], emb.pairs[v]) != (0, 0)
    ]
    assert Graph.from_edges(x.n, green) == x.graph_of(GREEN)


def test_json_has_edge_index_dictionary():
    emb = build_dot_embedding(ColoredCompleteGraph(2, (GREEN,)))
    data = emb.to_json()
    assert data["edges"]["0"] == [0, 1]
    assert data["pairs"]["0"] == {"S": "{0,1,2}", "T": "{0,1,2}"}
    assert data["added"] == [2, 3]


# -- dot products ----------------------------------------------------------------------


def test_dot_product_examples():
    B = BooleanRing(1)
    e = B.from_text("{0}")
    assert dot_product(B, (e, e), (e, e)) == B.zero
    assert dot_product(ModularRing(6), (), ()) == 0
    assert dot_product(ModularRing(6), (2, 3), (3, 2)) == 0


def test_componentwise_examples():
    R = ModularRing(5)
    assert componentwise_product(R, (2, 0), (0, 3)) == (0, 0)
    B = BooleanRing(2)
    a = (B.from_text("{0}"), B.from_text("{1}"))
    assert componentwise_product(B, a, a) == a


def test_length_mismatch():
    with pytest.raises(ValueError):
        dot_product(ModularRing(6), (1,), (1, 2))
    with pytest.raises(ValueError):
        componentwise_product(ModularRing(6), (1,), (1, 2))


def test_dot_product_graph_boolean_one_point():
    lg = dot_product_graph(BooleanRing(1), 2)
    assert lg.labels == ("({},{0})", "({0},{})", "({0},{0})")
    assert lg.graph.edges() == [(0, 1)]


def test_dot_product_graph_z2():
    lg = dot_product_graph(ModularRing(2), 2)
    assert lg.labels == ("(0,1)", "(1,0)", "(1,1)")
    assert lg.graph.edges() == [(0, 1)]


@pytest.mark.parametrize("R", [ModularRing(2), ModularRing(4), ModularRing(6), BooleanRing(2)], ids=repr)
def test_zero_divisor_graph_of_power_is_spanning_subgraph(R):
    dg = dot_product_graph(R, 2)
    zg = zero_divisor_graph(ProductRing([R, R]))
    index = {t: i for i, t in enumerate(dg.labels)}
    for u, v in zg.graph.edges():
        assert dg.graph.has_edge(index[zg.labels[u]], index[zg.labels[v]])


def test_dot_product_graph_cap():
    with pytest.raises(CapExceeded):
        dot_product_graph(ModularRing(2**11), 2)


def test_all_colorings_counts():
    assert sum(1 for _ in all_colorings(3)) == 27
