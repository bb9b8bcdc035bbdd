from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zdgraph.errors import CapExceeded, GraphError, ParseError
from zdgraph.graph import (
    Graph,
    SetFamily,
    all_labeled_graphs,
    complement,
    complete_graph,
    cycle_graph,
    empty_graph,
    extension_property_check,
    find_induced_embedding,
    graph_from_index,
    induced_subgraph,
    intersection_graph,
    intersection_representation,
    matching_graph,
    path_graph,
    random_graph,
    star_graph,
)
from zdgraph.graphio import from_edgelist, from_graph6, guess_format, parse_graph, serialize_graph, to_dot, to_graph6


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


# -- construction and validation ----------------------------------------------


def test_graph_rejects_self_loop():
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 0)])


def test_graph_rejects_asymmetric_masks():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))


def test_graph_rejects_out_of_range():
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])


def test_named_graphs():
    assert path_graph(4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert cycle_graph(4).edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert matching_graph(2).edges() == [(0, 1), (2, 3)]
    assert star_graph(3).edges() == [(0, 1), (0, 2), (0, 3)]
    assert complete_graph(4).edge_count == 6
    assert empty_graph(3).edge_count == 0


def test_graph_from_index_enumerates_everything():
    seen = {g for g in all_labeled_graphs(4)}
    assert len(seen) == 2**6
    assert graph_from_index(3, 0) == empty_graph(3)
    assert graph_from_index(3, 7) == complete_graph(3)


# -- parsing and serialisation --------------------------------------------------


def test_edgelist_examples():
    assert parse_graph("n=2\n0 1", "edgelist") == complete_graph(2)
    assert parse_graph("n=3\n0 1\n1 2", "edgelist") == path_graph(3)
    assert serialize_graph(empty_graph(0), "edgelist") == "n=0"
    assert serialize_graph(complete_graph(2), "edgelist") == "n=2\n0 1"


def test_edgelist_without_header_and_blank_lines():
    assert from_edgelist("0 1\n\n1 2\n") == path_graph(3)


def test_edgelist_self_loop_is_validation_error():
    with pytest.raises(GraphError):
        from_edgelist("n=2\n1 1")


def test_edgelist_malformed_names_line():
    with pytest.raises(ParseError) as info:
        from_edgelist("n=3\n0 1\n1 x")
    assert info.value.line == 3


def test_graph6_malformed_names_offset():
    with pytest.raises(ParseError) as info:
        from_graph6("C\x7f")
    assert info.value.offset is not None


def test_graph6_c4_roundtrip():
    c4 = cycle_graph(4)
    assert parse_graph(serialize_graph(c4, "graph6"), "graph6") == c4


def test_graph6_header_is_accepted():
    assert from_graph6(">>graph6<<" + to_graph6(path_graph(4))) == path_graph(4)


@settings(max_examples=200)
@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    ours = to_graph6(g)
    theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert ours == theirs
    back = nx.from_graph6_bytes(ours.encode())
    assert sorted(tuple(sorted(e)) for e in back.edges()) == g.edges()


def test_graph6_large_form():
    g = random_graph(70, 3)
    text = to_graph6(g)
    assert text.startswith("~")
    assert from_graph6(text) == g
    assert text == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


@settings(max_examples=200)
@given(graphs())
def test_serialisation_roundtrips(g):
    assert from_graph6(to_graph6(g)) == g
    assert from_edgelist(serialize_graph(g, "edgelist")) == g


def test_dot_output_lists_edges_and_labels():
    text = to_dot(path_graph(3), ["a", "b", 'c"'])
    assert "0 -- 1;" in text and "1 -- 2;" in text
    assert 'label="c\\""' in text


def test_guess_format():
    assert guess_format("x.g6", "") == "graph6"
    assert guess_format("x", "n=2\n0 1") == "edgelist"
    assert guess_format("x", "Cl\n") == "graph6"


# -- complement and induced subgraphs --------------------------------------------


def test_complement_examples():
    assert complement(cycle_graph(4)) == Graph.from_edges(4, [(0, 2), (1, 3)])
    assert complement(complete_graph(5)) == empty_graph(5)
    assert complement(complement(path_graph(4))) == path_graph(4)


@given(graphs())
def test_complement_involution(g):
    h = complement(g)
    assert complement(h) == g
    for u, v in combinations(range(g.n), 2):
        assert h.has_edge(u, v) != g.has_edge(u, v)


def test_induced_subgraph_examples():
    assert induced_subgraph(cycle_graph(4), [0, 1, 2, 3]) == cycle_graph(4)
    assert induced_subgraph(path_graph(4), [0, 3]) == empty_graph(2)
    assert induced_subgraph(complete_graph(4), [3, 0, 2]) == complete_graph(3)


@pytest.mark.parametrize("vs", [[0, 0], [0, 7]])
def test_induced_subgraph_rejects_bad_vertices(vs):
    with pytest.raises(GraphError):
        induced_subgraph(path_graph(4), vs)


# -- induced embedding search ---------------------------------------------------


def brute_force_embedding(p, h):
    for image in permutations(range(h.n), p.n):
        if all(p.has_edge(u, v) == h.has_edge(image[u], image[v]) for u, v in combinations(range(p.n), 2)):
            return image
    return None


def test_find_examples():
    assert find_induced_embedding(matching_graph(2), cycle_graph(4)) is None
    phi = find_induced_embedding(path_graph(3), cycle_graph(4))
    assert phi is not None
    assert induced_subgraph(cycle_graph(4), list(phi)) == path_graph(3)


def test_find_cap():
    with pytest.raises(CapExceeded):
        find_induced_embedding(empty_graph(11), empty_graph(12))
    assert find_induced_embedding(empty_graph(11), empty_graph(12), cap=11) is not None


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=4), graphs(max_n=8))
def test_find_agrees_with_brute_force(p, h):
    found = find_induced_embedding(p, h)
    oracle = brute_force_embedding(p, h)
    assert (found is None) == (oracle is None)
    if found is not None:
        assert len(set(found)) == p.n
        assert induced_subgraph(h, list(found)) == p
        # ascending trial order makes the first hit the lexicographically least
        assert tuple(found) == oracle


# -- intersection representations -----------------------------------------------


def test_intersection_graph_examples():
    assert intersection_graph(SetFamily(2, ({0}, {1}))) == empty_graph(2)
    assert intersection_graph(SetFamily(2, ({0}, {0, 1}, {1}))) == path_graph(3)


def test_intersection_representation_p3():
    fam = intersection_representation(path_graph(3))
    # edge points 0 = {0,1}, 1 = {1,2}; point 2 is the sentinel
    assert fam.ground_size == 3
    assert [set(s) for s in fam.sets] == [{0}, {0, 1}, {1}]
    assert fam.sentinel == 2


def test_intersection_representation_two_isolated_vertices():
    fam = intersection_representation(empty_graph(2))
    assert fam.ground_size == 3
    assert [set(s) for s in fam.sets] == [{0}, {1}]


def test_intersection_representation_isolated_edge():
    fam = intersection_representation(complete_graph(2))
    assert fam.ground_size == 3
    assert [set(s) for s in fam.sets] == [{0}, {0, 1}]


def test_intersection_representation_degenerate_sizes():
    assert intersection_representation(empty_graph(0)).ground_size == 1
    fam = intersection_representation(empty_graph(1))
    assert fam.ground_size == 2 and [set(s) for s in fam.sets] == [{0}]


def _check_representation(h):
    fam = intersection_representation(h)
    assert intersection_graph(fam) == h
    masks = fam.masks()
    assert len(set(masks)) == len(masks)
    full = (1 << fam.ground_size) - 1
    assert all(m and m != full and not m >> fam.sentinel & 1 for m in masks)


@pytest.mark.parametrize("n", range(0, 7))
def test_intersection_roundtrip_exhaustive(n):
    for h in all_labeled_graphs(n):
        _check_representation(h)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=12))
def test_intersection_roundtrip_random(h):
    _check_representation(h)


# -- extension property and random graphs ---------------------------------------


def test_extension_examples():
    assert extension_property_check(complete_graph(2), 1, 0).passed
    rep = extension_property_check(complete_graph(2), 0, 1)
    assert not rep.passed and rep.witness == ((), (0,))


def test_extension_rejects_oversized_sets():
    with pytest.raises(GraphError):
        extension_property_check(complete_graph(2), 2, 1)


def test_extension_g24_regression():
    # first failing (U, V) found independently by a networkx scan
    rep = extension_property_check(random_graph(24, 1), 1, 1)
    assert not rep.passed
    assert rep.witness == ((13,), (23,))
    assert rep.checked == 322


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7), st.integers(0, 2), st.integers(0, 2))
def test_extension_agrees_with_oracle(g, s, t):
    if s + t > g.n:
        return
    G = to_nx(g)
    oracle = None
    for U in combinations(range(g.n), s):
        rest = [v for v in range(g.n) if v not in U]
        for V in combinations(rest, t):
            z_ok = [
                z
                for z in G
                if z not in U and z not in V and all(G.has_edge(z, u) for u in U) and not any(G.has_edge(z, v) for v in V)
            ]
            if not z_ok:
                oracle = (U, V)
                break
        if oracle:
            break
    rep = extension_property_check(g, s, t)
    assert rep.passed == (oracle is None)
    assert rep.witness == oracle


def test_random_graph_regressions():
    assert random_graph(0, 5) == empty_graph(0)
    assert random_graph(5, 42) == random_graph(5, 42)
    assert to_graph6(random_graph(5, 42)) == "DV?"


def test_random_graph_density():
    edges = sum(random_graph(10, seed).edge_count for seed in range(10_000))
    density = edges / (10_000 * 45)
    assert abs(density - 0.5) < 0.02
