"""Codings, oracle functions, graphs and trees.

Worked values come from hand enumeration; searches are checked against
itertools brute force; laws are hypothesis properties.
"""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weihrauch_lab.encodings import (OMEGA, FiniteGraph, FuelExhausted, GraphCode, TreeCode,
                                     block_decode, block_encode, check_coloring, complete,
                                     complete_graph, cycle, depth_tree, diag_decode, diag_encode,
                                     edge_query, edgeless, empty_graph, find_coloring,
                                     find_embedding, finite_subgraph, finite_support, finite_tree,
                                     from_description, full_tree, graph_from_finite,
                                     has_extension, is_k_colorable, pair_decode, pair_encode,
                                     path, path_tree, periodic, seq_decode, seq_encode,
                                     subgraph_colorable, table_then_shift, tabled, tree_has_level,
                                     tree_member)
from weihrauch_lab.encodings.oracles import derived


# -- pairs ---------------------------------------------------------------------

@pytest.mark.parametrize("pair,code", [((0, 1), 0), ((2, 3), 5), ((0, 3), 3), ((1, 3), 4)])
def test_pair_encode_worked_values(pair, code):
    assert pair_encode(*pair) == code
    assert pair_decode(code) == pair


def test_pair_codes_follow_enumeration_of_increasing_pairs():
    listed = [(a, b) for b in range(1, 60) for a in range(b)]
    assert [pair_encode(a, b) for a, b in listed] == list(range(len(listed)))


def test_pair_encode_rejects_non_increasing():
    for bad in [(1, 1), (2, 1), (-1, 3)]:
        with pytest.raises(ValueError):
            pair_encode(*bad)


@given(st.integers(min_value=0, max_value=10 ** 12))
def test_pair_decode_then_encode(n):
    a, b = pair_decode(n)
    assert 0 <= a < b and pair_encode(a, b) == n


@given(st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
def test_diag_round_trip(i, j):
    assert diag_decode(diag_encode(i, j)) == (i, j)


def test_diag_is_onto_an_initial_segment():
    codes = sorted(diag_encode(i, j) for i in range(30) for j in range(30) if i + j < 30)
    assert codes == list(range(len(codes)))


# -- sequences -----------------------------------------------------------------

def test_empty_sequence_is_zero():
    for b in (2, 3, OMEGA):
        assert seq_encode(b, ()) == 0 and seq_decode(b, 0) == ()


def test_binary_codes_below_16_are_distinct_sequences():
    seqs = {seq_decode(2, c) for c in range(16)}
    assert len(seqs) == 16
    assert seq_decode(2, seq_encode(2, (1, 0, 1))) == (1, 0, 1)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_finite_alphabet_codes_are_length_lexicographic(n):
    listed = [s for length in range(5) for s in itertools.product(range(n), repeat=length)]
    assert [seq_encode(n, s) for s in listed] == list(range(len(listed)))


def test_omega_codes_enumerate_every_sequence_once():
    seen = {seq_decode(OMEGA, c) for c in range(1 << 12)}
    assert len(seen) == 1 << 12
    assert all(seq_encode(OMEGA, s) < 1 << 12 for s in seen)


@given(st.sampled_from([2, 3, 7, OMEGA]), st.data())
def test_sequence_round_trip_and_parent_below_child(b, data):
    width = 9 if b is OMEGA else b
    seq = tuple(data.draw(st.lists(st.integers(0, width - 1), max_size=20)))
    code = seq_encode(b, seq)
    assert seq_decode(b, code) == seq
    if seq:
        assert seq_encode(b, seq[:-1]) < code


def test_sequence_encode_rejects_out_of_alphabet():
    with pytest.raises(ValueError):
        seq_encode(2, (0, 2))
    with pytest.raises(ValueError):
        seq_encode(OMEGA, (-1,))


def test_block_example_over_alphabet_three():
    # width 3 blocks for values up to 3
    assert block_encode((2, 0, 3), 3) == (1, 1, 0, 0, 0, 0, 1, 1, 1)
    assert block_decode((1, 1, 0, 0, 0, 0, 1, 1, 1), 3) == (2, 0, 3)


@given(st.integers(1, 6), st.data())
def test_block_round_trip(width, data):
    seq = tuple(data.draw(st.lists(st.integers(0, width), max_size=12)))
    assert block_decode(block_encode(seq, width), width) == seq


# -- oracle functions ----------------------------------------------------------------

def test_finite_support_and_fuel():
    f = finite_support({0: 3, 2: 5}, default=1, support_bound=3, fuel_limit=10)
    assert f.prefix(5) == [3, 1, 5, 1, 1]
    with pytest.raises(FuelExhausted):
        f(10)


def test_periodic_and_tabled():
    assert periodic([7], [1, 2]).prefix(6) == [7, 1, 2, 1, 2, 1]
    assert tabled([4, 5], 9).prefix(4) == [4, 5, 9, 9]


def test_table_then_shift():
    m = table_then_shift([5, 2], 10)
    assert m.prefix(5) == [5, 2, 12, 13, 14]


@pytest.mark.parametrize("oracle", [
    finite_support({1: 2}, 0, 2), periodic([1], [0, 3]), tabled([1, 2], 0),
    table_then_shift([3], 4), finite_support({}, 1, 0, fuel_limit=7)])
def test_descriptor_round_trip(oracle):
    again = from_description(oracle.describe())
    assert again == oracle and again.prefix(6) == oracle.prefix(6)
    assert again.fuel_limit == oracle.fuel_limit


def test_unregistered_derived_oracles_cannot_be_rebuilt():
    f = derived("made_up_label", {"x": 1}, lambda n: n)
    with pytest.raises(ValueError):
        from_description(f.describe())


def test_derived_oracle_memoizes():
    calls = []

    def fn(n):
        calls.append(n)
        return n * n

    f = derived("squares", {}, fn)
    assert f(4) == 16 and f(4) == 16 and calls == [4]


# -- graphs ----------------------------------------------------------------------

def test_edge_query_examples():
    assert not edge_query(empty_graph(), 0, 1)
    g = GraphCode(finite_support({pair_encode(2, 3): 1}, 0, pair_encode(2, 3) + 1))
    assert edge_query(g, 3, 2)
    assert not edge_query(g, 2, 4)


def test_finite_subgraph_examples():
    assert finite_subgraph(empty_graph(), 3) == FiniteGraph(4)
    tri = graph_from_finite(complete(3))
    assert finite_subgraph(tri, 1) == FiniteGraph.from_edges(2, [(0, 1)])
    assert finite_subgraph(tri, 5) == FiniteGraph.from_edges(6, complete(3).edges)


def test_colorability_examples():
    assert not is_k_colorable(complete(3), 2)
    assert is_k_colorable(complete(3), 3)
    k4_minus = FiniteGraph.from_edges(4, set(complete(4).edges) - {(0, 1)})
    assert is_k_colorable(k4_minus, 3)


def _brute_colorings(g, k):
    return [c for c in itertools.product(range(k), repeat=g.num_vertices)
            if all(c[a] != c[b] for a, b in g.edges)]


graphs = st.integers(1, 6).flatmap(lambda n: st.builds(
    lambda mask: FiniteGraph.from_edges(n, [p for i, p in enumerate(itertools.combinations(range(n), 2))
                                            if mask >> i & 1]),
    st.integers(0, (1 << (n * (n - 1) // 2)) - 1)))


@settings(max_examples=150)
@given(graphs, st.integers(1, 4))
def test_find_coloring_is_the_lex_least_coloring(g, k):
    brute = _brute_colorings(g, k)
    got = find_coloring(g, k)
    assert got == (min(brute) if brute else None)


@settings(max_examples=80)
@given(graphs, st.integers(1, 3))
def test_find_coloring_respects_fixed_colors(g, k):
    fixed = {0: k - 1}
    brute = [c for c in _brute_colorings(g, k) if c[0] == k - 1]
    assert find_coloring(g, k, fixed) == (min(brute) if brute else None)


@settings(max_examples=60)
@given(graphs, st.integers(1, 3))
def test_incremental_colorability_matches_direct(f, k):
    g = graph_from_finite(f)
    fresh = graph_from_finite(f)
    for m in range(f.num_vertices + 2):
        assert subgraph_colorable(g, k, m) == is_k_colorable(finite_subgraph(fresh, m), k)


def test_check_coloring_examples():
    assert check_coloring(empty_graph(), tabled([], 0), 2, 10).is_valid
    edge = graph_from_finite(FiniteGraph.from_edges(2, [(0, 1)]))
    v = check_coloring(edge, tabled([], 0), 2, 2)
    assert v.is_invalid and v.witness == (0, 1)
    parity = derived("parity", {}, lambda n: n % 2)
    assert check_coloring(edge, parity, 2, 50).is_valid


def test_embedding_examples():
    assert find_embedding(complete(2), complete(3)) is not None
    assert find_embedding(complete(3), cycle(4)) is None
    assert find_embedding(path(3), complete(3)) is not None
    assert find_embedding(path(3), complete(3), induced=True) is None
    assert find_embedding(edgeless(2), cycle(4), induced=True) is not None


def _brute_embeds(h, f, induced):
    for tau in itertools.permutations(range(f.num_vertices), h.num_vertices):
        ok = True
        for a, b in itertools.combinations(range(h.num_vertices), 2):
            he, fe = h.has_edge(a, b), f.has_edge(tau[a], tau[b])
            if (he and not fe) or (induced and fe and not he):
                ok = False
                break
        if ok:
            return True
    return False


@settings(max_examples=200)
@given(graphs, graphs, st.booleans())
def test_find_embedding_matches_brute_force(h, f, induced):
    got = find_embedding(h, f, induced)
    assert (got is not None) == _brute_embeds(h, f, induced)
    if got is not None:
        assert len(set(got.values())) == h.num_vertices
        for a, b in h.edges:
            assert f.has_edge(got[a], got[b])


def test_complete_graph_code():
    assert edge_query(complete_graph(), 3, 9)


# -- trees -------------------------------------------------------------------------

def test_tree_member_examples():
    assert tree_member(full_tree(2), (0, 1, 1))
    t = TreeCode(2, derived("cut_zero", {}, lambda c: 0 if c == seq_encode(2, (0,)) else 1))
    assert not tree_member(t, (0, 1))
    assert tree_member(t, (1, 0))
    assert tree_member(t, ()) == (t.node_fn(0) > 0)


def test_tree_member_is_downward_closed_even_when_cached_out_of_order():
    t = TreeCode(2, derived("cut_one", {}, lambda c: 0 if seq_decode(2, c) == (1,) else 1))
    assert tree_member(t, (0, 0, 1))
    assert not tree_member(t, (1, 0, 0))
    assert not tree_member(t, (1, 0))


def test_tree_has_level_examples():
    assert tree_has_level(full_tree(2), 10)
    assert not tree_has_level(finite_tree(2, [()]), 1)
    # every extension of <1> dies at length 3, the all-zero path survives
    t = TreeCode(2, derived("kill_one", {}, lambda c: 0 if (lambda s: len(s) >= 3 and s[0] == 1)(
        seq_decode(2, c)) else 1))
    assert tree_has_level(t, 5)
    assert has_extension(t, (0,), 6)
    assert not has_extension(t, (1,), 3)


def test_path_tree_contains_path_and_noise_only():
    p = periodic([], [1, 0])
    t = path_tree(2, p, [(0, 0, 1)])
    assert all(tree_member(t, tuple(p.prefix(d))) for d in range(17))
    assert tree_member(t, (0, 0, 1)) and not tree_member(t, (0, 1))
    assert not tree_member(t, (0, 0, 1, 0))


def test_depth_tree_is_an_antichain_below_the_root():
    t = depth_tree(OMEGA, 1)
    assert all(tree_member(t, (n,)) for n in range(50))
    assert not tree_member(t, (3, 0))
    again = from_description(t.node_fn.describe())
    assert again(seq_encode(OMEGA, (9,))) == 1 and again(seq_encode(OMEGA, (9, 1))) == 0
