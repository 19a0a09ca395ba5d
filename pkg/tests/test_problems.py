"""Checkers, certificates and solvers for each problem."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weihrauch_lab.encodings import (FiniteGraph, complete, cycle, diag_encode, edge_query,
                                     find_embedding, finite_support, finite_tree, full_tree,
                                     graph_from_finite, tabled)
from weihrauch_lab.encodings.oracles import derived
from weihrauch_lab.harness import family
from weihrauch_lab.problems import (GC, LG, LLPO, LPO, TC, WF, WKL, AllZero, CertificateError,
                                    Finite, FirstNonzero, FirstZero, Instance, KnownAnswer,
                                    KnownColoring, NoZero, PathGen, ShapeError, check_certificate,
                                    check_solution, hat_from_oracle, hat_pack, hat_row,
                                    hat_solution, linear_graph, solve_certified, tagged_linear,
                                    tagged_prefix)


def lpo(entries, bound, default=1, cert=None):
    return Instance(LPO, finite_support(entries, default, bound), cert)


# -- LPO / LLPO ----------------------------------------------------------------

def test_lpo_never_zero_answers_zero():
    assert check_solution(Instance(LPO, tabled([], 1), NoZero()), 0).is_valid


def test_lpo_first_zero_three():
    inst = lpo({0: 1, 1: 2, 2: 1, 3: 0}, 4, cert=FirstZero(3))
    assert solve_certified(inst) == 4
    assert check_solution(inst, 4).is_valid
    assert check_solution(inst, 3).is_invalid
    assert check_solution(inst, 0).is_invalid


@settings(max_examples=100)
@given(st.integers(0, 30), st.integers(0, 40))
def test_lpo_output_convention(j, cand):
    inst = lpo({j: 0}, j + 1, cert=FirstZero(j))
    assert check_solution(inst, cand).is_valid == (cand == j + 1)


def test_lpo_zero_answer_without_certificate_is_unknown():
    inst = Instance(LPO, tabled([], 1))
    v = check_solution(inst, 0, budget=20)
    assert v.is_unknown


def test_llpo_all_zero_allows_both_answers():
    inst = Instance(LLPO, tabled([], 0), AllZero())
    assert check_solution(inst, 0).is_valid and check_solution(inst, 1).is_valid


@pytest.mark.parametrize("j", range(8))
def test_llpo_parity_of_first_nonzero(j):
    inst = Instance(LLPO, finite_support({j: 1}, 0, j + 1), FirstNonzero(j))
    allowed = {c for c in (0, 1) if check_solution(inst, c).is_valid}
    assert allowed == ({0} if j % 2 == 1 else {1})
    assert solve_certified(inst) in allowed


# -- colorability problems --------------------------------------------------------

def test_lg_gadget_first_failure_at_four():
    g = graph_from_finite(FiniteGraph.from_edges(5, [(2, 3), (2, 4), (3, 4)]))
    inst = Instance(LG(2), g, KnownAnswer(4))
    assert check_solution(inst, 4).is_valid
    assert check_solution(inst, 3).is_invalid and check_solution(inst, 5).is_invalid


def test_lg_triangle_solves_to_two():
    inst = Instance(LG(2), graph_from_finite(complete(3)), KnownAnswer(2))
    assert check_certificate(inst).is_valid
    assert solve_certified(inst) == 2


def test_lg_colorable_graph_answers_zero():
    parity = derived("parity", {}, lambda n: n % 2)
    inst = Instance(LG(2), graph_from_finite(FiniteGraph.from_edges(4, [(0, 1), (2, 3)])),
                    KnownColoring(parity))
    assert solve_certified(inst) == 0 and check_solution(inst, 0).is_valid


def test_gc_checks_the_candidate_coloring():
    edge = graph_from_finite(FiniteGraph.from_edges(2, [(0, 1)]))
    parity = derived("parity", {}, lambda n: n % 2)
    inst = Instance(GC(2), edge, KnownColoring(parity))
    assert check_solution(inst, parity).is_valid
    assert check_solution(inst, tabled([], 0)).is_invalid


@pytest.mark.parametrize("budget", [5, 10, 20, 40])
def test_gc_validity_is_monotone_in_budget(budget):
    fam = family("gc2")
    for i in range(5):
        inst = fam.instance(3, i)
        y = solve_certified(inst, 40)
        assert check_solution(inst, y, 40).is_valid
        assert check_solution(inst, y, budget).is_valid


def test_tc_escape_value_on_failure():
    inst = Instance(TC(2), graph_from_finite(complete(3)), KnownAnswer(2))
    assert check_solution(inst, tabled([2], 0)).is_valid
    assert check_solution(inst, tabled([1], 0)).is_invalid  # G_1 is 2-colorable


# -- trees --------------------------------------------------------------------------

def test_wf_finite_tree_answers_one():
    # depth 2: the longest node has length 2
    t = finite_tree(2, [(), (0,), (1,), (0, 1)])
    inst = Instance(WF, t, Finite(3))
    assert solve_certified(inst) == 1
    assert check_solution(inst, 1).is_valid and check_solution(inst, 0).is_invalid


def test_wkl_full_tree_all_zero_path():
    zeros = tabled([], 0)
    inst = Instance(WKL, full_tree(2), PathGen(zeros))
    assert solve_certified(inst) is zeros
    assert check_solution(inst, zeros).is_valid


def test_wkl_path_leaving_tree_is_invalid():
    inst = Instance(WKL, finite_tree(2, [(), (0,), (0, 0)]), PathGen(tabled([], 0)))
    assert check_certificate(inst, 10).is_invalid


# -- certificates and fuel ------------------------------------------------------

def test_lying_certificate_raises_certificate_error():
    inst = lpo({2: 0}, 3, cert=FirstZero(5))
    assert check_certificate(inst).is_invalid
    with pytest.raises(CertificateError):
        check_solution(inst, 3)


def test_missing_certificate_cannot_be_solved():
    with pytest.raises(CertificateError):
        solve_certified(Instance(LPO, tabled([], 1)))


def test_fuel_exhaustion_is_unknown():
    p = finite_support({}, 1, 0, fuel_limit=10)
    v = check_solution(Instance(LPO, p), 0, budget=64)
    assert v.is_unknown and "fuel" in v.reason


def test_wrong_solution_shape():
    with pytest.raises(ShapeError):
        check_solution(lpo({0: 0}, 1, cert=FirstZero(0)), tabled([], 0))


# -- parallelization ------------------------------------------------------------

def test_hat_pack_rows_round_trip():
    rows = [lpo({i: 0}, i + 1, cert=FirstZero(i)) for i in range(5)]
    h = hat_pack(rows)
    assert hat_row(h, 3).payload == rows[3].payload
    assert hat_row(h, 3).certificate == FirstZero(3)


def test_hat_from_oracle_reads_rows_through_pairing():
    f = derived("pairs", {}, lambda c: c * 7 % 11)
    h = hat_from_oracle(LPO, f)
    for i in range(100):
        row = hat_row(h, i).payload
        assert all(row(n) == f(diag_encode(i, n)) for n in range(100))


def test_hat_of_single_instance_repeats_it():
    u = lpo({1: 0}, 2, cert=FirstZero(1))
    h = hat_pack([u])
    assert all(hat_row(h, i).payload == u.payload for i in range(10))


def test_hat_solution_invalid_exactly_when_one_row_is():
    rows = [lpo({i: 0}, i + 1, cert=FirstZero(i)) for i in range(8)]
    h = hat_pack(rows)
    good = [i + 1 for i in range(8)]
    assert check_solution(h, hat_solution(good), 8).is_valid
    bad = list(good)
    bad[5] = 0
    v = check_solution(h, hat_solution(bad), 8)
    assert v.is_invalid and v.witness[0] == 5


# -- generated families satisfy their own checkers ----------------------------------

@pytest.mark.parametrize("name", ["lpo", "llpo", "lg", "tc", "gc2", "gcn", "wkl", "wkln", "wf",
                                  "s", "sf", "rc", "d", "hat_lpo", "hat_llpo", "hat_wf", "s_vecl"])
def test_solve_certified_is_valid_on_every_family(name):
    fam = family(name)
    for inst in fam.generate(11, 6):
        assert check_certificate(inst).is_valid
        assert check_solution(inst, solve_certified(inst)).is_valid


# -- the linear graphs ----------------------------------------------------------

def test_linear_graph_edges():
    L = linear_graph()
    assert edge_query(L, 2, 3) and not edge_query(L, 2, 4)


def test_tag_block_of_l0_is_a_triangle_through_the_root():
    g = tagged_prefix(0, 6)
    assert find_embedding(complete(3), g) is not None
    assert g.has_edge(0, 1) and g.has_edge(0, 2) and g.has_edge(1, 2)
    assert edge_query(tagged_linear(0), 0, 2)


def test_l1_has_a_four_cycle_and_no_triangle():
    g = tagged_prefix(1, 12)
    assert find_embedding(cycle(4), g) is not None
    assert find_embedding(complete(3), g) is None
