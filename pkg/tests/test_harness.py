"""Families, the engine, cross-checks and fault injection."""

import dataclasses
import itertools
import json

import pytest

from weihrauch_lab.encodings import complete, edge_query, find_embedding, finite_subgraph, tree_member
from weihrauch_lab.harness import (FAMILY_NAMES, FamilyMismatch, Report, detects, family, generate,
                                   mutants, oracle_crosscheck, run_case, sample, strong_honesty,
                                   unlabelled_graphs, verify_reduction)
from weihrauch_lab.harness.crosscheck import agree_on
from weihrauch_lab.problems import (EmbedsAt, FirstZero, NoZero, PathGen, check_certificate,
                                    check_solution, first_zero, solve_certified)
from weihrauch_lab.reductions import (ENTRIES, compose, lgk_to_lpo, lpo_to_lgk, lpo_to_sf,
                                      wf_to_s_l)


# -- families --------------------------------------------------------------------

def test_lpo_family_certificates_hold():
    insts = generate(family("lpo"), 7, 3)
    assert len(insts) == 3
    for u in insts:
        assert check_certificate(u).is_valid
        c = u.certificate
        if isinstance(c, FirstZero):
            assert first_zero(u.payload, c.index + 1) == c.index
        else:
            assert isinstance(c, NoZero) and first_zero(u.payload, 4096) is None


def test_binary_path_plus_noise_keeps_the_path():
    fam = family("wkl")
    for u in fam.generate(3, 20):
        assert isinstance(u.certificate, PathGen)
        p = u.certificate.path
        assert all(tree_member(u.payload, tuple(p.prefix(d))) for d in range(17))


def test_planted_pattern_is_found_in_the_truncation():
    fam = family("sf", pattern=complete(3))
    planted = 0
    for u in fam.generate(4, 30):
        if not isinstance(u.certificate, EmbedsAt):
            continue
        planted += 1
        m = u.certificate.mapping
        images = [m(v) for v in range(3)]
        assert all(edge_query(u.payload, a, b) for a, b in itertools.combinations(images, 2))
        assert find_embedding(complete(3), finite_subgraph(u.payload, max(images)), True) is not None
    assert planted > 5


@pytest.mark.parametrize("name", FAMILY_NAMES)
def test_families_are_deterministic(name):
    fam = family(name)
    a = [u.describe() for u in fam.generate(12, 3)]
    b = [u.describe() for u in fam.generate(12, 3)]
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_family_rejects_zero_count_and_unknown_names():
    with pytest.raises(ValueError):
        family("lpo").generate(0, 0)
    with pytest.raises(KeyError):
        family("nope")


# -- the engine ------------------------------------------------------------------

def test_lpo_to_lg_acceptance_run():
    report = verify_reduction(lpo_to_lgk(2), family("lpo"), 1, 100, 64)
    assert (report.cases, report.valid, report.unknown, report.errors) == (100, 100, 0, 0)
    assert report.ok


def test_round_trip_composite_is_valid():
    r = compose(lpo_to_lgk(2), lgk_to_lpo(2))
    report = verify_reduction(r, family("lpo"), 1, 50)
    assert report.valid == 50


def test_off_by_one_back_map_is_caught_with_witnesses():
    r = lpo_to_lgk(2)
    broken = r.with_back("off_by_one", lambda u, y: y - 2 if y > 0 else 0)
    report = verify_reduction(broken, family("lpo"), 1, 50)
    assert report.invalid > 0 and not report.ok
    f = report.to_dict()["failures"][0]
    assert f["status"] == "invalid" and f["stage"] == "source check"
    assert f["witness"]["status"] == "invalid" and f["witness"]["witness"] is not None


def test_reports_are_byte_identical_for_identical_inputs():
    a = verify_reduction(wf_to_s_l(), family("wf"), 5, 20).to_json()
    b = verify_reduction(wf_to_s_l(), family("wf"), 5, 20).to_json()
    assert a == b
    doc = json.loads(a)
    assert set(doc) == {f.name for f in dataclasses.fields(Report)}


def test_report_counts_add_up():
    broken = lpo_to_lgk(2).with_back("flip", lambda u, y: 0)
    report = verify_reduction(broken, family("lpo"), 2, 40)
    assert report.valid + report.invalid + report.unknown + report.errors == report.cases == 40
    assert len(report.failures) == report.cases - report.valid


def test_family_mismatch():
    with pytest.raises(FamilyMismatch):
        verify_reduction(lpo_to_lgk(2), family("wf"), 0, 1)


def test_lying_certificate_is_an_error_not_invalid():
    from weihrauch_lab.encodings import finite_support
    from weihrauch_lab.problems import LPO, Instance
    liar = Instance(LPO, finite_support({1: 0}, 1, 2), FirstZero(4))
    case = run_case(compose(lpo_to_lgk(2), lgk_to_lpo(2)), liar, 64)
    assert case.status == "error"


def test_uncertified_instance_is_an_error_not_invalid():
    from weihrauch_lab.encodings import finite_support
    from weihrauch_lab.problems import LPO, Instance
    bare = Instance(LPO, finite_support({}, 1, 0))
    assert run_case(lpo_to_lgk(2), bare, 64).status == "error"


def test_running_out_of_fuel_is_unknown():
    from weihrauch_lab.encodings import finite_support
    from weihrauch_lab.problems import LPO, Instance
    short = Instance(LPO, finite_support({30: 0}, 1, 31, fuel_limit=10), FirstZero(30))
    case = run_case(lpo_to_lgk(2), short, 64)
    assert case.status == "unknown" and "fuel" in case.detail["reason"]


# -- brute-force cross-checks --------------------------------------------------------------

def test_colorability_crosscheck_small():
    report = oracle_crosscheck("colorability", 4)
    assert report.cases > 0 and report.invalid == 0


def test_embedding_crosscheck_small():
    report = oracle_crosscheck("embedding", 4)
    assert report.cases > 0 and report.invalid == 0


def test_crosscheck_size_is_capped():
    with pytest.raises(ValueError):
        oracle_crosscheck("colorability", 7)


def test_unlabelled_graph_counts():
    # number of graphs on n vertices up to isomorphism
    assert [len(unlabelled_graphs(n)) for n in range(1, 6)] == [1, 2, 4, 11, 34]


def test_triangle_into_triangle():
    assert agree_on(complete(3), complete(3)) == (True, True)
    assert agree_on(complete(3), complete(3), induced=True) == (True, True)


# -- fault injection and the strong flag -----------------------------------------------

@pytest.mark.parametrize("entry", [e for e in ENTRIES if e.name in (
    "red_lpo_to_lgk", "red_wkln_to_wkl", "red_hat_llpo_to_gc2", "red_lpo_to_tck",
    "red_wf_to_s_l", "red_hat_flatten")], ids=lambda e: e.name)
def test_mutants_are_detected(entry):
    fam = family(entry.family)
    for m in mutants(entry):
        assert detects(m, fam, 0, 12) > 0, m.name


def test_strong_reductions_ignore_the_source():
    report = strong_honesty(wf_to_s_l(), family("wf"), 0, 10)
    assert report.valid == 10


def test_falsely_strong_reduction_is_exposed():
    r = lpo_to_sf(complete(2))
    assert not r.strong
    pretender = dataclasses.replace(r, strong=True)
    report = strong_honesty(pretender, family("lpo"), 0, 20)
    assert report.invalid > 0


def test_sample_views():
    from weihrauch_lab.encodings import tabled
    from weihrauch_lab.problems import hat_solution
    assert sample(3) == 3
    assert sample(tabled([1], 0), 4) == [1, 0, 0, 0]
    assert sample(hat_solution([1, 2]), 2) == [1, 2]


def test_every_family_solution_checks_out():
    for name in FAMILY_NAMES:
        for u in family(name).generate(21, 2):
            assert check_solution(u, solve_certified(u)).is_valid, name
