"""The ten acceptance criteria, each at its stated scale and time limit.

Each test records a PASS/FAIL line that is printed at the end of the run.
"""

import time

from weihrauch_lab.encodings import (OMEGA, block_encode, complete, diag_encode, edgeless,
                                     finite_support, pair_decode, pair_encode, seq_decode,
                                     seq_encode, subgraph_colorable, tree_member)
from weihrauch_lab.harness import (detects, family, mutants, oracle_crosscheck, run_case,
                                   strong_honesty, verify_reduction)
from weihrauch_lab.harness.families import MAX_HAT_ROWS, MAX_NOISE
from weihrauch_lab.problems import (LPO, FirstZero, Instance, PathGen, check_solution,
                                    hat_pack, hat_row, hat_solution, solve_certified)
from weihrauch_lab.reductions import (ENTRIES, compose, d_to_rc, d_to_s, gct_chain, hat_flatten,
                                      hat_llpo_to_gc2, hat_unflatten, hat_wf_to_s_vecl,
                                      lgk_to_lpo, lpo_to_lgk, lpo_to_sf, lpo_to_tck, parallelize,
                                      rc_to_d, s_to_wf, s_vecl_to_hat_s, sf_to_lpo, tck_to_hat_lpo,
                                      wf_to_d, wf_to_s_l, wkl_to_hat_llpo, wkln_to_wkl)


def all_valid(report):
    return report.cases == report.valid and report.unknown == 0 and report.errors == 0


def test_criterion_01_encoding_laws(criterion):
    with criterion(1, "pairing and sequence codes are bijections") as d:
        start = time.perf_counter()
        pair_bad = sum(pair_encode(*pair_decode(n)) != n for n in range(10 ** 5))
        seq_bad = 0
        for b in (2, 3, 5, OMEGA):
            seq_bad += sum(seq_encode(b, seq_decode(b, c)) != c for c in range(10 ** 4))
        elapsed = time.perf_counter() - start
        d.update(pair_failures=pair_bad, seq_failures=seq_bad, seconds=round(elapsed, 2))
        assert pair_bad == 0 and seq_bad == 0
        assert elapsed < 1.0


def test_criterion_02_oracle_equivalence(criterion):
    with criterion(2, "pruned searches agree with exhaustive enumeration up to 5 vertices") as d:
        start = time.perf_counter()
        col = oracle_crosscheck("colorability", 5)
        emb = oracle_crosscheck("embedding", 5)
        elapsed = time.perf_counter() - start
        d.update(coloring_cases=col.cases, embedding_cases=emb.cases,
                 disagreements=col.invalid + emb.invalid, seconds=round(elapsed, 1))
        assert col.invalid == 0 and emb.invalid == 0
        assert col.valid == col.cases and emb.valid == emb.cases
        assert elapsed < 30.0


def test_criterion_03_lpo_and_first_failure_colorability(criterion):
    with criterion(3, "LPO and LGk both ways and composed, k in 2..4, 500 instances") as d:
        start = time.perf_counter()
        # hand-derived: FirstZero(2), k = 2 gives LG answer 4 and LPO answer 3
        r = lpo_to_lgk(2)
        u = Instance(LPO, finite_support({2: 0}, 1, 3), FirstZero(2))
        y = solve_certified(r.forward(u))
        assert (y, r.back(u, y)) == (4, 3)
        cases = 0
        for k in (2, 3, 4):
            for red, fam in ((lpo_to_lgk(k), family("lpo")), (lgk_to_lpo(k), family("lg", k=k)),
                             (compose(lpo_to_lgk(k), lgk_to_lpo(k)), family("lpo"))):
                report = verify_reduction(red, fam, 0, 500)
                assert all_valid(report), report.summary()
                cases += report.cases
        elapsed = time.perf_counter() - start
        d.update(cases=cases, seconds=round(elapsed, 1))
        assert elapsed < 10.0


def test_criterion_04_block_encoding(criterion):
    with criterion(4, "n-ary paths survive block encoding, n in 3..5, 200 trees") as d:
        assert block_encode((2, 0, 3), 3) == (1, 1, 0, 0, 0, 0, 1, 1, 1)
        checked = 0
        for n in (3, 4, 5):
            r = wkln_to_wkl(n)
            fam = family("wkln", n=n)
            for i in range(200):
                u = fam.instance(0, i)
                x = r.forward(u)
                path = r.back(u, solve_certified(x))
                assert all(tree_member(u.payload, tuple(path.prefix(depth))) for depth in range(13))
                assert run_case(r, u, 12).status == "valid"
                checked += 1
        d.update(trees=checked)


def test_criterion_05_binary_trees_to_parallel_llpo(criterion):
    with criterion(5, "paths built from LLPO answers stay in the tree, 100 trees") as d:
        assert MAX_NOISE == 20
        r = wkl_to_hat_llpo()
        fam = family("wkl")
        for i in range(100):
            u = fam.instance(0, i)
            assert isinstance(u.certificate, PathGen)
            path = r.back(u, solve_certified(r.forward(u)))
            assert all(tree_member(u.payload, tuple(path.prefix(depth))) for depth in range(13))
        report = verify_reduction(r, fam, 0, 100, 12)
        d.update(trees=100, valid=report.valid)
        assert all_valid(report), report.summary()


def test_criterion_06_coloring_chain(criterion):
    with criterion(6, "parallel LLPO through GC2, GCn, WKLn to WKL, n in 3..4, 100 instances") as d:
        assert MAX_HAT_ROWS <= 8
        fam = family("hat_llpo")
        gadget = hat_llpo_to_gc2()
        for i in range(100):
            g = gadget.forward(fam.instance(0, i)).payload
            # G_39 has 40 vertices; colorability of it covers every smaller truncation
            assert subgraph_colorable(g, 2, 39)
        valid = 0
        for n in (3, 4):
            report = verify_reduction(gct_chain(n), fam, 0, 100)
            assert all_valid(report), report.summary()
            valid += report.valid
        d.update(instances=100, valid=valid)


def test_criterion_07_total_colorings(criterion):
    with criterion(7, "LPO and TCk both ways, 200 instances each") as d:
        fam = family("tc", k=2)
        failing = sum(solve_certified(fam.instance(0, i))(0) > 0 for i in range(200))
        assert failing > 0  # some graphs have no coloring
        reports = [verify_reduction(lpo_to_tck(2), family("lpo"), 0, 200),
                   verify_reduction(tck_to_hat_lpo(2), fam, 0, 200)]
        for report in reports:
            assert all_valid(report), report.summary()
        d.update(valid=sum(r.valid for r in reports), uncolorable=failing)


GRAPH_SUITE = [
    (wf_to_s_l(), "wf"), (s_to_wf(), "s"),
    (hat_wf_to_s_vecl(), "hat_wf"), (s_vecl_to_hat_s(), "s_vecl"),
    (sf_to_lpo(complete(2)), ("sf", complete(2))), (lpo_to_sf(complete(2)), "lpo"),
    (sf_to_lpo(edgeless(3)), ("sf", edgeless(3))), (lpo_to_sf(edgeless(3)), "lpo"),
    (rc_to_d(), "rc"), (d_to_rc(), "d"), (d_to_s(), "d"), (wf_to_d(), "wf"),
]


def _family(key):
    if isinstance(key, tuple):
        return family(key[0], pattern=key[1])
    return family(key)


def test_criterion_08_subgraph_suite(criterion):
    with criterion(8, "well-founded trees and subgraph problems, 100 instances each") as d:
        total = 0
        for r, key in GRAPH_SUITE:
            report = verify_reduction(r, _family(key), 0, 100)
            assert all_valid(report), report.summary()
            total += report.valid
        strong = 0
        for e in ENTRIES:
            r = e.make()
            if r.strong:
                honest = strong_honesty(r, family(e.family), 0, 10)
                assert honest.invalid == 0, honest.summary()
                strong += 1
        d.update(reductions=len(GRAPH_SUITE), valid=total, strong_checked=strong)


def test_criterion_09_combinators_and_mutants(criterion):
    with criterion(9, "combinator laws hold and every shipped reduction has a caught mutant") as d:
        # parallelize is row-exact and a corrupted row is caught in that row only
        base = lpo_to_lgk(2)
        pr = parallelize(base)
        rows = [family("lpo").instance(9, i) for i in range(8)]
        u = hat_pack(rows)
        x = pr.forward(u)
        assert all(hat_row(x, i).payload == base.forward(rows[i]).payload for i in range(8))
        y = [solve_certified(hat_row(x, i)) for i in range(8)]
        y[5] += 1
        back = pr.back(u, hat_solution(y))
        assert [check_solution(rows[i], back.row(i)).is_valid for i in range(8)] == \
            [i != 5 for i in range(8)]
        # flatten and unflatten are inverse, row for row
        grid = hat_pack([hat_pack([family("lpo").instance(i, j) for j in range(20)])
                         for i in range(20)])
        flat = hat_flatten(LPO).forward(grid)
        again = hat_unflatten(LPO).forward(flat)
        for i in range(20):
            for j in range(20):
                assert hat_row(flat, diag_encode(i, j)).payload == hat_row(hat_row(grid, i), j).payload
                assert hat_row(hat_row(again, i), j).payload == hat_row(hat_row(grid, i), j).payload
        # composition is associative up to verdicts
        r1, r2, r3 = lpo_to_lgk(2), lgk_to_lpo(2), lpo_to_lgk(3)
        left, right = compose(compose(r1, r2), r3), compose(r1, compose(r2, r3))
        for i in range(50):
            v = family("lpo").instance(4, i)
            assert run_case(left, v, 64).status == run_case(right, v, 64).status == "valid"
        # fault injection
        caught = {}
        for e in ENTRIES:
            fam = family(e.family)
            for m in mutants(e):
                caught[m.name] = detects(m, fam, 0, 20)
        assert all(n > 0 for n in caught.values()), caught
        d.update(mutants=len(caught), least_detections=min(caught.values()))


def test_criterion_10_determinism(criterion):
    with criterion(10, "identical seeds give byte-identical reports; suite under 60 s") as d:
        pairs = [(lpo_to_lgk(3), family("lpo")), (wkl_to_hat_llpo(), family("wkl")),
                 (s_vecl_to_hat_s(), family("s_vecl"))]
        for r, fam in pairs:
            a = verify_reduction(r, fam, 17, 25).to_json()
            b = verify_reduction(r, fam, 17, 25).to_json()
            assert a == b
        d.update(reports_compared=len(pairs))
