"""Deliberately broken reductions, to show the engine actually catches mistakes,
and a check that reductions flagged strong really ignore the source instance."""

from __future__ import annotations

from typing import Any, Callable, Dict, List

from .. import config
from ..encodings import OracleFn, derived, diag_encode, tabled
from ..problems import HatSolution, first_zero, lazy_hat_solution, solve_certified
from ..reductions import Reduction
from ..reductions.chain import u_vertex, v_vertex
from ..reductions.registry import Entry
from .engine import Report, run_case
from .families import CertifiedFamily

Mutation = Callable[[Reduction, Dict[str, Any]], Reduction]


def _flip_number(r: Reduction, tag: str = "flip") -> Reduction:
    return r.with_back(f"{r.name}~{tag}", lambda u, y: 1 - r.back(u, y))


def _flip_function(r: Reduction) -> Reduction:
    def back(u, y):
        v = r.back(u, y)
        return derived("flipped", {"of": v.describe()}, lambda n: 1 - v(n))
    return r.with_back(f"{r.name}~flip", back)


def _flip_rows(r: Reduction) -> Reduction:
    def back(u, y):
        v = r.back(u, y)
        return lazy_hat_solution(lambda i: 1 - v.row(i), {"flipped": v.describe()})
    return r.with_back(f"{r.name}~flip", back)


def _transposed(r: Reduction) -> Reduction:
    # read row (j, i) where (i, j) was meant
    def back(u, y):
        return lazy_hat_solution(
            lambda i: lazy_hat_solution(lambda j: y.row(diag_encode(j, i)), {"t": [i, y.describe()]}),
            {"transposed": y.describe()})
    return r.with_back(f"{r.name}~transposed", back)


def _transposed_flat(r: Reduction) -> Reduction:
    from ..encodings import diag_decode

    def back(u, y):
        def row(k):
            i, j = diag_decode(k)
            return y.row(j).row(i)
        return lazy_hat_solution(row, {"transposed": y.describe()})
    return r.with_back(f"{r.name}~transposed", back)


def _mutants_for(entry: Entry, p: Dict[str, Any]) -> List[Reduction]:
    r = entry.make(**p)
    k, n = p.get("k", 2), p.get("n", 3)
    name = entry.name
    if name == "red_lpo_to_lgk":
        return [r.with_back(r.name + "~off_by_one", lambda u, y: y - k if y > 0 else 0)]
    if name == "red_lgk_to_lpo":
        return [r.with_back(r.name + "~off_by_one", lambda u, y: y)]
    if name == "red_lpo_lgk_roundtrip":
        return [r.with_back(r.name + "~shift", lambda u, y: r.back(u, y) + 1)]
    if name == "red_wkln_to_wkl":
        # block width n instead of n - 1
        return [r.with_back(r.name + "~width", lambda u, y: derived(
            "wide_blocks", {"y": y.describe()}, lambda i: sum(y(i * n + j) for j in range(n))))]
    if name in ("red_wkl_to_hat_llpo", "red_gct_cycle", "red_gcn_to_wkln"):
        if name == "red_gcn_to_wkln":
            return [r.with_back(r.name + "~constant", lambda u, y: tabled([], 0))]
        return [_flip_function(r)]
    if name == "red_hat_llpo_to_gc2":
        return [r.with_back(r.name + "~same_color", lambda u, y: lazy_hat_solution(
            lambda i: 1 if y(u_vertex(i)) == y(v_vertex(i, 0)) else 0, {"same": y.describe()}))]
    if name == "red_gc2_to_gcn":
        s = n - 2
        return [r.with_back(r.name + "~shifted_read", lambda u, y: derived(
            "apex_misread", {"y": y.describe()}, lambda v: 0 if y(v + s - 1) == y(s) else 1))]
    if name == "red_gct_chain":
        return [_flip_rows(r)]
    if name == "red_lpo_to_tck":
        return [r.with_back(r.name + "~no_search", lambda u, f: f(0) - k if f(0) > 0 else 0)]
    if name == "red_tck_to_hat_lpo":
        def early(u, y):
            head = y.row(0)
            if head > 0:
                return tabled([max(head - 2, 0)], 0)
            return r.back(u, y)
        return [r.with_back(r.name + "~early_failure", early)]
    if name in ("red_wf_to_s_l", "red_s_to_wf", "red_wf_to_d", "red_sf_to_lpo",
                "red_rc_to_d", "red_d_to_rc", "red_d_to_s"):
        return [_flip_number(r)]
    if name == "red_hat_wf_to_s_vecl":
        return [_flip_rows(r)]
    if name == "red_s_vecl_to_hat_s":
        return [r.with_back(r.name + "~next_row", lambda u, y: derived(
            "next_row", {"y": y.describe()}, lambda m: y.row(m + 1)))]
    if name == "red_lpo_to_sf":
        def no_plus_one(u, y):
            if y == 0:
                return 0
            z = first_zero(u.payload, config.SEARCH_LIMIT)
            return z if z is not None else 0
        return [r.with_back(r.name + "~off_by_one", no_plus_one)]
    if name == "red_hat_flatten":
        return [_transposed(r)]
    if name == "red_hat_unflatten":
        return [_transposed_flat(r)]
    raise KeyError(f"no mutants for {name}")


def mutants(entry: Entry, **params) -> List[Reduction]:
    """At least one wrong variant of the entry's reduction (same forward map)."""
    return _mutants_for(entry, params)


# -- strong-flag honesty -----------------------------------------------------------

def sample(sol: Any, width: int = 16) -> Any:
    """A finite, comparable view of a solution."""
    if isinstance(sol, int):
        return sol
    if isinstance(sol, OracleFn):
        return sol.prefix(width)
    if isinstance(sol, HatSolution):
        return [sample(sol.row(i), width) for i in range(min(width, 8))]
    raise TypeError(f"cannot sample {type(sol).__name__}")


def strong_honesty(r: Reduction, family: CertifiedFamily, seed: int, count: int,
                   budget: int = config.DEFAULT_BUDGET) -> Report:
    """For a reduction flagged strong, ``back`` must give the same answer when handed
    an unrelated source instance (a decoy) in place of the real one."""
    report = Report(f"strong:{r.name}", family.name, seed, count, budget)
    for i in range(count):
        u, decoy = family.instance(seed, i), family.instance(seed + 1, i)
        report.cases += 1
        try:
            y = solve_certified(r.forward(u), budget)
            same = sample(r.back(u, y)) == sample(r.back(decoy, y))
        except Exception as exc:  # a back map that trips over the decoy reads it
            same = False
            reason = f"{type(exc).__name__}: {exc}"
        else:
            reason = "back map changed with the source instance"
        if same:
            report.valid += 1
        else:
            report.invalid += 1
            report.failures.append({"index": i, "seed": seed, "status": "invalid", "reason": reason})
    return report


def detects(mutant: Reduction, family: CertifiedFamily, seed: int, count: int,
            budget: int = config.DEFAULT_BUDGET) -> int:
    """Number of cases on which the mutant is judged Invalid."""
    return sum(run_case(mutant, family.instance(seed, i), budget).status == "invalid"
               for i in range(count))
