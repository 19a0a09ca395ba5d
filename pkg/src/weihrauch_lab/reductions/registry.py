"""Named reductions, their anchors, parameters and default source families."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from ..encodings import FiniteGraph, complete
from ..problems import LPO, ProblemId
from .chain import gc2_to_gcn, gcn_to_wkln, gct_chain, gct_cycle, hat_llpo_to_gc2
from .colorability import lgk_to_lpo, lpo_to_lgk, lpo_to_tck, tck_to_hat_lpo
from .core import Reduction, compose, hat_flatten, hat_unflatten
from .subgraphs import (d_to_rc, d_to_s, hat_wf_to_s_vecl, lpo_to_sf, rc_to_d, s_to_wf,
                        s_vecl_to_hat_s, sf_to_lpo, wf_to_d, wf_to_s_l)
from .trees import wkl_to_hat_llpo, wkln_to_wkl

EDGE = complete(2)


@dataclass(frozen=True)
class Entry:
    name: str
    anchor: str
    params: tuple  # subset of ("k", "n", "pattern")
    family: str
    build: Callable[..., Reduction]
    summary: str

    def make(self, k: Optional[int] = None, n: Optional[int] = None,
             pattern: Optional[FiniteGraph] = None) -> Reduction:
        kw = {}
        if "k" in self.params:
            kw["k"] = k if k is not None else 2
        if "n" in self.params:
            kw["n"] = n if n is not None else 3
        if "pattern" in self.params:
            kw["pattern"] = pattern if pattern is not None else EDGE
        return self.build(**kw)


def _lpo_lg_roundtrip(k):
    return compose(lpo_to_lgk(k), lgk_to_lpo(k))


ENTRIES: List[Entry] = [
    Entry("red_lpo_to_lgk", "Lemma LGL", ("k",), "lpo", lambda k: lpo_to_lgk(k),
          "LPO to first-failure k-colorability"),
    Entry("red_lgk_to_lpo", "Lemma LGL", ("k",), "lg", lambda k: lgk_to_lpo(k),
          "first-failure k-colorability to LPO"),
    Entry("red_lpo_lgk_roundtrip", "Lemma TRANS", ("k",), "lpo", _lpo_lg_roundtrip,
          "LPO to LGk to LPO"),
    Entry("red_wkln_to_wkl", "Lemma GCL0", ("n",), "wkln", lambda n: wkln_to_wkl(n),
          "n-ary trees to binary trees by block encoding"),
    Entry("red_wkl_to_hat_llpo", "Lemma BGP", (), "wkl", wkl_to_hat_llpo,
          "binary trees to parallel LLPO"),
    Entry("red_hat_llpo_to_gc2", "Lemma GCL1", (), "hat_llpo", hat_llpo_to_gc2,
          "parallel LLPO to 2-colorings"),
    Entry("red_gc2_to_gcn", "Lemma GCLm", ("n",), "gc2", lambda n: gc2_to_gcn(n),
          "2-colorings to n-colorings by apex vertices"),
    Entry("red_gcn_to_wkln", "Lemma GCL2", ("n",), "gcn", lambda n: gcn_to_wkln(n),
          "n-colorings to paths through the tree of partial colorings"),
    Entry("red_gct_chain", "Theorem GCT", ("n",), "hat_llpo", lambda n: gct_chain(n),
          "parallel LLPO through GC2, GCn and WKLn down to WKL"),
    Entry("red_gct_cycle", "Theorem GCT", (), "wkl", gct_cycle,
          "WKL to parallel LLPO to GC2 to WKL"),
    Entry("red_lpo_to_tck", "Theorem TGC1", ("k",), "lpo", lambda k: lpo_to_tck(k),
          "LPO to total k-coloring"),
    Entry("red_tck_to_hat_lpo", "Theorem TGC1", ("k",), "tc", lambda k: tck_to_hat_lpo(k),
          "total k-coloring to parallel LPO"),
    Entry("red_wf_to_s_l", "Theorem PW1", (), "wf", wf_to_s_l,
          "well-founded trees to the ray as a subgraph"),
    Entry("red_s_to_wf", "Theorem PW1", (), "s", s_to_wf,
          "subgraph problem to well-founded trees"),
    Entry("red_hat_wf_to_s_vecl", "Theorem PW3", (), "hat_wf", hat_wf_to_s_vecl,
          "parallel WF to tagged rays in one graph"),
    Entry("red_s_vecl_to_hat_s", "Theorem PW3", (), "s_vecl", s_vecl_to_hat_s,
          "tagged rays to parallel S"),
    Entry("red_sf_to_lpo", "Theorem PW4", ("pattern",), "sf", lambda pattern: sf_to_lpo(pattern),
          "fixed finite pattern to LPO"),
    Entry("red_lpo_to_sf", "Theorem PW4", ("pattern",), "lpo", lambda pattern: lpo_to_sf(pattern),
          "LPO to a fixed finite pattern"),
    Entry("red_rc_to_d", "Theorem PW5", (), "rc", rc_to_d, "repeated color to independent set"),
    Entry("red_d_to_rc", "Theorem PW5", (), "d", d_to_rc, "independent set to repeated color"),
    Entry("red_d_to_s", "Theorem PW5", (), "d", d_to_s, "independent set to the subgraph problem"),
    Entry("red_wf_to_d", "Theorem PW5", (), "wf", wf_to_d,
          "well-founded trees to independent sets of the incomparability graph"),
    Entry("red_hat_flatten", "Lemma WKLH", (), "hat_hat_lpo", lambda: hat_flatten(LPO),
          "doubly parallel LPO to parallel LPO"),
    Entry("red_hat_unflatten", "Lemma WKLH", (), "hat_lpo", lambda: hat_unflatten(LPO),
          "parallel LPO to doubly parallel LPO"),
]

REGISTRY: Dict[str, Entry] = {e.name: e for e in ENTRIES}

# short spellings accepted on the command line
ALIASES = {"lpo_to_lg": "red_lpo_to_lgk", "lg_to_lpo": "red_lgk_to_lpo",
           "lpo_to_tc": "red_lpo_to_tck", "tc_to_hat_lpo": "red_tck_to_hat_lpo"}


def lookup(name: str) -> Entry:
    key = ALIASES.get(name, name)
    if key not in REGISTRY and "red_" + key in REGISTRY:
        key = "red_" + key
    if key not in REGISTRY:
        raise KeyError(f"unknown reduction {name!r}")
    return REGISTRY[key]


def source_problem(entry: Entry, **params) -> ProblemId:
    return entry.make(**params).source
