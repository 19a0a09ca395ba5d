"""Reductions between problems: forward and back maps, and combinators."""

from .chain import gc2_to_gcn, gcn_to_wkln, gct_chain, gct_cycle, hat_llpo_to_gc2
from .colorability import lgk_to_lpo, lpo_to_lgk, lpo_to_tck, tck_to_hat_lpo
from .core import Reduction, compose, hat_flatten, hat_unflatten, identity, parallelize
from .registry import ALIASES, ENTRIES, REGISTRY, Entry, lookup
from .subgraphs import (d_to_rc, d_to_s, hat_wf_to_s_vecl, lpo_to_sf, rc_to_d, s_to_wf,
                        s_vecl_to_hat_s, sf_to_lpo, wf_to_d, wf_to_s_l)
from .trees import block_tree, wkl_to_hat_llpo, wkln_to_wkl
