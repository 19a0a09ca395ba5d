"""Certified instance families, the verification engine, brute-force cross-checks."""

from .crosscheck import (all_graphs, brute_colorable, brute_embeds, oracle_crosscheck,
                         pulled_back_masks, unlabelled_graphs)
from .engine import Case, FamilyMismatch, Report, run_case, verify_reduction
from .families import FAMILY_NAMES, CertifiedFamily, family, generate
from .mutants import detects, mutants, sample, strong_honesty
