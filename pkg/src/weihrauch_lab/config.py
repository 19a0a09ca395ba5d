"""Default budgets shared by checkers, generators and the command line."""

import os

#: truncation bound handed to checkers when none is given
DEFAULT_BUDGET = 64
#: index fuel for generated number functions and edge oracles
DEFAULT_FUEL = 4096
#: deepest level searched when probing finitely branching trees
TREE_DEPTH = 16
#: vertices examined by coloring checks in the harness
COLORING_BOUND = 40
#: rows examined when a parallelized instance has infinitely many rows
HAT_ROWS = 16
#: cap on unbounded searches (first zero, first nonzero) run by back maps
SEARCH_LIMIT = 1 << 16


def budget_from_env(default: int = DEFAULT_BUDGET) -> int:
    raw = os.environ.get("WEIHRAUCH_LAB_BUDGET")
    if raw is None:
        return default
    value = int(raw)
    if value < 1:
        raise ValueError(f"WEIHRAUCH_LAB_BUDGET must be positive, got {raw!r}")
    return value
