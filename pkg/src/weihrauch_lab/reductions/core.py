"""Reductions as values, and the ways to combine them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Tuple

from ..encodings import diag_decode, diag_encode
from ..problems import (Hat, HatSolution, Instance, ProblemId, hat_lazy, hat_row,
                        lazy_hat_solution)


@dataclass(frozen=True)
class Reduction:
    """``forward`` turns a source instance into a target instance (certificate
    included); ``back(u, y)`` turns a target solution ``y`` for ``forward(u)``
    into a source solution for ``u``. ``strong`` promises ``back`` ignores ``u``.
    """

    name: str
    source: ProblemId
    target: ProblemId
    forward_fn: Callable[[Instance], Instance] = field(repr=False)
    back_fn: Callable[[Instance, Any], Any] = field(repr=False)
    strong: bool = False
    anchor: str = ""
    _cache: Dict[int, Tuple[Instance, Instance]] = field(default_factory=dict, compare=False, repr=False)

    def forward(self, u: Instance) -> Instance:
        if u.problem != self.source:
            raise ValueError(f"{self.name} expects {self.source} instances, got {u.problem}")
        hit = self._cache.get(id(u))
        if hit is not None and hit[0] is u:
            return hit[1]
        x = self.forward_fn(u)
        if x.problem != self.target:
            raise AssertionError(f"{self.name} produced {x.problem}, declared {self.target}")
        if len(self._cache) > 512:
            self._cache.clear()
        self._cache[id(u)] = (u, x)
        return x

    def back(self, u: Instance, y: Any) -> Any:
        return self.back_fn(u, y)

    def with_back(self, name: str, back_fn: Callable[[Instance, Any], Any]) -> "Reduction":
        """Same forward map, different back map (used to build mutants)."""
        return Reduction(name, self.source, self.target, self.forward_fn, back_fn,
                         self.strong, self.anchor)

    def with_forward(self, name: str, forward_fn: Callable[[Instance], Instance]) -> "Reduction":
        return Reduction(name, self.source, self.target, forward_fn, self.back_fn,
                         self.strong, self.anchor)


def identity(problem: ProblemId) -> Reduction:
    return Reduction(f"identity[{problem}]", problem, problem,
                     lambda u: u, lambda u, y: y, strong=True)


def compose(r1: Reduction, r2: Reduction) -> Reduction:
    """``r1`` reduces Q to P and ``r2`` reduces P to R; the result reduces Q to R."""
    if r1.target != r2.source:
        raise ValueError(f"cannot compose {r1.name} (to {r1.target}) with {r2.name} (from {r2.source})")

    def back(u, z):
        return r1.back(u, r2.back(r1.forward(u), z))

    return Reduction(f"{r1.name};{r2.name}", r1.source, r2.target,
                     lambda u: r2.forward(r1.forward(u)), back,
                     r1.strong and r2.strong, "composition")


def parallelize(r: Reduction) -> Reduction:
    """Apply ``r`` row by row to parallelized instances."""

    def forward(u):
        return hat_lazy(r.target, lambda i: r.forward(hat_row(u, i)),
                        {"parallel": r.name, "of": u.describe()}, u.payload.row_count)

    def back(u, y):
        return lazy_hat_solution(lambda i: r.back(hat_row(u, i), y.row(i)),
                                 {"parallel_back": r.name, "y": y.describe()})

    return Reduction(f"hat[{r.name}]", Hat(r.source), Hat(r.target), forward, back,
                     r.strong, "parallelization")


def hat_flatten(base: ProblemId) -> Reduction:
    """Rows ``(i, j)`` of a doubly parallelized instance become row ``diag_encode(i, j)``."""

    def forward(u):
        def row(k):
            i, j = diag_decode(k)
            return hat_row(hat_row(u, i), j)

        return hat_lazy(base, row, {"flatten": u.describe()})

    def back(u, y):
        def outer(i):
            return lazy_hat_solution(lambda j: y.row(diag_encode(i, j)),
                                     {"unflatten_row": i, "y": y.describe()})

        return lazy_hat_solution(outer, {"unflatten": y.describe()})

    return Reduction(f"hat_flatten[{base}]", Hat(Hat(base)), Hat(base), forward, back,
                     True, "Lemma WKLH")


def hat_unflatten(base: ProblemId) -> Reduction:
    """Inverse re-indexing: row ``k`` of a parallelized instance becomes row ``diag_decode(k)``."""

    def forward(u):
        def outer(i):
            return hat_lazy(base, lambda j: hat_row(u, diag_encode(i, j)),
                            {"unflatten_row": i, "of": u.describe()})

        return hat_lazy(Hat(base), outer, {"unflatten": u.describe()})

    def back(u, y):
        def row(k):
            i, j = diag_decode(k)
            return y.row(i).row(j)

        return lazy_hat_solution(row, {"flatten": y.describe()})

    return Reduction(f"hat_unflatten[{base}]", Hat(base), Hat(Hat(base)), forward, back,
                     True, "Lemma WKLH")


def solution_rows(y: HatSolution, count: int):
    return [y.row(i) for i in range(count)]
