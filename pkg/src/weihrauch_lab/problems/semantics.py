"""What counts as an input, a certificate and a solution for each problem.

Every check runs to a finite ``budget``. Statements about the candidate
solution itself (a coloring, a path) are checked on the truncation only.
Statements about the infinite input that an answer asserts ("p never
vanishes", "the tree is well founded") are settled by the certificate once it
survives re-verification, and are ``Unknown`` without one.
"""

from __future__ import annotations

from typing import Any, Callable, Dict, Optional, Tuple, Union

from .. import config
from ..encodings import (FiniteGraph, FuelExhausted, GraphCode, OracleFn, TreeCode, check_coloring,
                         edge_query, edgeless, find_embedding, finite_subgraph, subgraph_colorable,
                         tabled, tree_has_level, tree_member)
from ..verdict import Verdict, combine
from .certificates import (AllZero, CertificateError, EmbedsAt, Finite, FirstNonzero, FirstZero,
                           HatOf, KnownAnswer, KnownColoring, NoEmbedding, NoZero, PathGen)
from .ids import ProblemId
from .instances import (Instance, check_solution_shape, hat_row,
                        lazy_hat_solution)
from .linear import linear_graph, tagged_linear


class NoSolution(Exception):
    """The certificate shows the instance is outside the problem's domain."""


# -- small searches ----------------------------------------------------------

def first_zero(p: OracleFn, limit: int) -> Optional[int]:
    for t in range(limit):
        if p(t) == 0:
            return t
    return None


def first_nonzero(p: OracleFn, limit: int) -> Optional[int]:
    for t in range(limit):
        if p(t) != 0:
            return t
    return None


def _truncation(g: GraphCode, budget: int) -> FiniteGraph:
    key = ("truncation", budget)
    if key not in g._memo:
        g._memo[key] = finite_subgraph(g, budget - 1)
    return g._memo[key]


def _hat_rows(inst: Instance, budget: int) -> int:
    count = inst.payload.row_count
    return min(budget, count if count is not None else config.HAT_ROWS)


def _expect(cert, *kinds):
    if not isinstance(cert, kinds):
        names = "/".join(k.__name__ for k in kinds)
        raise CertificateError(f"expected a {names} certificate, got {type(cert).__name__}")


def _members_prefix(t: TreeCode, path: OracleFn, length: int, alphabet: Optional[int]) -> Verdict:
    seq = []
    for i in range(length + 1):
        if not tree_member(t, seq):
            return Verdict.invalid(tuple(seq), f"prefix of length {i} is not in the tree")
        if i == length:
            break
        x = path(i)
        if x < 0 or (alphabet is not None and x >= alphabet):
            return Verdict.invalid(("label", i, x), f"path label {x} outside the alphabet")
        seq.append(x)
    return Verdict.valid()


def _bounded_has_level(t: TreeCode, depth: int, width: int) -> bool:
    """Level search that looks at children labelled below ``width`` only."""
    if t.finitely_branching:
        return tree_has_level(t, depth)
    key = ("omega_level", depth, width)
    if key in t._ext:
        return t._ext[key]

    def dfs(node: Tuple[int, ...]) -> bool:
        if len(node) == depth:
            return True
        for x in range(width):
            child = node + (x,)
            if t.node_fn(t.code(child)) > 0 and dfs(child):
                return True
        return False

    result = t.node_fn(0) > 0 and dfs(())
    t._ext[key] = result
    return result


# -- per-problem semantics ---------------------------------------------------

class Semantics:
    """Base class; subclasses fill in the hooks for one problem family."""

    def check_input(self, inst: Instance, budget: int) -> Verdict:
        return Verdict.valid("total problem")

    def check_certificate(self, inst: Instance, budget: int) -> Verdict:
        raise NotImplementedError

    def check(self, inst: Instance, cand: Any, budget: int) -> Verdict:
        raise NotImplementedError

    def solve(self, inst: Instance, budget: int) -> Any:
        raise NotImplementedError


class LPOSemantics(Semantics):
    def check_certificate(self, inst, budget):
        p, cert = inst.payload, inst.certificate
        _expect(cert, FirstZero, NoZero)
        if isinstance(cert, FirstZero):
            z = first_zero(p, cert.index + 1)
            if z != cert.index:
                return Verdict.invalid(z, f"first zero is {z}, certificate says {cert.index}")
            return Verdict.valid()
        z = first_zero(p, budget)
        return Verdict.valid() if z is None else Verdict.invalid(z, f"p({z}) = 0 contradicts NoZero")

    def check(self, inst, cand, budget):
        p = inst.payload
        if cand < 0:
            return Verdict.invalid(cand, "negative answer")
        if cand > 0:
            j = cand - 1
            if p(j) != 0:
                return Verdict.invalid(("p", j, p(j)), f"p({j}) is not zero")
            z = first_zero(p, j)
            if z is not None:
                return Verdict.invalid(("p", z, 0), f"earlier zero at {z}")
            return Verdict.valid()
        z = first_zero(p, budget)
        if z is not None:
            return Verdict.invalid(("p", z, 0), f"answer 0 but p({z}) = 0")
        cert = inst.certificate
        if isinstance(cert, NoZero):
            return Verdict.valid()
        if isinstance(cert, FirstZero):
            return Verdict.invalid(("first_zero", cert.index), "certificate places a zero")
        return Verdict.unknown(f"no zero below {budget}; cannot confirm the rest")

    def solve(self, inst, budget):
        cert = inst.certificate
        _expect(cert, FirstZero, NoZero)
        return cert.index + 1 if isinstance(cert, FirstZero) else 0


def _llpo_allows(answer: int, j: int) -> bool:
    # first nonzero at odd j permits 0, at even j permits 1
    return (answer == 0) == (j % 2 == 1)


class LLPOSemantics(Semantics):
    def check_certificate(self, inst, budget):
        p, cert = inst.payload, inst.certificate
        _expect(cert, FirstNonzero, AllZero, KnownAnswer)
        if isinstance(cert, FirstNonzero):
            j = first_nonzero(p, cert.index + 1)
            if j != cert.index:
                return Verdict.invalid(j, f"first nonzero is {j}, certificate says {cert.index}")
            return Verdict.valid()
        j = first_nonzero(p, budget)
        if isinstance(cert, AllZero):
            return Verdict.valid() if j is None else Verdict.invalid(j, "AllZero contradicted")
        if cert.value not in (0, 1):
            return Verdict.invalid(cert.value, "LLPO answers are 0 or 1")
        if j is not None and not _llpo_allows(cert.value, j):
            return Verdict.invalid(j, f"first nonzero at {j} forbids {cert.value}")
        return Verdict.valid()

    def check(self, inst, cand, budget):
        if cand not in (0, 1):
            return Verdict.invalid(cand, "LLPO answers are 0 or 1")
        j = first_nonzero(inst.payload, budget)
        cert = inst.certificate
        if j is None and isinstance(cert, FirstNonzero):
            j = cert.index
        if j is not None:
            if _llpo_allows(cand, j):
                return Verdict.valid()
            return Verdict.invalid(("first_nonzero", j), f"first nonzero at {j} forbids {cand}")
        if isinstance(cert, AllZero):
            return Verdict.valid()
        if isinstance(cert, KnownAnswer) and cert.value == cand:
            return Verdict.valid()
        return Verdict.unknown(f"no nonzero value below {budget}")

    def solve(self, inst, budget):
        cert = inst.certificate
        _expect(cert, FirstNonzero, AllZero, KnownAnswer)
        if isinstance(cert, FirstNonzero):
            return 0 if cert.index % 2 == 1 else 1
        if isinstance(cert, AllZero):
            return 0
        return cert.value


class LGSemantics(Semantics):
    def check_certificate(self, inst, budget):
        g, k, cert = inst.payload, inst.problem.k, inst.certificate
        _expect(cert, KnownAnswer, KnownColoring)
        if isinstance(cert, KnownColoring):
            return check_coloring(g, cert.coloring, k, budget)
        return self.check(inst.with_certificate(None), cert.value, budget) if cert.value > 0 else (
            Verdict.valid() if subgraph_colorable(g, k, budget - 1)
            else Verdict.invalid(budget - 1, "a truncation is not colorable"))

    def check(self, inst, cand, budget):
        g, k = inst.payload, inst.problem.k
        if cand < 0:
            return Verdict.invalid(cand, "negative answer")
        if cand > 0:
            if subgraph_colorable(g, k, cand):
                return Verdict.invalid(("colorable", cand), f"G_{cand} has a {k}-coloring")
            if not subgraph_colorable(g, k, cand - 1):
                return Verdict.invalid(("not_colorable", cand - 1), f"G_{cand - 1} has no {k}-coloring")
            return Verdict.valid()
        if not subgraph_colorable(g, k, budget - 1):
            m = next(m for m in range(budget) if not subgraph_colorable(g, k, m))
            return Verdict.invalid(("not_colorable", m), f"answer 0 but G_{m} has no {k}-coloring")
        cert = inst.certificate
        if isinstance(cert, KnownColoring) or (isinstance(cert, KnownAnswer) and cert.value == 0):
            return Verdict.valid()
        if isinstance(cert, KnownAnswer):
            return Verdict.invalid(("first_failure", cert.value), "certificate places a failure")
        return Verdict.unknown(f"G_{budget - 1} is colorable; cannot confirm the rest")

    def solve(self, inst, budget):
        cert = inst.certificate
        _expect(cert, KnownAnswer, KnownColoring)
        return 0 if isinstance(cert, KnownColoring) else cert.value


class GCSemantics(Semantics):
    def check_input(self, inst, budget):
        k = inst.problem.k
        if subgraph_colorable(inst.payload, k, budget - 1):
            return Verdict.valid()
        return Verdict.invalid(budget - 1, f"G_{budget - 1} has no {k}-coloring")

    def check_certificate(self, inst, budget):
        _expect(inst.certificate, KnownColoring)
        return check_coloring(inst.payload, inst.certificate.coloring, inst.problem.k, budget)

    def check(self, inst, cand, budget):
        return check_coloring(inst.payload, cand, inst.problem.k, budget)

    def solve(self, inst, budget):
        _expect(inst.certificate, KnownColoring)
        return inst.certificate.coloring


class TCSemantics(Semantics):
    def check_certificate(self, inst, budget):
        g, k, cert = inst.payload, inst.problem.k, inst.certificate
        _expect(cert, KnownColoring, KnownAnswer)
        if isinstance(cert, KnownColoring):
            if cert.coloring(0) != 0:
                return Verdict.invalid(0, "a TC coloring must give vertex 0 color 0")
            return check_coloring(g, cert.coloring, k, budget)
        if cert.value <= 0 or subgraph_colorable(g, k, cert.value):
            return Verdict.invalid(cert.value, f"G_{cert.value} is not a failing truncation")
        return Verdict.valid()

    def check(self, inst, cand, budget):
        g, k = inst.payload, inst.problem.k
        head = cand(0)
        if head > 0:
            if subgraph_colorable(g, k, head):
                return Verdict.invalid(("colorable", head), f"G_{head} has a {k}-coloring")
            return Verdict.valid()
        cert = inst.certificate
        if isinstance(cert, KnownAnswer):
            return Verdict.invalid(("not_colorable", cert.value), "certificate shows no coloring exists")
        return check_coloring(g, cand, k, budget)

    def solve(self, inst, budget):
        cert = inst.certificate
        _expect(cert, KnownColoring, KnownAnswer)
        if isinstance(cert, KnownColoring):
            return cert.coloring
        return tabled([cert.value], 0)


class WKLSemantics(Semantics):
    def check_input(self, inst, budget):
        depth = min(budget, config.TREE_DEPTH)
        if tree_has_level(inst.payload, depth):
            return Verdict.valid()
        return Verdict.invalid(depth, f"no node of length {depth}")

    def check_certificate(self, inst, budget):
        t, cert = inst.payload, inst.certificate
        _expect(cert, PathGen, Finite)
        if isinstance(cert, PathGen):
            return _members_prefix(t, cert.path, budget, inst.problem.alphabet)
        if tree_has_level(t, cert.depth):
            return Verdict.invalid(cert.depth, f"the tree has a node of length {cert.depth}")
        return Verdict.valid()

    def check(self, inst, cand, budget):
        return _members_prefix(inst.payload, cand, budget, inst.problem.alphabet)

    def solve(self, inst, budget):
        cert = inst.certificate
        _expect(cert, PathGen, Finite)
        if isinstance(cert, Finite):
            raise NoSolution(f"the tree has no node of length {cert.depth}")
        return cert.path


def _decision_check(cand: int, truth: Optional[int], cert) -> Verdict:
    if cand not in (0, 1):
        return Verdict.invalid(cand, "answers are 0 or 1")
    if truth is None:
        return Verdict.unknown("undecided at this budget without a certificate")
    if cand == truth:
        return Verdict.valid()
    return Verdict.invalid(("answer", truth), f"correct answer is {truth}")


class WFSemantics(Semantics):
    def check_certificate(self, inst, budget):
        t, cert = inst.payload, inst.certificate
        _expect(cert, PathGen, Finite)
        if isinstance(cert, PathGen):
            return _members_prefix(t, cert.path, budget, t.branching)
        if _bounded_has_level(t, cert.depth, budget):
            return Verdict.invalid(cert.depth, f"the tree has a node of length {cert.depth}")
        return Verdict.valid()

    def truth(self, inst, budget) -> Optional[int]:
        cert, t = inst.certificate, inst.payload
        if isinstance(cert, PathGen):
            return 0
        if isinstance(cert, Finite):
            return 1
        if t.finitely_branching and not tree_has_level(t, min(budget, config.TREE_DEPTH)):
            return 1
        return None

    def check(self, inst, cand, budget):
        return _decision_check(cand, self.truth(inst, budget), inst.certificate)

    def solve(self, inst, budget):
        _expect(inst.certificate, PathGen, Finite)
        return self.truth(inst, budget)


class EmbeddingSemantics(Semantics):
    """Shared logic for "does the pattern sit inside the host graph?" problems."""

    induced = False

    def host_pattern(self, inst) -> Tuple[GraphCode, Union[GraphCode, FiniteGraph]]:
        raise NotImplementedError

    def pattern_prefix(self, pattern, r: int) -> FiniteGraph:
        if isinstance(pattern, FiniteGraph):
            r = min(r, pattern.num_vertices)
            return FiniteGraph.from_edges(r, (e for e in pattern.edges if e[1] < r))
        return finite_subgraph(pattern, r - 1) if r > 0 else FiniteGraph(0)

    def _pattern_below(self, pattern, v: int):
        if isinstance(pattern, FiniteGraph):
            return sorted(u for u, w in pattern.edges if w == v)
        return sorted(pattern.neighbors_below(v))

    def verify_map(self, host, pattern, mapping: OracleFn, budget: int) -> Verdict:
        limit = budget
        if isinstance(pattern, FiniteGraph):
            limit = min(limit, pattern.num_vertices)
        seen: Dict[int, int] = {}
        for v in range(limit):
            img = mapping(v)
            if img in seen:
                return Verdict.invalid(("collision", seen[img], v), "embedding is not injective")
            seen[img] = v
            below = self._pattern_below(pattern, v)
            for u in below:
                if not edge_query(host, mapping(u), img):
                    return Verdict.invalid(("edge", u, v), f"pattern edge ({u}, {v}) not preserved")
            if self.induced:
                for u in sorted(set(range(v)) - set(below)):
                    if edge_query(host, mapping(u), img):
                        return Verdict.invalid(("non_edge", u, v),
                                               f"pattern non-edge ({u}, {v}) not preserved")
        return Verdict.valid()

    def embeds_in_truncation(self, host, pattern, r: int, budget: int) -> bool:
        return find_embedding(self.pattern_prefix(pattern, r), _truncation(host, budget),
                              self.induced) is not None

    def certificate_verdict(self, host, pattern, cert, budget) -> Verdict:
        _expect(cert, EmbedsAt, NoEmbedding, KnownAnswer)
        if isinstance(cert, EmbedsAt):
            return self.verify_map(host, pattern, cert.mapping, budget)
        if isinstance(cert, NoEmbedding):
            if self.embeds_in_truncation(host, pattern, cert.bound, budget):
                return Verdict.invalid(cert.bound, "the pattern prefix embeds after all")
            return Verdict.valid()
        if cert.value not in (0, 1):
            return Verdict.invalid(cert.value, "answers are 0 or 1")
        return Verdict.valid()

    def decided_positive(self, host, pattern, budget) -> bool:
        """Finite patterns can be found by search; infinite ones never are."""
        return False

    def truth_from(self, host, pattern, cert, budget) -> Optional[int]:
        if self.decided_positive(host, pattern, budget):
            return 1
        if isinstance(cert, EmbedsAt):
            return 1
        if isinstance(cert, NoEmbedding):
            return 0
        if isinstance(cert, KnownAnswer):
            return cert.value
        return None

    def check_certificate(self, inst, budget):
        host, pattern = self.host_pattern(inst)
        return self.certificate_verdict(host, pattern, inst.certificate, budget)

    def check(self, inst, cand, budget):
        host, pattern = self.host_pattern(inst)
        return _decision_check(cand, self.truth_from(host, pattern, inst.certificate, budget),
                               inst.certificate)

    def solve(self, inst, budget):
        _expect(inst.certificate, EmbedsAt, NoEmbedding, KnownAnswer)
        host, pattern = self.host_pattern(inst)
        return self.truth_from(host, pattern, inst.certificate, budget)


class SSemantics(EmbeddingSemantics):
    def host_pattern(self, inst):
        return inst.payload


class SLSemantics(EmbeddingSemantics):
    def host_pattern(self, inst):
        return inst.payload, _LINEAR


class SFSemantics(EmbeddingSemantics):
    induced = True

    def host_pattern(self, inst):
        return inst.payload, inst.problem.pattern

    def decided_positive(self, host, pattern, budget):
        return self.embeds_in_truncation(host, pattern, pattern.num_vertices, budget)


class IndependentSetSemantics(EmbeddingSemantics):
    """D and RC: an infinite independent set, i.e. an induced copy of the edgeless graph."""

    induced = True

    def host_pattern(self, inst):
        return inst.payload, _EDGELESS

    def pattern_prefix(self, pattern, r):
        return edgeless(r)

    def _pattern_below(self, pattern, v):
        return []


class SVecLSemantics(Semantics):
    """One graph, one answer per tagged ray ``L_n``; certificates come per ``n``."""

    row = SSemantics()

    def _rows(self, budget):
        return min(budget, config.HAT_ROWS)

    def check_certificate(self, inst, budget):
        _expect(inst.certificate, HatOf)
        host = inst.payload
        return combine(
            _tag(n, self.row.certificate_verdict(host, _tagged(n), inst.certificate.row(n), budget))
            for n in range(self._rows(budget)))

    def check(self, inst, cand, budget):
        host, cert = inst.payload, inst.certificate

        def one(n):
            truth = self.row.truth_from(host, _tagged(n), cert.row(n) if isinstance(cert, HatOf) else None,
                                        budget)
            return _tag(n, _decision_check(cand(n), truth, None))

        return combine(one(n) for n in range(self._rows(budget)))

    def solve(self, inst, budget):
        cert = inst.certificate
        _expect(cert, HatOf)
        host = inst.payload

        def value(n):
            truth = self.row.truth_from(host, _tagged(n), cert.row(n), budget)
            if truth is None:
                raise CertificateError(f"row {n} certificate does not settle the answer")
            return truth

        from ..encodings import derived
        return derived("s_vecL_answers", {"instance": inst.describe()}, value)


def _tag(i: int, v: Verdict) -> Verdict:
    if v.is_valid:
        return v
    return Verdict(v.status, (i, v.witness), f"row {i}: {v.reason}")


class HatSemantics(Semantics):
    def check_input(self, inst, budget):
        return combine(_tag(i, check_input(hat_row(inst, i), budget))
                       for i in range(_hat_rows(inst, budget)))

    def check_certificate(self, inst, budget):
        _expect(inst.certificate, HatOf)
        return combine(_tag(i, check_certificate(hat_row(inst, i), budget))
                       for i in range(_hat_rows(inst, budget)))

    def check(self, inst, cand, budget):
        return combine(_tag(i, check_solution(hat_row(inst, i), cand.row(i), budget))
                       for i in range(_hat_rows(inst, budget)))

    def solve(self, inst, budget):
        _expect(inst.certificate, HatOf)
        return lazy_hat_solution(lambda i: solve_certified(hat_row(inst, i), budget),
                                 {"solve": inst.describe(), "budget": budget})


_LINEAR = linear_graph()
_EDGELESS = None  # placeholder pattern; IndependentSetSemantics never inspects it
_TAGGED: Dict[int, GraphCode] = {}


def _tagged(n: int) -> GraphCode:
    if n not in _TAGGED:
        _TAGGED[n] = tagged_linear(n)
    return _TAGGED[n]


_SEMANTICS: Dict[str, Semantics] = {
    "LPO": LPOSemantics(), "LLPO": LLPOSemantics(), "LG": LGSemantics(),
    "GC": GCSemantics(), "TC": TCSemantics(), "WKL": WKLSemantics(), "WKLn": WKLSemantics(),
    "WF": WFSemantics(), "S": SSemantics(), "S_L": SLSemantics(), "SF": SFSemantics(),
    "RC": IndependentSetSemantics(), "D": IndependentSetSemantics(),
    "S_vecL": SVecLSemantics(), "Hat": HatSemantics(),
}


def semantics(problem: ProblemId) -> Semantics:
    return _SEMANTICS[problem.name]


# -- public entry points -----------------------------------------------------

def _guard(fn: Callable[[], Verdict]) -> Verdict:
    try:
        return fn()
    except FuelExhausted as exc:
        return Verdict.unknown(f"fuel exhausted: {exc}")


def check_input(inst: Instance, budget: int = config.DEFAULT_BUDGET) -> Verdict:
    """Is the payload an accepted input, as far as the budget can tell?"""
    return _guard(lambda: semantics(inst.problem).check_input(inst, budget))


def check_certificate(inst: Instance, budget: int = config.DEFAULT_BUDGET) -> Verdict:
    """Re-verify the instance's certificate up to the budget; ``Invalid`` means mismatch."""
    if inst.certificate is None:
        raise CertificateError(f"{inst.problem} instance carries no certificate")
    return _guard(lambda: semantics(inst.problem).check_certificate(inst, budget))


def check_solution(inst: Instance, cand: Any, budget: int = config.DEFAULT_BUDGET) -> Verdict:
    """Valid / Invalid (with a finite witness) / Unknown for a candidate solution.

    Raises :class:`CertificateError` when the instance's certificate does not
    survive re-verification, and :class:`ShapeError` on a mis-shaped candidate.
    """
    check_solution_shape(inst.problem, cand)
    if inst.certificate is not None and not inst.problem.is_hat:
        cv = check_certificate(inst, budget)
        if cv.is_invalid:
            raise CertificateError(f"certificate mismatch for {inst.problem}: {cv.reason}")
    return _guard(lambda: semantics(inst.problem).check(inst, cand, budget))


def solve_certified(inst: Instance, budget: int = config.DEFAULT_BUDGET) -> Any:
    """A correct solution read off (or searched for under) the certificate."""
    if inst.certificate is None:
        raise CertificateError(f"{inst.problem} instance carries no certificate")
    return semantics(inst.problem).solve(inst, budget)
