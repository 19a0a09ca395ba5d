"""LPO against first-failure colorability, both ways, and the total coloring problem."""

from __future__ import annotations

from typing import Optional

from ..encodings import (GraphCode, OracleFn, derived, find_coloring, finite_subgraph,
                         graph_from_rule, seq_decode, seq_encode, subgraph_colorable, tabled)
from ..encodings.oracles import FiniteSupport, Tabled
from ..encodings.coding import pair_decode
from ..problems import (LG, LPO, TC, CertificateError, FirstZero, Hat, HatSolution, Instance,
                        KnownAnswer, KnownColoring, NoZero, first_zero, hat_lazy)
from .core import Reduction


def _zero_clique_graph(p: OracleFn, k: int, first_only: bool) -> GraphCode:
    """Clique on ``m..m+k`` for each zero ``m`` of ``p`` (or only the first one)."""

    def window_zero(t: int) -> Optional[int]:
        # least zero z with t - k <= z < t, i.e. one whose clique reaches back from t
        if first_only:
            z = first_zero(p, t)
            return z if z is not None and z >= t - k else None
        for z in range(max(0, t - k), t):
            if p(z) == 0:
                return z
        return None

    def lower(t: int):
        z = window_zero(t)
        return range(z, t) if z is not None else ()

    def rule(s: int, t: int) -> bool:
        z = window_zero(t)
        return z is not None and z <= s

    label = "first_zero_clique" if first_only else "zero_cliques"
    return graph_from_rule(label, {"p": p.describe(), "k": k}, rule, lower)


def lpo_to_lgk(k: int) -> Reduction:
    """Every zero ``m`` of ``p`` plants a clique on ``m..m+k``; the first one makes
    ``G_{m+k}`` the first truncation without a ``k``-coloring."""

    def forward(u):
        g = _zero_clique_graph(u.payload, k, first_only=False)
        cert = u.certificate
        if isinstance(cert, FirstZero):
            cert = KnownAnswer(cert.index + k)
        elif isinstance(cert, NoZero):
            cert = KnownAnswer(0)
        return Instance(LG(k), g, cert)

    def back(u, y):
        return y - k + 1 if y > 0 else 0

    return Reduction(f"red_lpo_to_lgk[{k}]", LPO, LG(k), forward, back, True, "Lemma LGL")


def _colorability_oracle(g: GraphCode, k: int) -> OracleFn:
    return derived("colorable_prefix", {"graph": g.describe(), "k": k},
                   lambda m: 1 if subgraph_colorable(g, k, m) else 0)


def lgk_to_lpo(k: int) -> Reduction:
    """``p(m) = 1`` iff ``G_m`` is ``k``-colorable; the answer is ``LPO(p) - 1`` (truncated)."""

    def forward(u):
        p = _colorability_oracle(u.payload, k)
        cert = u.certificate
        if isinstance(cert, KnownAnswer):
            cert = FirstZero(cert.value) if cert.value > 0 else NoZero()
        elif isinstance(cert, KnownColoring):
            cert = NoZero()
        return Instance(LPO, p, cert)

    def back(u, y):
        return max(y - 1, 0)

    return Reduction(f"red_lgk_to_lpo[{k}]", LG(k), LPO, forward, back, True, "Lemma LGL")


def lpo_to_tck(k: int) -> Reduction:
    """A single clique on ``m..m+k`` at the first zero ``m``; everything else isolated.

    Any non-colorable truncation index ``f(0)`` bounds the first zero, so the
    back map recovers it by a search below ``f(0)``. When ``f(0)`` is the
    first failing index ``m + k`` this is exactly ``f(0) - k + 1``.
    """

    def forward(u):
        g = _zero_clique_graph(u.payload, k, first_only=True)
        cert = u.certificate
        if isinstance(cert, FirstZero):
            cert = KnownAnswer(cert.index + k)
        elif isinstance(cert, NoZero):
            cert = KnownColoring(tabled([], 0))
        return Instance(TC(k), g, cert)

    def back(u, f):
        top = f(0)
        if top == 0:
            return 0
        z = first_zero(u.payload, max(top - k + 1, 0))
        # no zero in range means f(0) was not a failing index; report the arithmetic guess
        return z + 1 if z is not None else top - k + 1

    return Reduction(f"red_lpo_to_tck[{k}]", LPO, TC(k), forward, back, False, "Theorem TGC1")


def edge_horizon(g: GraphCode) -> Optional[int]:
    """Number of vertices that can carry edges, when the edge oracle has finite support."""
    d = g.edge_fn.descriptor
    if isinstance(d, FiniteSupport) and d.default == 0:
        codes = [i for i, v in d.entries if v != 0]
    elif isinstance(d, Tabled) and d.tail_value == 0:
        codes = [i for i, v in enumerate(d.values) if v != 0]
    else:
        return None
    return pair_decode(max(codes))[1] + 1 if codes else 0


def _row_sequence(k: int, i: int):
    """Row ``i >= 1`` stands for ``<0>`` followed by the ``(i - 1)``-th sequence over ``k`` letters."""
    return (0,) + seq_decode(k, i - 1)


def _row_index(k: int, sigma) -> int:
    return seq_encode(k, tuple(sigma[1:])) + 1


def tck_to_hat_lpo(k: int) -> Reduction:
    """Row 0 watches for a failing truncation; row ``i > 0`` watches whether its
    partial coloring ``sigma_i`` (which starts with color 0) keeps extending.

    All sequences starting with 0 get a row, members of the coloring tree or
    not; a non-member row simply has its first zero at 0.
    """

    def forward(u):
        g = u.payload
        horizon = edge_horizon(g)
        seen = {}

        def extends(sigma, m: int) -> int:
            top = max(m, len(sigma) - 1)
            if horizon is not None:
                # no edges beyond the horizon, so extendability is settled there
                top = min(top, max(horizon - 1, len(sigma) - 1))
            key = (sigma, top)
            if key not in seen:
                fixed = dict(enumerate(sigma))
                seen[key] = 1 if find_coloring(finite_subgraph(g, top), k, fixed) is not None else 0
            return seen[key]

        def row(i: int) -> Instance:
            if i == 0:
                p = derived("tc_row0", {"graph": g.describe(), "k": k},
                            lambda n: 1 if subgraph_colorable(g, k, n) else 0)
            else:
                sigma = _row_sequence(k, i)
                p = derived("tc_row", {"graph": g.describe(), "k": k, "sigma": list(sigma)},
                            lambda m: extends(sigma, m))
            return Instance(LPO, p, _row_certificate(u.certificate, p, i, horizon, k))

        return hat_lazy(LPO, row, {"tc_rows": u.describe(), "k": k})

    def back(u, y: HatSolution):
        head = y.row(0)
        if head > 0:
            return tabled([head - 1], 0)
        path = []

        def fn(n: int) -> int:
            while len(path) <= n:
                if not path:
                    path.append(0)
                    continue
                nxt = 0
                for j in range(k):
                    if y.row(_row_index(k, path + [j])) == 0:
                        nxt = j
                        break
                path.append(nxt)
            return path[n]

        return derived("tc_walk", {"y": y.describe(), "k": k}, fn)

    return Reduction(f"red_tck_to_hat_lpo[{k}]", TC(k), Hat(LPO), forward, back, True, "Theorem TGC1")


def _row_certificate(cert, p: OracleFn, i: int, horizon: Optional[int], k: int):
    if cert is None:
        return None
    if isinstance(cert, KnownAnswer):
        # no coloring of G_m exists, so every row hits a zero by index max(m, |sigma| - 1)
        bound = cert.value if i == 0 else max(cert.value, len(_row_sequence(k, i)) - 1)
        z = first_zero(p, bound + 1)
        if z is None:
            raise CertificateError(f"row {i} has no zero below {bound + 1}")
        return FirstZero(z)
    if i == 0:
        return NoZero()
    if horizon is None:
        raise CertificateError("row certificates need a graph whose edges have finite support")
    settle = max(horizon - 1, len(_row_sequence(k, i)) - 1)
    z = first_zero(p, settle + 1)
    return NoZero() if z is None else FirstZero(z)
