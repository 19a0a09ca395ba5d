"""Parallel LLPO, 2-colorings, n-colorings and n-ary trees, reduced in a cycle."""

from __future__ import annotations

from ..encodings import (GraphCode, TreeCode, derived, diag_decode, diag_encode, graph_from_rule,
                         seq_decode)
from ..problems import (GC, LLPO, WKL, AllZero, CertificateError, FirstNonzero, Hat, Instance,
                        KnownAnswer, KnownColoring, PathGen, WKLn, first_nonzero, hat_row,
                        lazy_hat_solution)
from .core import Reduction, compose
from .trees import wkl_to_hat_llpo, wkln_to_wkl


def u_vertex(i: int) -> int:
    return diag_encode(i, 0)


def v_vertex(i: int, j: int) -> int:
    return diag_encode(i, j + 1)


def llpo_gadgets(rows) -> GraphCode:
    """Disjoint gadgets: ray ``v_{i,0} v_{i,1} ...`` plus a pendant ``u_i`` hung on
    ``v_{i,j}`` for the first ``j`` with ``p_i(j) != 0``.

    ``rows(i)`` returns the number function of row ``i``; vertex ``u_i`` sits at
    ``diag_encode(i, 0)`` and ``v_{i,j}`` at ``diag_encode(i, j + 1)``.
    """

    def pendant_at(i: int, j: int) -> bool:
        p = rows(i)
        return p(j) != 0 and first_nonzero(p, j) is None

    def rule(a: int, b: int) -> bool:
        (i, x), (i2, y) = diag_decode(a), diag_decode(b)
        if i != i2:
            return False
        if x > 0 and y > 0:
            return abs(x - y) == 1
        j = max(x, y) - 1
        return pendant_at(i, j)

    def lower(b: int):
        # u_i precedes every v_{i,j} in the diagonal order, so only v's have lower neighbors
        i, y = diag_decode(b)
        out = []
        if y > 1:
            out.append(diag_encode(i, y - 1))
        if y > 0 and pendant_at(i, y - 1):
            out.append(u_vertex(i))
        return out

    return graph_from_rule("llpo_gadgets", {"rows": rows.key}, rule, lower)


def hat_llpo_to_gc2() -> Reduction:
    """Any 2-coloring answers each row: ``u_i`` and ``v_{i,0}`` differ iff 1 is a correct answer."""

    def forward(u):
        rows = _RowFns(u)
        g = llpo_gadgets(rows)
        cert = None
        if u.certificate is not None:
            cert = KnownColoring(derived("llpo_gadget_coloring", {"of": u.describe()},
                                        lambda c: _gadget_color(u, c)))
        return Instance(GC(2), g, cert)

    def back(u, y):
        return lazy_hat_solution(lambda i: 1 if y(u_vertex(i)) != y(v_vertex(i, 0)) else 0,
                                 {"gadget_answers": y.describe()})

    return Reduction("red_hat_llpo_to_gc2", Hat(LLPO), GC(2), forward, back, True, "Lemma GCL1")


class _RowFns:
    """Row number functions of a parallelized LLPO instance, with a stable key."""

    def __init__(self, u: Instance):
        self.u = u
        self.key = u.describe()

    def __call__(self, i: int):
        return hat_row(self.u, i).payload


def _gadget_color(u: Instance, c: int) -> int:
    i, x = diag_decode(c)
    if x > 0:
        return (x - 1) % 2
    cert = hat_row(u, i).certificate
    if isinstance(cert, FirstNonzero):
        # u_i must differ from v_{i,j}, whose color is j mod 2
        return 1 - cert.index % 2
    if isinstance(cert, AllZero):
        return 0
    if isinstance(cert, KnownAnswer):
        return 1 if cert.value == 1 else 0
    raise CertificateError(f"row {i}: cannot color the gadget from {type(cert).__name__}")


def gc2_to_gcn(n: int) -> Reduction:
    """A clique of ``n - 2`` apex vertices (``0..n-3``) joined to every vertex of
    ``G`` (shifted up by ``n - 2``) leaves two colors for ``G`` itself."""
    if n <= 2:
        raise ValueError("gc2_to_gcn needs n > 2")
    s = n - 2

    def forward(u):
        g = u.payload

        def rule(a: int, b: int) -> bool:
            if a < s:
                return True
            return (a - s) in g.neighbors_below(b - s)

        def lower(b: int):
            if b < s:
                return range(b)
            return list(range(s)) + [v + s for v in g.neighbors_below(b - s)]

        h = graph_from_rule("apex_join", {"graph": g.describe(), "n": n}, rule, lower)
        cert = u.certificate
        if isinstance(cert, KnownColoring):
            c = cert.coloring
            cert = KnownColoring(derived("apex_coloring", {"coloring": c.describe(), "n": n},
                                         lambda v: 2 + v if v < s else c(v - s)))
        return Instance(GC(n), h, cert)

    def back(u, y):
        # the two colors left for G, renamed in order of first appearance
        return derived("apex_restrict", {"y": y.describe(), "n": n},
                       lambda v: 0 if y(v + s) == y(s) else 1)

    return Reduction(f"red_gc2_to_gcn[{n}]", GC(2), GC(n), forward, back, True, "Lemma GCLm")


def coloring_tree(g: GraphCode, n: int) -> TreeCode:
    """Sequences ``sigma`` over ``n`` colors that properly color ``G_{|sigma|-1}``."""

    def fn(code: int) -> int:
        sigma = seq_decode(n, code)
        if not sigma:
            return 1
        v = len(sigma) - 1
        return 0 if any(sigma[w] == sigma[v] for w in g.neighbors_below(v)) else 1

    return TreeCode(n, derived("coloring_tree", {"graph": g.describe(), "n": n}, fn))


def gcn_to_wkln(n: int) -> Reduction:
    """A path through the tree of partial colorings is a coloring."""

    def forward(u):
        cert = u.certificate
        if isinstance(cert, KnownColoring):
            cert = PathGen(cert.coloring)
        return Instance(WKLn(n) if n > 2 else WKL, coloring_tree(u.payload, n), cert)

    def back(u, y):
        return y

    target = WKLn(n) if n > 2 else WKL
    return Reduction(f"red_gcn_to_wkln[{n}]", GC(n), target, forward, back, True, "Lemma GCL2")


def gct_chain(n: int) -> Reduction:
    """Parallel LLPO to 2-colorings to ``n``-colorings to ``n``-ary trees to binary trees."""
    steps = [hat_llpo_to_gc2()]
    if n > 2:
        steps.append(gc2_to_gcn(n))
        steps.append(gcn_to_wkln(n))
        steps.append(wkln_to_wkl(n))
    else:
        steps.append(gcn_to_wkln(2))
    out = steps[0]
    for r in steps[1:]:
        out = compose(out, r)
    return out


def gct_cycle() -> Reduction:
    """Binary trees back to parallel LLPO closes the cycle of equivalences."""
    return compose(wkl_to_hat_llpo(), gct_chain(2))
