"""Well-founded trees against subgraph problems: rays, tagged rays, fixed finite
patterns, and infinite independent sets."""

from __future__ import annotations

from typing import Optional

from .. import config
from ..encodings import (FiniteGraph, FuelExhausted, GraphCode, TreeCode, complement,
                         complete_graph, derived, diag_decode, diag_encode, edge_query,
                         find_embedding, finite_subgraph, graph_from_rule, tree_member, OMEGA)
from ..problems import (D, LPO, RC, S, S_L, S_VEC_L, SF, WF, CertificateError, EmbedsAt, Finite,
                        FirstZero, Hat, HatOf, Instance, KnownAnswer, NoEmbedding, NoZero,
                        PathGen, first_zero, hat_lazy, hat_row, lazy_hat_of, lazy_hat_solution,
                        tagged_linear)
from .core import Reduction


# -- trees as graphs ---------------------------------------------------------

def _parent(t: TreeCode, c: int) -> Optional[int]:
    """Code of the parent of member ``c`` (``None`` for the root or a non-member)."""
    seq = t.decode(c)
    if not seq or not tree_member(t, seq):
        return None
    return t.code(seq[:-1])


def tree_graph(t: TreeCode) -> GraphCode:
    """Vertices are sequence codes; a member is joined to its parent. Non-members
    are isolated. A parent's code is always smaller than its child's."""
    return graph_from_rule("tree_graph", {"tree": t.describe()},
                           lambda a, b: _parent(t, b) == a,
                           lambda b: [p for p in (_parent(t, b),) if p is not None])


def incomparability_graph(t: TreeCode) -> GraphCode:
    """Members are joined when neither extends the other; a non-member is joined
    to everything, so it never lies in an independent set of size two."""

    def rule(a: int, b: int) -> bool:
        sa, sb = t.decode(a), t.decode(b)
        if not (tree_member(t, sa) and tree_member(t, sb)):
            return True
        short, long_ = (sa, sb) if len(sa) <= len(sb) else (sb, sa)
        return long_[:len(short)] != short

    return graph_from_rule("incomparability_graph", {"tree": t.describe()}, rule)


def path_codes(t: TreeCode, path):
    """``i`` maps to the code of the length-``i`` prefix of ``path``."""
    return derived("path_codes", {"tree": t.describe(), "path": path.describe()},
                   lambda i: t.code(path.prefix(i)))


def wf_to_s_l() -> Reduction:
    """A tree has an infinite path iff the ray embeds into its graph."""

    def forward(u):
        t = u.payload
        cert = u.certificate
        if isinstance(cert, PathGen):
            cert = EmbedsAt(path_codes(t, cert.path))
        elif isinstance(cert, Finite):
            # simple paths climb then descend: at most 2 * depth - 1 vertices
            cert = NoEmbedding(max(2 * cert.depth, 2))
        return Instance(S_L, tree_graph(t), cert)

    return Reduction("red_wf_to_s_l", WF, S_L, forward, lambda u, y: 1 - y, True, "Theorem PW1")


def embedding_tree(g: GraphCode, h: GraphCode) -> TreeCode:
    """Sequences ``(g_0, ..., g_n)`` such that ``j -> g_j`` is injective and carries
    every edge of ``H`` among ``0..n`` to an edge of ``G``."""

    def fn(code: int) -> int:
        sigma = t.decode(code)
        if not sigma:
            return 1
        v = len(sigma) - 1
        img = sigma[v]
        for w in range(v):
            if sigma[w] == img:
                return 0
            if edge_query(h, w, v) and not edge_query(g, sigma[w], img):
                return 0
        return 1

    t = TreeCode(OMEGA, derived("embedding_tree", {"graph": g.describe(), "pattern": h.describe()}, fn))
    return t


def s_to_wf() -> Reduction:
    """``H`` embeds into ``G`` iff the tree of partial embeddings has an infinite path."""

    def forward(u):
        g, h = u.payload
        cert = u.certificate
        if isinstance(cert, EmbedsAt):
            cert = PathGen(cert.mapping)
        elif isinstance(cert, NoEmbedding):
            cert = Finite(cert.bound)
        elif cert is not None:
            raise CertificateError(f"cannot transport {type(cert).__name__} to a tree certificate")
        return Instance(WF, embedding_tree(g, h), cert)

    return Reduction("red_s_to_wf", S, WF, forward, lambda u, y: 1 - y, True, "Theorem PW1")


# -- tagged rays ---------------------------------------------------------------

def tag_vertex(i: int, q: int) -> int:
    """Vertex of position ``q`` on the tag cycle of component ``i`` (0 is the root)."""
    return diag_encode(i, 0) if q == 0 else diag_encode(i, 2 * q - 1)


def node_vertex(i: int, c: int) -> int:
    return diag_encode(i, 2 * c)


def tagged_forest(trees) -> GraphCode:
    """Disjoint union over ``i`` of the graph of tree ``i`` with a cycle of size
    ``i + 3`` through its root. Component ``i`` uses ``diag_encode(i, x)``: even
    ``x = 2c`` is tree node ``c``, odd ``x = 2q - 1`` (``1 <= q <= i + 2``) is the
    ``q``-th extra cycle vertex, and the remaining odd ``x`` are isolated."""

    def cycle_pos(i: int, x: int) -> Optional[int]:
        if x == 0:
            return 0
        if x % 2 == 1 and (x + 1) // 2 <= i + 2:
            return (x + 1) // 2
        return None

    def rule(a: int, b: int) -> bool:
        (i, x), (i2, y) = diag_decode(a), diag_decode(b)
        if i != i2:
            return False
        if x % 2 == 0 and y % 2 == 0 and y > 0:
            if _parent(trees(i), y // 2) == x // 2:
                return True
        p, q = cycle_pos(i, x), cycle_pos(i, y)
        if p is None or q is None:
            return False
        return abs(p - q) == 1 or {p, q} == {0, i + 2}

    def lower(b: int):
        i, y = diag_decode(b)
        cands = set()
        if y % 2 == 0 and y > 0:
            pc = _parent(trees(i), y // 2)
            if pc is not None:
                cands.add(2 * pc)
        q = cycle_pos(i, y)
        if q is not None:
            cands |= {0 if p == 0 else 2 * p - 1 for p in (q - 1, q + 1, 0, i + 2) if 0 <= p <= i + 2}
        return [diag_encode(i, x) for x in sorted(cands) if x < y and rule(diag_encode(i, x), b)]

    return graph_from_rule("tagged_forest", {"trees": trees.key}, rule, lower)


class _RowTrees:
    def __init__(self, u: Instance):
        self.u = u
        self.key = u.describe()

    def __call__(self, i: int) -> TreeCode:
        return hat_row(self.u, i).payload


def tagged_embedding(i: int, t: TreeCode, path):
    """Embedding of ``L_i`` into component ``i``: tag onto tag, ray down ``path``."""
    last = i + 2

    def fn(v: int) -> int:
        if v <= last:
            return tag_vertex(i, v)
        return node_vertex(i, t.code(path.prefix(v - last)))

    return derived("tagged_embedding", {"row": i, "tree": t.describe(), "path": path.describe()}, fn)


def hat_wf_to_s_vecl() -> Reduction:
    """``L_i`` embeds into the tagged forest iff tree ``i`` has an infinite path."""

    def forward(u):
        trees = _RowTrees(u)
        cert = None
        if u.certificate is not None:
            def row_cert(i: int):
                c = hat_row(u, i).certificate
                if isinstance(c, PathGen):
                    return EmbedsAt(tagged_embedding(i, trees(i), c.path))
                if isinstance(c, Finite):
                    return NoEmbedding(i + 3 + max(c.depth, 1))
                raise CertificateError(f"row {i}: cannot transport {type(c).__name__}")
            cert = lazy_hat_of(row_cert, {"tagged_rows": u.describe()})
        return Instance(S_VEC_L, tagged_forest(trees), cert)

    def back(u, s):
        return lazy_hat_solution(lambda n: 1 - s(n), {"flip": s.describe()})

    return Reduction("red_hat_wf_to_s_vecl", Hat(WF), S_VEC_L, forward, back, True, "Theorem PW3")


def s_vecl_to_hat_s() -> Reduction:
    """One graph against every tagged ray is a parallel instance of S."""

    def forward(u):
        g = u.payload
        cert = u.certificate

        def row(i: int) -> Instance:
            return Instance(S, (g, tagged_linear(i)), cert.row(i) if isinstance(cert, HatOf) else None)

        return hat_lazy(S, row, {"tagged_pairs": u.describe()})

    def back(u, y):
        return derived("row_answers", {"y": y.describe()}, lambda n: y.row(n))

    return Reduction("red_s_vecl_to_hat_s", S_VEC_L, Hat(S), forward, back, True, "Theorem PW3")


# -- a fixed finite pattern --------------------------------------------------

def sf_to_lpo(f: FiniteGraph) -> Reduction:
    """``p(n) = 0`` once the first ``n`` vertices contain an induced copy of ``F``."""

    def forward(u):
        g = u.payload
        p = derived("pattern_watch", {"graph": g.describe(), "pattern": f.describe()},
                    lambda n: 0 if n > 0 and find_embedding(f, finite_subgraph(g, n - 1), True) else 1)
        cert = u.certificate
        if isinstance(cert, EmbedsAt):
            top = max(cert.mapping(v) for v in range(f.num_vertices))
            z = first_zero(p, top + 2)
            if z is None:
                raise CertificateError("the certified copy of the pattern was not found")
            cert = FirstZero(z)
        elif isinstance(cert, NoEmbedding) or (isinstance(cert, KnownAnswer) and cert.value == 0):
            cert = NoZero()
        elif cert is not None:
            raise CertificateError(f"cannot transport {type(cert).__name__} to an LPO certificate")
        return Instance(LPO, p, cert)

    return Reduction(f"red_sf_to_lpo[{_pattern_name(f)}]", SF(f), LPO, forward,
                     lambda u, y: 1 if y > 0 else 0, True, "Theorem PW4")


def lpo_to_sf(f: FiniteGraph) -> Reduction:
    """With an edge in ``F``: plant one copy at the first zero. Edgeless ``F``:
    join everything until the first zero appears, then stop adding edges."""
    j = f.num_vertices
    has_edges = bool(f.edges)

    def forward(u):
        p = u.payload
        if has_edges:
            def rule(a, b):
                m = first_zero(p, a + 1)
                return m is not None and b < m + j and f.has_edge(a - m, b - m)
        else:
            def rule(a, b):
                return first_zero(p, b + 1) is None
        g = graph_from_rule("pattern_plant", {"p": p.describe(), "pattern": f.describe()}, rule)
        cert = u.certificate
        if isinstance(cert, FirstZero):
            m = cert.index
            cert = EmbedsAt(derived("shift", {"by": m}, lambda v: m + v))
        elif isinstance(cert, NoZero):
            cert = NoEmbedding(j)
        return Instance(SF(f), g, cert)

    def back(u, y):
        if y == 0:
            return 0
        z = first_zero(u.payload, config.SEARCH_LIMIT)
        if z is None:
            raise FuelExhausted(config.SEARCH_LIMIT, config.SEARCH_LIMIT, "first zero search")
        return z + 1

    return Reduction(f"red_lpo_to_sf[{_pattern_name(f)}]", LPO, SF(f), forward, back, False,
                     "Theorem PW4")


def _pattern_name(f: FiniteGraph) -> str:
    return f"{f.num_vertices};" + ",".join(f"{a}-{b}" for a, b in sorted(f.edges))


# -- repeated colors and independent sets ------------------------------------

def rc_to_d() -> Reduction:
    # a color used infinitely often is an infinite independent set
    return Reduction("red_rc_to_d", RC, D, lambda u: Instance(D, u.payload, u.certificate),
                     lambda u, y: y, True, "Theorem PW5")


def d_to_rc() -> Reduction:
    # an infinite independent set can take color 0 while every other vertex gets a fresh color
    return Reduction("red_d_to_rc", D, RC, lambda u: Instance(RC, u.payload, u.certificate),
                     lambda u, y: y, True, "Theorem PW5")


def d_to_s() -> Reduction:
    """An independent set of ``G`` is a clique of the complement, which the
    complete graph embeds into edge for edge."""

    def forward(u):
        return Instance(S, (complement(u.payload), complete_graph()), u.certificate)

    return Reduction("red_d_to_s", D, S, forward, lambda u, y: y, True, "Theorem PW5")


def wf_to_d() -> Reduction:
    """An infinite independent set of the incomparability graph is an infinite
    chain of nodes, i.e. an infinite path."""

    def forward(u):
        t = u.payload
        cert = u.certificate
        if isinstance(cert, PathGen):
            cert = EmbedsAt(path_codes(t, cert.path))
        elif isinstance(cert, Finite):
            # a chain holds at most one node per length below the depth
            cert = NoEmbedding(max(cert.depth + 1, 2))
        return Instance(D, incomparability_graph(t), cert)

    return Reduction("red_wf_to_d", WF, D, forward, lambda u, y: 1 - y, True, "Theorem PW5")
