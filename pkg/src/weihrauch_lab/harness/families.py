"""Seeded generators of certified instances, one family per source problem.

Every case draws from its own ``random.Random`` seeded with the string
``"<family>:<params>:<seed>:<index>"``, so a case can be regenerated alone and
the stream does not depend on the interpreter's hash seed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from .. import config
from ..encodings import (OMEGA, FiniteGraph, GraphCode, complete, depth_tree, edgeless,
                         find_coloring, find_embedding, finite_support, finite_tree,
                         graph_from_finite, pair_encode, path_tree, periodic, table_then_shift,
                         tabled)
from ..problems import (GC, LG, LLPO, LPO, RC, TC, WF, WKL, AllZero, D, EmbedsAt, Finite,
                        FirstNonzero, FirstZero, Hat, Instance, KnownAnswer, KnownColoring,
                        NoEmbedding, NoZero, PathGen, ProblemId, S, S_VEC_L, SF, WKLn, hat_pack)

# generator scale
SUPPORT = 32
MAX_DEPTH = config.TREE_DEPTH
MAX_NOISE = 20
MAX_HAT_ROWS = 8


@dataclass(frozen=True)
class CertifiedFamily:
    name: str
    problem: ProblemId
    make: Callable[[random.Random], Instance]
    tag: str = ""

    def instance(self, seed: int, index: int) -> Instance:
        return self.make(random.Random(f"{self.name}:{self.tag}:{seed}:{index}"))

    def generate(self, seed: int, count: int) -> List[Instance]:
        if count < 1:
            raise ValueError("count must be at least 1")
        return [self.instance(seed, i) for i in range(count)]


def generate(family: CertifiedFamily, seed: int, count: int) -> List[Instance]:
    return family.generate(seed, count)


# -- number functions ----------------------------------------------------------

def lpo_instance(rng: random.Random) -> Instance:
    bound = rng.randint(1, SUPPORT)
    default = rng.randint(1, 3)
    if rng.random() < 0.75:
        j = rng.randrange(bound)
        entries = {t: rng.randint(1, 5) for t in range(j)}
        entries[j] = 0
        entries.update({t: rng.randint(0, 3) for t in range(j + 1, bound)})
        cert = FirstZero(j)
    else:
        entries = {t: rng.randint(1, 5) for t in range(bound)}
        cert = NoZero()
    return Instance(LPO, finite_support(entries, default, bound), cert)


def llpo_instance(rng: random.Random) -> Instance:
    bound = rng.randint(1, SUPPORT)
    if rng.random() < 0.75:
        j = rng.randrange(bound)
        entries = {t: 0 for t in range(j)}
        entries[j] = rng.randint(1, 5)
        entries.update({t: rng.randint(0, 3) for t in range(j + 1, bound)})
        cert = FirstNonzero(j)
    else:
        entries = {t: 0 for t in range(rng.randint(0, bound))}
        cert = AllZero()
    return Instance(LLPO, finite_support(entries, 0, bound), cert)


# -- finite graphs ---------------------------------------------------------------

def random_graph(rng: random.Random, n: int, density: float) -> FiniteGraph:
    return FiniteGraph.from_edges(n, ((a, b) for b in range(n) for a in range(b)
                                      if rng.random() < density))


def connected_pattern(rng: random.Random, size: int) -> FiniteGraph:
    """Each vertex past the first is joined to some earlier one, so the pattern is
    connected and every prefix of it is too."""
    edges = {(rng.randrange(v), v) for v in range(1, size)}
    edges |= {(a, b) for b in range(size) for a in range(b) if rng.random() < 0.3}
    return FiniteGraph.from_edges(size, edges)


def plant(rng: random.Random, g: FiniteGraph, pattern: FiniteGraph,
          induced: bool) -> Tuple[FiniteGraph, List[int]]:
    """Copy ``pattern`` onto random distinct vertices of ``g``."""
    spots = rng.sample(range(g.num_vertices), pattern.num_vertices)
    edges = set(g.edges)
    if induced:
        edges -= {(min(spots[a], spots[b]), max(spots[a], spots[b]))
                  for a, b in itertools.combinations(range(pattern.num_vertices), 2)}
    edges |= {(min(spots[a], spots[b]), max(spots[a], spots[b])) for a, b in pattern.edges}
    return FiniteGraph.from_edges(g.num_vertices, edges), spots


def dense_graph(g: FiniteGraph) -> GraphCode:
    """``g`` on its vertices; every vertex past them is joined to all others."""
    n = g.num_vertices
    entries = {pair_encode(a, b): (1 if g.has_edge(a, b) else 0)
               for b in range(n) for a in range(b)}
    bound = pair_encode(n - 2, n - 1) + 1 if n >= 2 else 0
    return GraphCode(finite_support(entries, 1, bound))


def lex_least_coloring(g: FiniteGraph, k: int) -> Optional[Tuple[int, ...]]:
    """Least proper ``k``-coloring in lexicographic order (so vertex 0 gets 0)."""
    colors: List[int] = []
    adj = g.adjacency()

    def go(v: int) -> bool:
        if v == g.num_vertices:
            return True
        for c in range(k):
            if all(colors[w] != c for w in adj[v] if w < v):
                colors.append(c)
                if go(v + 1):
                    return True
                colors.pop()
        return False

    return tuple(colors) if go(0) else None


def first_failure(g: FiniteGraph, k: int) -> Optional[int]:
    """Least ``m`` with ``g`` restricted to ``0..m`` not ``k``-colorable."""
    for m in range(g.num_vertices):
        sub = FiniteGraph.from_edges(m + 1, ((a, b) for a, b in g.edges if b <= m))
        if find_coloring(sub, k) is None:
            return m
    return None


def lg_instance(rng: random.Random, k: int) -> Instance:
    from ..reductions import lpo_to_lgk
    if rng.random() < 0.5:
        return lpo_to_lgk(k).forward(lpo_instance(rng))
    n = rng.randint(1, 10)
    g = random_graph(rng, n, rng.uniform(0.2, 0.9))
    m = first_failure(g, k)
    return Instance(LG(k), graph_from_finite(g), KnownAnswer(0 if m is None else m))


def tc_instance(rng: random.Random, k: int) -> Instance:
    n = rng.randint(1, 10)
    g = random_graph(rng, n, rng.uniform(0.1, 0.7))
    if n > k and rng.random() < 0.3:
        g, _ = plant(rng, g, complete(k + 1), induced=False)
    coloring = lex_least_coloring(g, k)
    if coloring is None:
        cert = KnownAnswer(first_failure(g, k))
    else:
        cert = KnownColoring(tabled(coloring, 0))
    return Instance(TC(k), graph_from_finite(g), cert)


def gc_instance(rng: random.Random, k: int) -> Instance:
    n = rng.randint(1, 12)
    palette = [rng.randrange(k) for _ in range(n)]
    g = FiniteGraph.from_edges(n, ((a, b) for b in range(n) for a in range(b)
                                   if palette[a] != palette[b] and rng.random() < 0.5))
    return Instance(GC(k), graph_from_finite(g), KnownColoring(tabled(lex_least_coloring(g, k), 0)))


def gc2_instance(rng: random.Random) -> Instance:
    from ..reductions import hat_llpo_to_gc2
    if rng.random() < 0.5:
        return hat_llpo_to_gc2().forward(hat_instance(rng, llpo_instance))
    return gc_instance(rng, 2)


def gcn_instance(rng: random.Random, n: int) -> Instance:
    from ..reductions import gc2_to_gcn
    if n > 2 and rng.random() < 0.5:
        return gc2_to_gcn(n).forward(gc2_instance(rng))
    return gc_instance(rng, n)


# -- trees -------------------------------------------------------------------

def designated_path(rng: random.Random, width: int):
    """An eventually periodic path with labels below ``width``."""
    prefix = [rng.randrange(width) for _ in range(rng.randint(0, 6))]
    cycle = [rng.randrange(width) for _ in range(rng.randint(1, 4))]
    return periodic(prefix, cycle)


def noise_nodes(rng: random.Random, path, width: int, count: int, max_depth: int):
    """Nodes branching off ``path`` that die out within ``max_depth``."""
    nodes = []
    for _ in range(count):
        at = rng.randint(0, max_depth - 1)
        off = rng.choice([c for c in range(width) if c != path(at)]) if width > 1 else None
        if off is None:
            continue
        tail = [rng.randrange(width) for _ in range(rng.randint(0, 4))]
        node = tuple(path(i) for i in range(at)) + (off,) + tuple(tail)
        nodes.append(node[:max_depth])
    return nodes


def path_plus_noise(rng: random.Random, branching, width: Optional[int] = None) -> Instance:
    width = width or (branching if branching is not OMEGA else 5)
    p = designated_path(rng, width)
    nodes = noise_nodes(rng, p, width, rng.randint(0, MAX_NOISE), MAX_DEPTH)
    horizon = max((len(s) for s in nodes), default=0)
    t = path_tree(branching, p, nodes)
    problem = WF if branching is OMEGA else (WKL if branching == 2 else WKLn(branching))
    return Instance(problem, t, PathGen(p, horizon))


def finite_tree_instance(rng: random.Random, branching, width: int) -> Instance:
    nodes = [tuple(rng.randrange(width) for _ in range(rng.randint(0, 8)))
             for _ in range(rng.randint(0, 12))]
    t = finite_tree(branching, nodes)
    depth = max((len(s) + 1 for s in nodes), default=0)
    return Instance(WF, t, Finite(depth))


def wf_instance(rng: random.Random) -> Instance:
    kind = rng.randrange(4)
    if kind == 0:
        inst = path_plus_noise(rng, 2)
        return Instance(WF, inst.payload, inst.certificate)
    if kind == 1:
        return path_plus_noise(rng, OMEGA)
    if kind == 2:
        branching = rng.choice([2, OMEGA])
        return finite_tree_instance(rng, branching, 2 if branching == 2 else 6)
    # infinitely many children of the root, none with a child of its own
    return Instance(WF, depth_tree(OMEGA, 1), Finite(2))


# -- embeddings ------------------------------------------------------------------

def s_instance(rng: random.Random) -> Instance:
    pattern = connected_pattern(rng, rng.randint(2, 4))
    h = pattern.num_vertices
    n = rng.randint(h, 12)
    g = random_graph(rng, n, rng.uniform(0.05, 0.4))
    if rng.random() < 0.5:
        g, spots = plant(rng, g, pattern, induced=False)
        cert = EmbedsAt(table_then_shift(spots, n))
    else:
        # past n the graph is edgeless, so a connected pattern with an edge
        # embeds iff it embeds in the finite part
        found = find_embedding(pattern, g)
        spots = None if found is None else [found[v] for v in range(h)]
        cert = EmbedsAt(table_then_shift(spots, n)) if spots is not None else NoEmbedding(h)
    return Instance(S, (graph_from_finite(g), graph_from_finite(pattern)), cert)


def sf_instance(rng: random.Random, pattern: FiniteGraph) -> Instance:
    h = pattern.num_vertices
    n = rng.randint(h, 10)
    g = random_graph(rng, n, rng.uniform(0.1, 0.8))
    if rng.random() < 0.5:
        g, _ = plant(rng, g, pattern, induced=True)
    dense = rng.random() < 0.5
    code = dense_graph(g) if dense else graph_from_finite(g)
    # vertices past n are twins of each other, so h of them are enough
    reach = FiniteGraph.from_edges(n + h, set(g.edges) | (
        {(a, b) for b in range(n, n + h) for a in range(b)} if dense else set()))
    found = find_embedding(pattern, reach, induced=True)
    cert = (NoEmbedding(h) if found is None
            else EmbedsAt(table_then_shift([found[v] for v in range(h)], n + h)))
    return Instance(SF(pattern), code, cert)


def independence_number(g: FiniteGraph) -> int:
    r = 0
    while r < g.num_vertices and find_embedding(edgeless(r + 1), g, induced=True) is not None:
        r += 1
    return r


def d_instance(rng: random.Random, problem: ProblemId) -> Instance:
    n = rng.randint(1, 10)
    g = random_graph(rng, n, rng.uniform(0.2, 0.9))
    if rng.random() < 0.5:
        # isolated tail: the vertices past n form an infinite independent set
        return Instance(problem, graph_from_finite(g), EmbedsAt(table_then_shift([], n)))
    alpha = max(independence_number(g), 1)
    return Instance(problem, dense_graph(g), NoEmbedding(alpha + 1))


# -- parallelized ------------------------------------------------------------------

def hat_instance(rng: random.Random, row: Callable[[random.Random], Instance],
                 max_rows: int = MAX_HAT_ROWS) -> Instance:
    return hat_pack([row(rng) for _ in range(rng.randint(1, max_rows))])


def s_vecl_instance(rng: random.Random) -> Instance:
    from ..reductions import hat_wf_to_s_vecl
    return hat_wf_to_s_vecl().forward(hat_instance(rng, wf_instance))


# -- the table -------------------------------------------------------------------

def family(name: str, k: int = 2, n: int = 3, pattern: Optional[FiniteGraph] = None) -> CertifiedFamily:
    """Look up a family by name; ``k``, ``n`` and ``pattern`` fill in problem parameters."""
    pattern = pattern if pattern is not None else complete(2)
    table: Dict[str, Tuple[ProblemId, Callable[[random.Random], Instance], str]] = {
        "lpo": (LPO, lpo_instance, ""),
        "llpo": (LLPO, llpo_instance, ""),
        "lg": (LG(k), lambda r: lg_instance(r, k), f"k={k}"),
        "tc": (TC(k), lambda r: tc_instance(r, k), f"k={k}"),
        "gc2": (GC(2), gc2_instance, ""),
        "gcn": (GC(n), lambda r: gcn_instance(r, n), f"n={n}"),
        "wkl": (WKL, lambda r: path_plus_noise(r, 2), ""),
        "wkln": (WKLn(n), lambda r: path_plus_noise(r, n), f"n={n}"),
        "wf": (WF, wf_instance, ""),
        "s": (S, s_instance, ""),
        "sf": (SF(pattern), lambda r: sf_instance(r, pattern), f"F={pattern.describe()}"),
        "rc": (RC, lambda r: d_instance(r, RC), ""),
        "d": (D, lambda r: d_instance(r, D), ""),
        "hat_lpo": (Hat(LPO), lambda r: hat_instance(r, lpo_instance), ""),
        "hat_llpo": (Hat(LLPO), lambda r: hat_instance(r, llpo_instance), ""),
        "hat_wf": (Hat(WF), lambda r: hat_instance(r, wf_instance), ""),
        "hat_hat_lpo": (Hat(Hat(LPO)), lambda r: hat_instance(
            r, lambda r2: hat_instance(r2, lpo_instance, 4), 4), ""),
        "s_vecl": (S_VEC_L, s_vecl_instance, ""),
    }
    if name not in table:
        raise KeyError(f"unknown family {name!r}")
    problem, make, tag = table[name]
    return CertifiedFamily(name, problem, make, tag)


FAMILY_NAMES = ("lpo", "llpo", "lg", "tc", "gc2", "gcn", "wkl", "wkln", "wf", "s", "sf",
                "rc", "d", "hat_lpo", "hat_llpo", "hat_wf", "hat_hat_lpo", "s_vecl")
