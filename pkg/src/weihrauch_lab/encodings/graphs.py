"""Infinite graphs over an edge oracle, finite graphs, and exhaustive searches on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, FrozenSet, Iterable, List, Mapping, Optional, Set, Tuple

from ..verdict import Verdict
from .coding import pair_decode, pair_encode
from .oracles import FuelExhausted, OracleFn, constant, derived, finite_support


@dataclass(frozen=True)
class FiniteGraph:
    num_vertices: int
    edges: FrozenSet[Tuple[int, int]] = frozenset()

    def __post_init__(self):
        norm = set()
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"self-loop at {a}")
            a, b = min(a, b), max(a, b)
            if a < 0 or b >= self.num_vertices:
                raise ValueError(f"edge ({a}, {b}) outside 0..{self.num_vertices - 1}")
            norm.add((a, b))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Iterable[Tuple[int, int]]) -> "FiniteGraph":
        return cls(num_vertices, frozenset(edges))

    def adjacency(self) -> List[Set[int]]:
        adj: List[Set[int]] = [set() for _ in range(self.num_vertices)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def describe(self) -> dict:
        return {"num_vertices": self.num_vertices, "edges": sorted(list(e) for e in self.edges)}


def complete(n: int) -> FiniteGraph:
    return FiniteGraph.from_edges(n, ((a, b) for b in range(n) for a in range(b)))


def cycle(n: int) -> FiniteGraph:
    return FiniteGraph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> FiniteGraph:
    return FiniteGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def edgeless(n: int) -> FiniteGraph:
    return FiniteGraph(n)


@dataclass(frozen=True)
class GraphCode:
    """A graph on N given by the characteristic function of its edge codes.

    ``(a, b)`` with ``a < b`` is an edge iff ``edge_fn(pair_encode(a, b)) != 0``.
    ``lower``, when given, lists the neighbors below a vertex directly and must
    agree with ``edge_fn``; it only makes truncations cheaper.
    """

    edge_fn: OracleFn
    lower: Optional[Callable[[int], Iterable[int]]] = field(default=None, compare=False, repr=False)
    _below: Dict[int, FrozenSet[int]] = field(default_factory=dict, compare=False, repr=False)
    _memo: Dict = field(default_factory=dict, compare=False, repr=False)

    def neighbors_below(self, v: int) -> FrozenSet[int]:
        try:
            return self._below[v]
        except KeyError:
            if self.lower is not None:
                out = frozenset(self.lower(v))
            else:
                out = frozenset(u for u in range(v) if self.edge_fn(pair_encode(u, v)) != 0)
            self._below[v] = out
            return out

    def describe(self) -> dict:
        return {"edge_fn": self.edge_fn.describe()}


def edge_query(g: GraphCode, a: int, b: int) -> bool:
    """Symmetrized edge test; may raise :class:`FuelExhausted`."""
    if a == b:
        raise ValueError(f"edge_query on a single vertex {a}")
    if a > b:
        a, b = b, a
    return g.edge_fn(pair_encode(a, b)) != 0


def finite_subgraph(g: GraphCode, m: int) -> FiniteGraph:
    """The subgraph on vertices ``0..m``."""
    edges = [(u, v) for v in range(m + 1) for u in g.neighbors_below(v)]
    return FiniteGraph(m + 1, frozenset(edges))


def graph_from_finite(f: FiniteGraph, fuel_limit: Optional[int] = None) -> GraphCode:
    """The infinite graph with ``f``'s edges; every other vertex is isolated."""
    entries = {pair_encode(a, b): 1 for a, b in f.edges}
    bound = max(entries) + 1 if entries else 0
    return GraphCode(finite_support(entries, 0, bound, fuel_limit))


def empty_graph(fuel_limit: Optional[int] = None) -> GraphCode:
    return GraphCode(constant(0, fuel_limit))


def complete_graph(fuel_limit: Optional[int] = None) -> GraphCode:
    return GraphCode(constant(1, fuel_limit))


def graph_from_rule(label: str, params, rule: Callable[[int, int], bool],
                    lower: Optional[Callable[[int], Iterable[int]]] = None) -> GraphCode:
    """Build a graph whose edge ``(a, b)``, ``a < b``, is decided by ``rule(a, b)``."""

    def fn(n: int) -> int:
        a, b = pair_decode(n)
        return 1 if rule(a, b) else 0

    return GraphCode(derived(label, params, fn), lower)


def complement(g: GraphCode) -> GraphCode:
    return graph_from_rule("complement", {"graph": g.describe()},
                           lambda a, b: not edge_query(g, a, b))


# -- colorings ---------------------------------------------------------------

def _components(adj: List[Set[int]]) -> List[List[int]]:
    seen = [False] * len(adj)
    out = []
    for s in range(len(adj)):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        out.append(sorted(comp))
    return out


def _color_component(comp: List[int], adj: List[Set[int]], k: int,
                     fixed: Mapping[int, int], colors: List[int]) -> bool:
    # index-order backtracking with forward checking; yields the lex-least coloring
    full = (1 << k) - 1
    domain = {v: (1 << fixed[v]) if v in fixed else full for v in comp}
    for v in comp:
        if v in fixed and not 0 <= fixed[v] < k:
            return False

    def assign(i: int) -> bool:
        if i == len(comp):
            return True
        v = comp[i]
        dom = domain[v]
        for c in range(k):
            if not dom >> c & 1:
                continue
            bit = 1 << c
            changed = []
            ok = True
            for u in adj[v]:
                if colors[u] < 0 and domain[u] & bit:
                    domain[u] &= ~bit
                    changed.append(u)
                    if not domain[u]:
                        ok = False
                        break
            if ok:
                colors[v] = c
                if assign(i + 1):
                    return True
                colors[v] = -1
            for u in changed:
                domain[u] |= bit
        return False

    return assign(0)


def find_coloring(f: FiniteGraph, k: int,
                  fixed: Optional[Mapping[int, int]] = None) -> Optional[Tuple[int, ...]]:
    """Lexicographically least proper ``k``-coloring extending ``fixed``, or ``None``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    fixed = dict(fixed or {})
    adj = f.adjacency()
    for a, b in f.edges:
        if a in fixed and b in fixed and fixed[a] == fixed[b]:
            return None
    colors = [-1] * f.num_vertices
    for comp in _components(adj):
        if not _color_component(comp, adj, k, fixed, colors):
            return None
    return tuple(colors)


def is_k_colorable(f: FiniteGraph, k: int) -> bool:
    return find_coloring(f, k) is not None


def subgraph_colorable(g: GraphCode, k: int, m: int) -> bool:
    """Memoized ``is_k_colorable(finite_subgraph(g, m), k)``.

    Consecutive calls reuse the coloring found for ``G_{m-1}``: if ``m`` has a
    free color the answer is immediate, otherwise a full search runs.
    """
    key = ("colorable", k, m)
    if key in g._memo:
        return g._memo[key]
    prev = g._memo.get(("colorable", k, m - 1)) if m > 0 else None
    coloring = None
    if prev is False:
        g._memo[key] = False
        return False
    if prev:
        base = g._memo[("coloring", k, m - 1)]
        used = {base[w] for w in g.neighbors_below(m)}
        free = next((c for c in range(k) if c not in used), None)
        if free is not None:
            coloring = base + (free,)
    if coloring is None:
        coloring = find_coloring(finite_subgraph(g, m), k)
    g._memo[key] = coloring is not None
    if coloring is not None:
        g._memo[("coloring", k, m)] = coloring
    return g._memo[key]


def check_coloring(g: GraphCode, f: OracleFn, k: int, bound: int) -> Verdict:
    """Is ``f`` a proper ``k``-coloring of ``g`` on the vertices below ``bound``?

    Never claims anything about vertices at or above ``bound``.
    """
    try:
        for v in range(bound):
            c = f(v)
            if not 0 <= c < k:
                return Verdict.invalid(("color", v, c), f"vertex {v} has color {c} outside 0..{k - 1}")
            for u in sorted(g.neighbors_below(v)):
                if f(u) == c:
                    return Verdict.invalid((u, v), f"edge ({u}, {v}) is monochromatic")
    except FuelExhausted as exc:
        return Verdict.unknown(str(exc))
    return Verdict.valid()


# -- embeddings --------------------------------------------------------------

def _pattern_order(adj: List[Set[int]]) -> List[int]:
    order: List[int] = []
    placed: Set[int] = set()
    n = len(adj)
    while len(order) < n:
        best = max((v for v in range(n) if v not in placed),
                   key=lambda v: (len(adj[v] & placed), len(adj[v]), -v))
        order.append(best)
        placed.add(best)
    return order


@lru_cache(maxsize=512)
def _plan(h: FiniteGraph):
    """Search order for a pattern, with the earlier vertices split by adjacency."""
    hadj = h.adjacency()
    order = _pattern_order(hadj)
    nbrs = [[u for u in order[:i] if u in hadj[v]] for i, v in enumerate(order)]
    others = [[u for u in order[:i] if u not in hadj[v]] for i, v in enumerate(order)]
    return hadj, order, nbrs, others


def find_embedding(h: FiniteGraph, f: FiniteGraph,
                   induced: bool = False) -> Optional[Dict[int, int]]:
    """Injective map of ``h``'s vertices into ``f`` carrying edges to edges.

    With ``induced`` non-edges must also go to non-edges.
    """
    if h.num_vertices > f.num_vertices or len(h.edges) > len(f.edges):
        return None
    hadj, order, nbrs, others = _plan(h)
    fadj = f.adjacency()
    everything = frozenset(range(f.num_vertices))
    image: Dict[int, int] = {}
    used: Set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        if nbrs[i]:
            cands = set.intersection(*(fadj[image[u]] for u in nbrs[i]))
        else:
            cands = set(everything)
        cands -= used
        if induced:
            for u in others[i]:
                cands -= fadj[image[u]]
        need = len(hadj[v])
        for c in sorted(cands):
            if len(fadj[c]) < need:
                continue
            image[v] = c
            used.add(c)
            if extend(i + 1):
                return True
            del image[v]
            used.discard(c)
        return False

    return dict(image) if extend(0) else None


def embedding_exists(h: FiniteGraph, f: FiniteGraph, induced: bool = False) -> bool:
    return find_embedding(h, f, induced) is not None
