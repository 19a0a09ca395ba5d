"""Unpruned enumerations that the pruned searches are checked against."""

from __future__ import annotations

import itertools
from typing import Dict, Iterator, List, Set, Tuple

from ..encodings import FiniteGraph, find_coloring, find_embedding
from .engine import Report

MAX_EXHAUSTIVE = 6


def all_graphs(n: int) -> Iterator[FiniteGraph]:
    """Every labelled graph on ``n`` vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield FiniteGraph.from_edges(n, (p for i, p in enumerate(pairs) if mask >> i & 1))


def _edge_mask(g: FiniteGraph) -> int:
    pairs = list(itertools.combinations(range(g.num_vertices), 2))
    return sum(1 << i for i, p in enumerate(pairs) if p in g.edges)


def _relabel_mask(g: FiniteGraph, perm) -> int:
    return _edge_mask(FiniteGraph.from_edges(
        g.num_vertices, ((perm[a], perm[b]) for a, b in g.edges)))


def unlabelled_graphs(n: int) -> List[FiniteGraph]:
    """One representative per isomorphism class, the one with the least edge mask."""
    seen: Set[int] = set()
    out = []
    perms = list(itertools.permutations(range(n)))
    for g in all_graphs(n):
        canon = min(_relabel_mask(g, p) for p in perms)
        if canon not in seen:
            seen.add(canon)
            out.append(g)
    return out


def brute_colorable(g: FiniteGraph, k: int) -> bool:
    for colors in itertools.product(range(k), repeat=g.num_vertices):
        if all(colors[a] != colors[b] for a, b in g.edges):
            return True
    return False


def pulled_back_masks(f: FiniteGraph, h_size: int) -> Set[int]:
    """For every injective ``tau`` from ``h_size`` vertices into ``f``, the edge mask of
    ``f`` read back through ``tau``."""
    pairs = list(itertools.combinations(range(h_size), 2))
    n = f.num_vertices
    adj = [[False] * n for _ in range(n)]
    for a, b in f.edges:
        adj[a][b] = adj[b][a] = True
    out = set()
    for tau in itertools.permutations(range(n), h_size):
        out.add(sum(1 << i for i, (a, b) in enumerate(pairs) if adj[tau[a]][tau[b]]))
    return out


def brute_embeds(h_mask: int, masks: Set[int], induced: bool) -> bool:
    if induced:
        return h_mask in masks
    return any(h_mask & ~m == 0 for m in masks)


def _disagreement(report: Report, what: Dict) -> None:
    report.invalid += 1
    report.failures.append({"index": report.cases - 1, "seed": 0, "status": "invalid", **what})


def crosscheck_colorability(size_bound: int, max_k: int = 4) -> Report:
    report = Report("crosscheck:colorability", "all_graphs", 0, 0, size_bound)
    for n in range(1, size_bound + 1):
        for g in all_graphs(n):
            for k in range(1, max_k + 1):
                report.cases += 1
                pruned = find_coloring(g, k)
                if pruned is not None and any(pruned[a] == pruned[b] for a, b in g.edges):
                    _disagreement(report, {"graph": g.describe(), "k": k, "reason": "improper coloring"})
                elif (pruned is not None) != brute_colorable(g, k):
                    _disagreement(report, {"graph": g.describe(), "k": k,
                                           "pruned": pruned is not None})
                else:
                    report.valid += 1
    report.count = report.cases
    return report


def _patterns(size_bound: int) -> List[FiniteGraph]:
    # every labelled pattern up to three vertices, one per isomorphism class above
    # that; hosts stay fully labelled, so the search still meets every labelling
    out: List[FiniteGraph] = []
    for n in range(1, size_bound + 1):
        out.extend(all_graphs(n) if n <= 3 else unlabelled_graphs(n))
    return out


def crosscheck_embedding(size_bound: int) -> Report:
    report = Report("crosscheck:embedding", "all_graphs", 0, 0, size_bound)
    patterns = [(h, _edge_mask(h)) for h in _patterns(size_bound)]
    for n in range(1, size_bound + 1):
        for f in all_graphs(n):
            masks = {s: pulled_back_masks(f, s) for s in range(1, n + 1)}
            for h, h_mask in patterns:
                for induced in (False, True):
                    report.cases += 1
                    found = find_embedding(h, f, induced)
                    truth = h.num_vertices <= n and brute_embeds(h_mask, masks[h.num_vertices], induced)
                    if found is not None and not _is_embedding(h, f, found, induced):
                        _disagreement(report, {"pattern": h.describe(), "host": f.describe(),
                                               "induced": induced, "reason": "bad map"})
                    elif (found is not None) != truth:
                        _disagreement(report, {"pattern": h.describe(), "host": f.describe(),
                                               "induced": induced, "pruned": found is not None})
                    else:
                        report.valid += 1
    report.count = report.cases
    return report


def _is_embedding(h: FiniteGraph, f: FiniteGraph, image: Dict[int, int], induced: bool) -> bool:
    if sorted(image) != list(range(h.num_vertices)) or len(set(image.values())) != len(image):
        return False
    for a, b in itertools.combinations(range(h.num_vertices), 2):
        he, fe = h.has_edge(a, b), f.has_edge(image[a], image[b])
        if (he and not fe) or (induced and fe and not he):
            return False
    return True


def oracle_crosscheck(kind: str, size_bound: int) -> Report:
    """Compare the pruned search for ``kind`` with full enumeration on every graph
    with at most ``size_bound`` vertices."""
    if size_bound > MAX_EXHAUSTIVE:
        raise ValueError(f"exhaustive enumeration is limited to {MAX_EXHAUSTIVE} vertices")
    if kind == "colorability":
        return crosscheck_colorability(size_bound)
    if kind == "embedding":
        return crosscheck_embedding(size_bound)
    raise ValueError(f"unknown cross-check {kind!r}")


def agree_on(h: FiniteGraph, f: FiniteGraph, induced: bool = False) -> Tuple[bool, bool]:
    """(pruned, brute) answers for one pair, handy for spot checks."""
    masks = pulled_back_masks(f, h.num_vertices) if h.num_vertices <= f.num_vertices else set()
    return (find_embedding(h, f, induced) is not None,
            h.num_vertices <= f.num_vertices and brute_embeds(_edge_mask(h), masks, induced))
