"""The linear graph L and its tagged variants L_n."""

from __future__ import annotations

from ..encodings import FiniteGraph, GraphCode, graph_from_rule


def linear_graph() -> GraphCode:
    """Vertices ``v_i = i`` with edges ``(i, i + 1)``."""
    return graph_from_rule("linear", {}, lambda a, b: b == a + 1,
                           lambda b: [b - 1] if b > 0 else [])


def _tagged_edge(n: int, a: int, b: int) -> bool:
    # layout: 0 is v_0; 1..n+2 complete the (n+3)-cycle through v_0;
    # v_i for i >= 1 sits at n + 2 + i
    last = n + 2
    if b <= last:
        return b == a + 1 or (a == 0 and b == last)
    if a == 0:
        return b == last + 1
    return a > last and b == a + 1


def tagged_linear(n: int) -> GraphCode:
    """``L_n``: the ray with a cycle of size ``n + 3`` through its first vertex."""
    if n < 0:
        raise ValueError("tag index must be a natural number")
    return graph_from_rule("tagged_linear", {"n": n}, lambda a, b: _tagged_edge(n, a, b),
                           lambda b: _tagged_below(n, b))


def _tagged_below(n: int, b: int):
    last = n + 2
    if b == 0:
        return []
    if b < last:
        return [b - 1]
    if b == last:
        return [0, b - 1]
    if b == last + 1:
        return [0]
    return [b - 1]


def tagged_ray_vertex(n: int, i: int) -> int:
    """Vertex number of ``v_i`` inside ``tagged_linear(n)``."""
    return 0 if i == 0 else n + 2 + i


def linear_prefix(r: int) -> FiniteGraph:
    return FiniteGraph.from_edges(r, ((i, i + 1) for i in range(r - 1)))


def tagged_prefix(n: int, r: int) -> FiniteGraph:
    """The first ``r`` vertices of ``L_n`` with the edges among them."""
    return FiniteGraph.from_edges(
        r, ((a, b) for b in range(r) for a in range(b) if _tagged_edge(n, a, b)))
