"""Trees coded by a function on sequence codes."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .coding import OMEGA, Branching, seq_decode, seq_encode
from .oracles import OracleFn, constant, derived, register_builder, from_description


@dataclass(frozen=True)
class TreeCode:
    """``sigma`` is in the tree iff ``node_fn`` is positive on the code of every
    initial segment of ``sigma`` (``sigma`` included)."""

    branching: Branching
    node_fn: OracleFn
    _ext: Dict[Tuple[Tuple[int, ...], int], bool] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if self.branching is not OMEGA and self.branching < 2:
            raise ValueError(f"branching must be >= 2 or OMEGA, got {self.branching}")

    @property
    def finitely_branching(self) -> bool:
        return self.branching is not OMEGA

    def code(self, seq: Sequence[int]) -> int:
        return seq_encode(self.branching, seq)

    def decode(self, code: int) -> Tuple[int, ...]:
        key = ("decode", code)
        hit = self._ext.get(key)
        if hit is None:
            hit = self._ext[key] = seq_decode(self.branching, code)
        return hit

    def describe(self) -> dict:
        return {"branching": "omega" if self.branching is OMEGA else self.branching,
                "node_fn": self.node_fn.describe()}


def tree_member(t: TreeCode, seq: Sequence[int]) -> bool:
    """Downward-closed membership; may raise :class:`FuelExhausted`."""
    seq = tuple(seq)
    key = ("member", seq)
    hit = t._ext.get(key)
    if hit is not None:
        return hit
    # walk up to the longest prefix already decided
    start = len(seq)
    while start > 0 and ("member", seq[:start - 1]) not in t._ext:
        start -= 1
    result = t._ext.get(("member", seq[:start - 1]), True) if start > 0 else True
    for i in range(start, len(seq) + 1):
        if result:
            result = t.node_fn(t.code(seq[:i])) > 0
        t._ext[("member", seq[:i])] = result
    return result


def _extends_to(t: TreeCode, node: Tuple[int, ...], length: int) -> bool:
    # node is assumed to be a member already
    if len(node) >= length:
        return True
    key = (node, length)
    hit = t._ext.get(key)
    if hit is not None:
        return hit
    result = False
    for x in range(t.branching):
        child = node + (x,)
        if t.node_fn(t.code(child)) > 0 and _extends_to(t, child, length):
            result = True
            break
    t._ext[key] = result
    return result


def has_extension(t: TreeCode, seq: Sequence[int], length: int) -> bool:
    """Does some member of ``t`` of the given length extend ``seq``?"""
    if not t.finitely_branching:
        raise ValueError("extension search needs a finitely branching tree")
    seq = tuple(seq)
    if len(seq) > length:
        return tree_member(t, seq[:length]) and tree_member(t, seq)
    return tree_member(t, seq) and _extends_to(t, seq, length)


def tree_has_level(t: TreeCode, m: int) -> bool:
    """Is there a member of length ``m``? Pruned depth-first search."""
    if not t.finitely_branching:
        raise ValueError("tree_has_level is undecidable by scanning an omega-branching tree")
    return has_extension(t, (), m)


def full_tree(branching: Branching) -> TreeCode:
    return TreeCode(branching, constant(1))


def depth_tree(branching: Branching, depth: int) -> TreeCode:
    """Every sequence of length at most ``depth``; over the naturals with depth 1
    this is an infinite antichain below the root."""
    params = {"branching": "omega" if branching is OMEGA else branching, "depth": depth}

    def length(c: int) -> int:
        # over the naturals each entry sets exactly one bit
        return bin(c).count("1") if branching is OMEGA else len(seq_decode(branching, c))

    return TreeCode(branching, derived("depth_tree", params,
                                       lambda c: 1 if length(c) <= depth else 0))


def _node_set_tree(branching: Branching, path: Optional[OracleFn],
                   nodes: Iterable[Sequence[int]]) -> TreeCode:
    # all prefixes of `path` plus the downward closure of `nodes`
    closure = set()
    for node in nodes:
        node = tuple(node)
        for i in range(len(node) + 1):
            closure.add(node[:i])
    params = {"branching": "omega" if branching is OMEGA else branching,
              "path": path.describe() if path is not None else None,
              "nodes": sorted(list(s) for s in {tuple(n) for n in nodes})}

    def fn(code: int) -> int:
        seq = seq_decode(branching, code)
        if seq in closure:
            return 1
        if path is not None and all(path(i) == x for i, x in enumerate(seq)):
            return 1
        return 0

    return TreeCode(branching, derived("path_tree", params, fn))


def path_tree(branching: Branching, path: Optional[OracleFn],
              nodes: Iterable[Sequence[int]] = ()) -> TreeCode:
    """Tree of all prefixes of ``path`` together with finitely many extra nodes."""
    return _node_set_tree(branching, path, list(nodes))


def finite_tree(branching: Branching, nodes: Iterable[Sequence[int]]) -> TreeCode:
    return _node_set_tree(branching, None, list(nodes))


def _rebuild_path_tree(params) -> OracleFn:
    b = params["branching"]
    branching = OMEGA if b == "omega" else int(b)
    p = params.get("path")
    path = from_description(p) if p is not None else None
    return _node_set_tree(branching, path, [tuple(n) for n in params["nodes"]]).node_fn


def _rebuild_depth_tree(params) -> OracleFn:
    b = params["branching"]
    return depth_tree(OMEGA if b == "omega" else int(b), int(params["depth"])).node_fn


register_builder("path_tree", _rebuild_path_tree)
register_builder("depth_tree", _rebuild_depth_tree)
