"""Answer certificates carried by generated instances.

A certificate records what the generator knows about an infinite object
(where the first zero is, a path through the tree, an embedding). Checkers
re-verify it up to their budget and then trust it for the part beyond.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, Tuple, Union

from ..encodings import OracleFn, from_description
from ..encodings.oracles import canonical


class CertificateError(Exception):
    """A certificate is missing, of the wrong kind, or contradicted by its instance."""


@dataclass(frozen=True)
class FirstZero:
    """LPO input: ``p(index) == 0`` and ``p`` is positive before it."""
    index: int


@dataclass(frozen=True)
class NoZero:
    """LPO input: ``p`` is positive everywhere."""


@dataclass(frozen=True)
class FirstNonzero:
    """LLPO input: ``p(index) != 0`` and ``p`` vanishes before it."""
    index: int


@dataclass(frozen=True)
class AllZero:
    """LLPO input: ``p`` vanishes everywhere."""


@dataclass(frozen=True)
class KnownAnswer:
    """A numeric answer known to be correct (for LLPO: one correct answer)."""
    value: int


@dataclass(frozen=True)
class KnownColoring:
    coloring: OracleFn


@dataclass(frozen=True)
class PathGen:
    """An infinite path; ``horizon``, when set, bounds the length of every node off the path."""
    path: OracleFn
    horizon: Optional[int] = None


@dataclass(frozen=True)
class Finite:
    """The tree has no node of length ``depth``."""
    depth: int


@dataclass(frozen=True)
class EmbedsAt:
    """The pattern embeds; ``mapping(v)`` is the image of pattern vertex ``v``."""
    mapping: OracleFn


@dataclass(frozen=True)
class NoEmbedding:
    """Already the first ``bound`` pattern vertices fail to embed."""
    bound: int


@dataclass(frozen=True)
class HatOf:
    """Per-row certificates; an explicit tuple repeats its last entry, ``fn`` is lazy."""
    rows: Tuple["Certificate", ...] = ()
    fn: Optional[Callable[[int], "Certificate"]] = field(default=None, compare=False, repr=False)
    key: str = ""
    _memo: Dict[int, Any] = field(default_factory=dict, compare=False, repr=False)

    def row(self, i: int) -> "Certificate":
        if self.fn is None:
            if not self.rows:
                raise CertificateError("empty HatOf certificate")
            return self.rows[min(i, len(self.rows) - 1)]
        if i not in self._memo:
            self._memo[i] = self.fn(i)
        return self._memo[i]


Certificate = Union[FirstZero, NoZero, FirstNonzero, AllZero, KnownAnswer, KnownColoring,
                    PathGen, Finite, EmbedsAt, NoEmbedding, HatOf]


def lazy_hat_of(fn: Callable[[int], Certificate], params: Any) -> HatOf:
    return HatOf((), fn, canonical(params))


def describe_certificate(cert: Optional[Certificate]) -> Any:
    if cert is None:
        return None
    kind = type(cert).__name__
    if isinstance(cert, (FirstZero, FirstNonzero)):
        return {"kind": kind, "index": cert.index}
    if isinstance(cert, KnownAnswer):
        return {"kind": kind, "value": cert.value}
    if isinstance(cert, KnownColoring):
        return {"kind": kind, "coloring": cert.coloring.describe()}
    if isinstance(cert, PathGen):
        return {"kind": kind, "path": cert.path.describe(), "horizon": cert.horizon}
    if isinstance(cert, Finite):
        return {"kind": kind, "depth": cert.depth}
    if isinstance(cert, EmbedsAt):
        return {"kind": kind, "mapping": cert.mapping.describe()}
    if isinstance(cert, NoEmbedding):
        return {"kind": kind, "bound": cert.bound}
    if isinstance(cert, HatOf):
        if cert.fn is not None:
            return {"kind": kind, "derived": cert.key}
        return {"kind": kind, "rows": [describe_certificate(c) for c in cert.rows]}
    return {"kind": kind}


def certificate_from_description(desc: Any) -> Optional[Certificate]:
    if desc is None:
        return None
    desc = dict(desc)
    kind = desc.pop("kind", None)
    if kind == "FirstZero":
        out = FirstZero(int(desc.pop("index")))
    elif kind == "NoZero":
        out = NoZero()
    elif kind == "FirstNonzero":
        out = FirstNonzero(int(desc.pop("index")))
    elif kind == "AllZero":
        out = AllZero()
    elif kind == "KnownAnswer":
        out = KnownAnswer(int(desc.pop("value")))
    elif kind == "KnownColoring":
        out = KnownColoring(from_description(desc.pop("coloring")))
    elif kind == "PathGen":
        out = PathGen(from_description(desc.pop("path")), desc.pop("horizon", None))
    elif kind == "Finite":
        out = Finite(int(desc.pop("depth")))
    elif kind == "EmbedsAt":
        out = EmbedsAt(from_description(desc.pop("mapping")))
    elif kind == "NoEmbedding":
        out = NoEmbedding(int(desc.pop("bound")))
    elif kind == "HatOf":
        if "rows" not in desc:
            raise ValueError("lazily derived HatOf certificates cannot be read from a file")
        out = HatOf(tuple(certificate_from_description(c) for c in desc.pop("rows")))
    else:
        raise ValueError(f"unknown certificate kind {kind!r}")
    if desc:
        raise ValueError(f"unknown certificate fields {sorted(desc)}")
    return out
