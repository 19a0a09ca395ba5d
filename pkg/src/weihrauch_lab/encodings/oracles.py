"""Total functions N -> N with a finite description and an explicit fuel limit.

An :class:`OracleFn` never answers beyond its ``fuel_limit``: asking for an
index at or above the limit raises :class:`FuelExhausted`, which callers turn
into an ``Unknown`` verdict instead of guessing a value.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union


class FuelExhausted(Exception):
    """An oracle (or a search over one) was asked to go past its budget."""

    def __init__(self, index: int, limit: int, what: str = "oracle"):
        super().__init__(f"{what}: index {index} is beyond fuel limit {limit}")
        self.index = index
        self.limit = limit


@dataclass(frozen=True)
class FiniteSupport:
    entries: Tuple[Tuple[int, int], ...]
    default: int = 0
    support_bound: int = 0
    _lookup: Dict[int, int] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_lookup", dict(self.entries))
        seen = set()
        for idx, value in self.entries:
            if idx < 0 or value < 0:
                raise ValueError(f"negative entry ({idx}, {value})")
            if idx in seen:
                raise ValueError(f"index {idx} listed twice")
            if idx >= self.support_bound:
                raise ValueError(f"index {idx} outside support bound {self.support_bound}")
            seen.add(idx)


@dataclass(frozen=True)
class Periodic:
    prefix: Tuple[int, ...]
    cycle: Tuple[int, ...]

    def __post_init__(self):
        if not self.cycle:
            raise ValueError("periodic oracle needs a nonempty cycle")


@dataclass(frozen=True)
class Tabled:
    values: Tuple[int, ...]
    tail_value: int = 0


@dataclass(frozen=True)
class Derived:
    """A function computed from other objects; ``key`` is its canonical description."""

    label: str
    key: str
    fn: Callable[[int], int] = field(compare=False, repr=False)


Descriptor = Union[FiniteSupport, Periodic, Tabled, Derived]


def canonical(params: Any) -> str:
    return json.dumps(params, sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class OracleFn:
    descriptor: Descriptor
    fuel_limit: Optional[int] = None
    _memo: Dict[int, int] = field(default_factory=dict, compare=False, repr=False)

    def __call__(self, n: int) -> int:
        memo = self._memo
        if n in memo:
            return memo[n]
        if n < 0:
            raise ValueError(f"oracle queried at negative index {n}")
        if self.fuel_limit is not None and n >= self.fuel_limit:
            raise FuelExhausted(n, self.fuel_limit)
        d = self.descriptor
        if isinstance(d, FiniteSupport):
            return d._lookup.get(n, d.default)
        if isinstance(d, Periodic):
            if n < len(d.prefix):
                return d.prefix[n]
            return d.cycle[(n - len(d.prefix)) % len(d.cycle)]
        if isinstance(d, Tabled):
            return d.values[n] if n < len(d.values) else d.tail_value
        value = memo[n] = d.fn(n)
        return value

    def prefix(self, length: int) -> List[int]:
        return [self(i) for i in range(length)]

    def values(self) -> Iterator[int]:
        n = 0
        while True:
            yield self(n)
            n += 1

    def with_fuel(self, fuel_limit: Optional[int]) -> "OracleFn":
        return OracleFn(self.descriptor, fuel_limit)

    def describe(self) -> Dict[str, Any]:
        """JSON-compatible digest: the finite description plus the fuel limit."""
        d = self.descriptor
        if isinstance(d, FiniteSupport):
            body = {"kind": "finite_support", "entries": [list(e) for e in d.entries],
                    "default": d.default, "support_bound": d.support_bound}
        elif isinstance(d, Periodic):
            body = {"kind": "periodic", "prefix": list(d.prefix), "cycle": list(d.cycle)}
        elif isinstance(d, Tabled):
            body = {"kind": "tabled", "values": list(d.values), "tail_value": d.tail_value}
        else:
            body = {"kind": "derived", "label": d.label, "params": json.loads(d.key)}
        body["fuel"] = self.fuel_limit
        return body


def constant(value: int, fuel_limit: Optional[int] = None) -> OracleFn:
    return OracleFn(Tabled((), value), fuel_limit)


def finite_support(entries: Dict[int, int], default: int = 0,
                   support_bound: Optional[int] = None,
                   fuel_limit: Optional[int] = None) -> OracleFn:
    items = tuple(sorted(entries.items()))
    bound = support_bound if support_bound is not None else (items[-1][0] + 1 if items else 0)
    return OracleFn(FiniteSupport(items, default, bound), fuel_limit)


def periodic(prefix: Sequence[int], cycle: Sequence[int],
             fuel_limit: Optional[int] = None) -> OracleFn:
    return OracleFn(Periodic(tuple(prefix), tuple(cycle)), fuel_limit)


def tabled(values: Sequence[int], tail_value: int = 0,
           fuel_limit: Optional[int] = None) -> OracleFn:
    return OracleFn(Tabled(tuple(values), tail_value), fuel_limit)


def derived(label: str, params: Any, fn: Callable[[int], int],
            fuel_limit: Optional[int] = None) -> OracleFn:
    return OracleFn(Derived(label, canonical(params), fn), fuel_limit)


def table_then_shift(table: Sequence[int], offset: int,
                     fuel_limit: Optional[int] = None) -> OracleFn:
    """``table[n]`` inside the table, ``offset + n`` past its end."""
    table = tuple(table)
    return derived("table_then_shift", {"table": list(table), "offset": offset},
                   lambda n: table[n] if n < len(table) else offset + n, fuel_limit)


# label -> builder(params) for derived oracles that can be rebuilt from a digest
_BUILDERS: Dict[str, Callable[[Any], OracleFn]] = {}


def register_builder(label: str, builder: Callable[[Any], OracleFn]) -> None:
    _BUILDERS[label] = builder


register_builder("table_then_shift",
                 lambda params: table_then_shift(params["table"], int(params["offset"])))


def from_description(desc: Dict[str, Any]) -> OracleFn:
    """Inverse of :meth:`OracleFn.describe` for serializable descriptors."""
    desc = dict(desc)
    fuel = desc.pop("fuel", None)
    kind = desc.pop("kind", None)
    if kind == "finite_support":
        entries = tuple((int(i), int(v)) for i, v in desc.pop("entries"))
        out = OracleFn(FiniteSupport(entries, int(desc.pop("default", 0)),
                                     int(desc.pop("support_bound"))), fuel)
    elif kind == "periodic":
        out = OracleFn(Periodic(tuple(desc.pop("prefix")), tuple(desc.pop("cycle"))), fuel)
    elif kind == "tabled":
        out = OracleFn(Tabled(tuple(desc.pop("values")), int(desc.pop("tail_value", 0))), fuel)
    elif kind == "derived":
        label = desc.pop("label")
        params = desc.pop("params")
        if label not in _BUILDERS:
            raise ValueError(f"derived oracle {label!r} cannot be rebuilt from a file")
        out = _BUILDERS[label](params).with_fuel(fuel)
    else:
        raise ValueError(f"unknown oracle kind {kind!r}")
    if desc:
        raise ValueError(f"unknown oracle fields {sorted(desc)}")
    return out
