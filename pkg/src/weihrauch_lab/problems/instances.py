"""Instances, parallelized (hat) payloads and their solutions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, Optional, Tuple, Union

from ..encodings import GraphCode, OracleFn, TreeCode, derived, diag_decode, diag_encode
from ..encodings.oracles import canonical
from .certificates import Certificate, HatOf, describe_certificate, lazy_hat_of
from .ids import Hat, ProblemId


class ShapeError(TypeError):
    """A payload or solution does not have the shape its problem expects."""


@dataclass(frozen=True)
class _Rows:
    """Row storage shared by hat payloads and hat solutions.

    Explicit rows past the end repeat the last row; lazy rows come from ``fn``.
    """

    rows: Tuple[Any, ...] = ()
    fn: Optional[Callable[[int], Any]] = field(default=None, compare=False, repr=False)
    width: Optional[int] = None
    key: str = ""
    _memo: Dict[int, Any] = field(default_factory=dict, compare=False, repr=False)

    def row(self, i: int) -> Any:
        if i < 0:
            raise IndexError(i)
        if self.fn is None:
            return self.rows[min(i, len(self.rows) - 1)]
        if self.width is not None:
            i = min(i, self.width - 1)
        if i not in self._memo:
            self._memo[i] = self.fn(i)
        return self._memo[i]

    @property
    def row_count(self) -> Optional[int]:
        """Number of distinct rows, ``None`` when infinitely many."""
        if self.fn is None:
            return len(self.rows)
        return self.width


@dataclass(frozen=True)
class HatPayload(_Rows):
    base: Optional[ProblemId] = None

    def describe(self) -> dict:
        if self.fn is None:
            return {"rows": [r.describe() for r in self.rows]}
        return {"derived": self.key, "width": self.width}

    def as_oracle(self) -> OracleFn:
        """Single function ``f(diag_encode(i, n)) = row_i(n)`` for rows whose payload is a function."""

        def fn(c: int) -> int:
            i, n = diag_decode(c)
            payload = self.row(i).payload
            if not isinstance(payload, OracleFn):
                raise ShapeError("rows are not number functions")
            return payload(n)

        return derived("hat_as_oracle", {"hat": self.describe()}, fn)


@dataclass(frozen=True)
class HatSolution(_Rows):
    def describe(self) -> dict:
        if self.fn is None:
            return {"rows": [describe_solution(r) for r in self.rows]}
        return {"derived": self.key}


Payload = Union[OracleFn, GraphCode, TreeCode, Tuple[GraphCode, GraphCode], HatPayload]
Solution = Union[int, OracleFn, HatSolution]


def lazy_rows(cls, fn: Callable[[int], Any], params: Any, width: Optional[int] = None, **kw):
    return cls((), fn, width, canonical(params), **kw)


@dataclass(frozen=True)
class Instance:
    problem: ProblemId
    payload: Any
    certificate: Optional[Certificate] = None

    def __post_init__(self):
        check_payload_shape(self.problem, self.payload)

    def with_certificate(self, certificate: Optional[Certificate]) -> "Instance":
        return Instance(self.problem, self.payload, certificate)

    def describe(self) -> dict:
        return {"problem": self.problem.describe(),
                "payload": describe_payload(self.payload),
                "certificate": describe_certificate(self.certificate)}

    def row(self, i: int) -> "Instance":
        return hat_row(self, i)


def describe_payload(payload: Any) -> Any:
    if isinstance(payload, tuple):
        return {"graph": payload[0].describe(), "pattern": payload[1].describe()}
    return payload.describe()


def describe_solution(sol: Any) -> Any:
    if isinstance(sol, int):
        return sol
    return sol.describe()


def check_payload_shape(problem: ProblemId, payload: Any) -> None:
    name = problem.name
    if name in ("LPO", "LLPO"):
        ok = isinstance(payload, OracleFn)
    elif name in ("LG", "GC", "TC", "S_L", "S_vecL", "SF", "RC", "D"):
        ok = isinstance(payload, GraphCode)
    elif name in ("WKL", "WKLn"):
        ok = isinstance(payload, TreeCode) and payload.branching == problem.alphabet
    elif name == "WF":
        ok = isinstance(payload, TreeCode)
    elif name == "S":
        ok = (isinstance(payload, tuple) and len(payload) == 2
              and all(isinstance(g, GraphCode) for g in payload))
    else:
        ok = isinstance(payload, HatPayload) and payload.base == problem.base
    if not ok:
        raise ShapeError(f"payload of type {type(payload).__name__} does not fit {problem}")


def check_solution_shape(problem: ProblemId, sol: Any) -> None:
    name = problem.name
    if name in ("GC", "TC", "WKL", "WKLn", "S_vecL"):
        ok = isinstance(sol, OracleFn)
    elif name == "Hat":
        ok = isinstance(sol, HatSolution)
    else:
        ok = isinstance(sol, int) and not isinstance(sol, bool)
    if not ok:
        raise ShapeError(f"solution of type {type(sol).__name__} does not fit {problem}")


def hat_pack(instances: Iterable[Instance]) -> Instance:
    """Parallelize finitely many instances; rows past the end repeat the last one."""
    rows = tuple(instances)
    if not rows:
        raise ValueError("hat_pack needs at least one instance")
    base = rows[0].problem
    if any(r.problem != base for r in rows):
        raise ValueError("hat_pack rows must share one problem")
    certificate = None
    if all(r.certificate is not None for r in rows):
        certificate = HatOf(tuple(r.certificate for r in rows))
    payload = HatPayload(rows, None, None, "", base=base)
    return Instance(Hat(base), payload, certificate)


def hat_lazy(base: ProblemId, fn: Callable[[int], Instance], params: Any,
             width: Optional[int] = None) -> Instance:
    """Parallelize a (possibly infinite) computed family of instances."""
    payload = lazy_rows(HatPayload, fn, params, width, base=base)
    certificate = lazy_hat_of(lambda i: payload.row(i).certificate, {"rows_of": params})
    return Instance(Hat(base), payload, certificate)


def hat_row(inst: Instance, i: int) -> Instance:
    if not inst.problem.is_hat:
        raise ShapeError(f"{inst.problem} is not a parallelized problem")
    row = inst.payload.row(i)
    if row.certificate is None and isinstance(inst.certificate, HatOf):
        row = row.with_certificate(inst.certificate.row(i))
    return row


def hat_from_oracle(base: ProblemId, f: OracleFn) -> Instance:
    """Rows ``f_i(n) = f(diag_encode(i, n))`` of a single function over pair codes."""

    def row(i: int) -> Instance:
        fi = derived("hat_row", {"of": f.describe(), "row": i}, lambda n: f(diag_encode(i, n)))
        return Instance(base, fi)

    payload = lazy_rows(HatPayload, row, {"of": f.describe()}, None, base=base)
    return Instance(Hat(base), payload)


def hat_solution(rows: Iterable[Solution]) -> HatSolution:
    return HatSolution(tuple(rows))


def lazy_hat_solution(fn: Callable[[int], Solution], params: Any) -> HatSolution:
    return lazy_rows(HatSolution, fn, params)
