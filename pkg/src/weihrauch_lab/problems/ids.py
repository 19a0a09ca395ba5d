"""Names of the problems, with their parameters."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..encodings import FiniteGraph

#: every base problem name; ``Hat`` wraps one of these (or another ``Hat``)
BASE_NAMES = ("LPO", "LLPO", "LG", "GC", "TC", "WKL", "WKLn", "WF",
              "S", "S_L", "S_vecL", "SF", "RC", "D")


@dataclass(frozen=True)
class ProblemId:
    name: str
    k: Optional[int] = None
    pattern: Optional[FiniteGraph] = None
    base: Optional["ProblemId"] = None

    def __post_init__(self):
        n, k = self.name, self.k
        if n == "Hat":
            if self.base is None:
                raise ValueError("Hat needs a base problem")
            return
        if n not in BASE_NAMES:
            raise ValueError(f"unknown problem {n!r}")
        if n == "LG" and (k is None or k < 1):
            raise ValueError("LG needs k >= 1")
        if n in ("GC", "TC") and (k is None or k < 2):
            raise ValueError(f"{n} needs k >= 2")
        if n == "WKLn" and (k is None or k < 2):
            raise ValueError("WKLn needs n >= 2")
        if n == "SF" and (self.pattern is None or self.pattern.num_vertices < 2):
            raise ValueError("SF needs a finite graph with at least two vertices")

    @property
    def is_hat(self) -> bool:
        return self.name == "Hat"

    @property
    def alphabet(self) -> Optional[int]:
        """Label bound of the trees a WKL-style problem accepts."""
        if self.name == "WKL":
            return 2
        if self.name == "WKLn":
            return self.k
        return None

    def __str__(self) -> str:
        if self.name == "Hat":
            return f"Hat({self.base})"
        if self.name in ("LG", "GC", "TC"):
            return f"{self.name}{self.k}"
        if self.name == "WKLn":
            return f"WKL{self.k}"
        if self.name == "SF":
            edges = ",".join(f"{a}-{b}" for a, b in sorted(self.pattern.edges))
            return f"SF[{self.pattern.num_vertices};{edges}]"
        return self.name

    def describe(self) -> dict:
        out: dict = {"name": self.name}
        if self.k is not None:
            out["k"] = self.k
        if self.pattern is not None:
            out["pattern"] = self.pattern.describe()
        if self.base is not None:
            out["base"] = self.base.describe()
        return out

    @classmethod
    def from_description(cls, desc: dict) -> "ProblemId":
        desc = dict(desc)
        name = desc.pop("name")
        k = desc.pop("k", None)
        pattern = desc.pop("pattern", None)
        base = desc.pop("base", None)
        if desc:
            raise ValueError(f"unknown problem fields {sorted(desc)}")
        if pattern is not None:
            pattern = FiniteGraph.from_edges(pattern["num_vertices"], map(tuple, pattern["edges"]))
        if base is not None:
            base = cls.from_description(base)
        return cls(name, k, pattern, base)


LPO = ProblemId("LPO")
LLPO = ProblemId("LLPO")
WKL = ProblemId("WKL")
WF = ProblemId("WF")
S = ProblemId("S")
S_L = ProblemId("S_L")
S_VEC_L = ProblemId("S_vecL")
RC = ProblemId("RC")
D = ProblemId("D")


def LG(k: int) -> ProblemId:
    return ProblemId("LG", k)


def GC(k: int) -> ProblemId:
    return ProblemId("GC", k)


def TC(k: int) -> ProblemId:
    return ProblemId("TC", k)


def WKLn(n: int) -> ProblemId:
    return ProblemId("WKLn", n)


def SF(pattern: FiniteGraph) -> ProblemId:
    return ProblemId("SF", pattern=pattern)


def Hat(base: ProblemId) -> ProblemId:
    return ProblemId("Hat", base=base)
