"""Run a reduction over a certified family and tally the verdicts."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

from .. import config
from ..encodings import FuelExhausted
from ..problems import (CertificateError, Instance, NoSolution, ShapeError, check_certificate,
                        check_solution, describe_solution, solve_certified)
from ..reductions import Reduction
from ..verdict import Status
from .families import CertifiedFamily


class FamilyMismatch(ValueError):
    """The family generates instances of a problem the reduction does not accept."""


@dataclass
class Report:
    name: str
    family: str
    seed: int
    count: int
    budget: int
    cases: int = 0
    valid: int = 0
    invalid: int = 0
    unknown: int = 0
    errors: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.invalid == 0 and self.errors == 0

    def to_dict(self) -> dict:
        out = asdict(self)
        out["failures"] = sorted(self.failures, key=lambda f: f["index"])
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    def summary(self) -> str:
        return (f"{self.name} on {self.family} (seed {self.seed}, budget {self.budget}): "
                f"{self.cases} cases, {self.valid} valid, {self.invalid} invalid, "
                f"{self.unknown} unknown, {self.errors} errors")


@dataclass
class Case:
    status: str  # a Status value, or "error"
    stage: str = ""
    detail: Optional[Dict[str, Any]] = None


def _digest(inst: Instance) -> Dict[str, Any]:
    return {"problem": inst.problem.describe(), "payload": inst.describe()["payload"]}


def run_case(r: Reduction, u: Instance, budget: int) -> Case:
    """One pass of the soundness contract: forward, solve the image, pull back, judge."""
    record: Dict[str, Any] = {"instance": u.describe()}
    stage = "forward"
    try:
        x = r.forward(u)
        record["forward"] = _digest(x)
        stage = "target certificate"
        cv = check_certificate(x, budget)
        if cv.is_unknown:
            record["reason"] = cv.reason
            return Case(Status.UNKNOWN.value, stage, record)
        if cv.is_invalid:
            record["witness"] = cv.to_json()
            return Case("error", stage, record)
        stage = "solve"
        y = solve_certified(x, budget)
        record["y"] = describe_solution(y)
        stage = "target check"
        tv = check_solution(x, y, budget)
        if tv.is_unknown:
            record["reason"] = tv.reason
            return Case(Status.UNKNOWN.value, stage, record)
        if tv.is_invalid:
            record["witness"] = tv.to_json()
            return Case("error", stage, record)
        stage = "back"
        v = r.back(u, y)
        record["back"] = describe_solution(v)
        stage = "source check"
        sv = check_solution(u, v, budget)
        record["witness"] = sv.to_json()
        return Case(sv.status.value, stage, record)
    except FuelExhausted as exc:
        record["reason"] = f"fuel exhausted: {exc}"
        return Case(Status.UNKNOWN.value, stage, record)
    except (CertificateError, NoSolution, ShapeError) as exc:
        record["reason"] = f"{type(exc).__name__}: {exc}"
        return Case("error", stage, record)


def verify_reduction(r: Reduction, family: CertifiedFamily, seed: int, count: int,
                     budget: int = config.DEFAULT_BUDGET) -> Report:
    if family.problem != r.source:
        raise FamilyMismatch(f"family {family.name} makes {family.problem}, "
                             f"{r.name} expects {r.source}")
    report = Report(r.name, family.name, seed, count, budget)
    for i in range(count):
        case = run_case(r, family.instance(seed, i), budget)
        report.cases += 1
        if case.status == Status.VALID.value:
            report.valid += 1
            continue
        if case.status == Status.INVALID.value:
            report.invalid += 1
        elif case.status == Status.UNKNOWN.value:
            report.unknown += 1
        else:
            report.errors += 1
        report.failures.append({"index": i, "seed": seed, "status": case.status,
                                "stage": case.stage, **(case.detail or {})})
    return report
