"""Instance files: one JSON document per instance, parsed strictly."""

from __future__ import annotations

import json
from typing import Any, Dict, Optional

from ..encodings import OMEGA, GraphCode, OracleFn, TreeCode, from_description
from ..problems import (HatPayload, Instance, ProblemId, certificate_from_description,
                        describe_certificate, describe_payload)

FIELDS = ("problem", "payload", "certificate", "fuel")


class FileFormatError(ValueError):
    """The document does not describe exactly one instance."""


def _oracle(desc: Any, fuel: Optional[int]) -> OracleFn:
    if not isinstance(desc, dict):
        raise FileFormatError(f"expected an oracle descriptor, got {desc!r}")
    f = from_description(desc)
    # a file-wide fuel limit applies to oracles that do not carry their own
    if fuel is not None and f.fuel_limit is None:
        f = f.with_fuel(fuel)
    return f


def _only(desc: Dict[str, Any], allowed) -> None:
    extra = set(desc) - set(allowed)
    if extra:
        raise FileFormatError(f"unknown fields {sorted(extra)}")


def _graph(desc: Any, fuel: Optional[int]) -> GraphCode:
    _only(desc, ("edge_fn",))
    return GraphCode(_oracle(desc["edge_fn"], fuel))


def _tree(desc: Any, fuel: Optional[int]) -> TreeCode:
    _only(desc, ("branching", "node_fn"))
    b = desc["branching"]
    return TreeCode(OMEGA if b == "omega" else int(b), _oracle(desc["node_fn"], fuel))


def payload_from_description(problem: ProblemId, desc: Any, fuel: Optional[int]) -> Any:
    name = problem.name
    if name in ("LPO", "LLPO"):
        return _oracle(desc, fuel)
    if name in ("WKL", "WKLn", "WF"):
        return _tree(desc, fuel)
    if name == "S":
        _only(desc, ("graph", "pattern"))
        return (_graph(desc["graph"], fuel), _graph(desc["pattern"], fuel))
    if name == "Hat":
        _only(desc, ("rows",))
        if "rows" not in desc:
            raise FileFormatError("parallelized payloads must list their rows explicitly")
        rows = tuple(_row(problem.base, r, fuel) for r in desc["rows"])
        if not rows:
            raise FileFormatError("a parallelized payload needs at least one row")
        return HatPayload(rows, None, None, "", base=problem.base)
    return _graph(desc, fuel)


def _row(base: ProblemId, doc: Any, fuel: Optional[int]) -> Instance:
    # rows are written as instance documents without a fuel field of their own
    if not isinstance(doc, dict):
        raise FileFormatError(f"a row must be an instance object, got {doc!r}")
    _only(doc, ("problem", "payload", "certificate"))
    row = _instance(doc, fuel)
    if row.problem != base:
        raise FileFormatError(f"row of problem {row.problem} inside a parallelized {base}")
    return row


def _instance(doc: Dict[str, Any], fuel: Optional[int]) -> Instance:
    for key in ("problem", "payload"):
        if key not in doc:
            raise FileFormatError(f"missing field {key!r}")
    problem = ProblemId.from_description(doc["problem"])
    payload = payload_from_description(problem, doc["payload"], fuel)
    return Instance(problem, payload, certificate_from_description(doc.get("certificate")))


def instance_from_document(doc: Any) -> Instance:
    if not isinstance(doc, dict):
        raise FileFormatError("an instance file holds one JSON object")
    _only(doc, FIELDS)
    fuel = doc.get("fuel")
    if fuel is not None and (not isinstance(fuel, int) or isinstance(fuel, bool) or fuel < 1):
        raise FileFormatError(f"fuel must be a positive integer, got {fuel!r}")
    try:
        return _instance(doc, fuel)
    except FileFormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise FileFormatError(f"{type(exc).__name__}: {exc}") from exc


def instance_to_document(inst: Instance, fuel: Optional[int] = None) -> Dict[str, Any]:
    return {"problem": inst.problem.describe(), "payload": describe_payload(inst.payload),
            "certificate": describe_certificate(inst.certificate), "fuel": fuel}


def dumps(inst: Instance, fuel: Optional[int] = None) -> str:
    return json.dumps(instance_to_document(inst, fuel), sort_keys=True)


def loads(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"not JSON: {exc}") from exc
    return instance_from_document(doc)


def read_instance(path: str) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def write_instance(path: str, inst: Instance, fuel: Optional[int] = None) -> None:
    text = dumps(inst, fuel)
    loads(text)  # refuse to write what cannot be read back
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text + "\n")
