"""JSON reports written by the command-line tool.

A report is deterministic for fixed inputs, field and seed: checks are
sorted by name, keys are sorted, and wall-clock timings live under a single
``timings`` key that comparisons drop.
"""

from __future__ import annotations

import hashlib
import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field as dc_field

SCHEMA = 1


@dataclass
class Check:
    name: str
    status: str  # "pass" or "fail"
    values: dict

    def to_dict(self):
        return {"name": self.name, "status": self.status, "values": self.values}


@dataclass
class Report:
    command: str
    field: str
    seed: int | None
    version: str
    inputs: dict = dc_field(default_factory=dict)
    checks: list[Check] = dc_field(default_factory=list)
    results: dict = dc_field(default_factory=dict)
    timings: dict = dc_field(default_factory=dict)
    error: dict | None = None

    def add_input(self, name: str, data: bytes | str):
        if isinstance(data, str):
            data = data.encode("utf-8")
        self.inputs[name] = hashlib.sha256(data).hexdigest()

    def check(self, name: str, passed: bool, **values) -> bool:
        if any(c.name == name for c in self.checks):
            raise ValueError(f"duplicate check name {name!r}")
        self.checks.append(Check(name, "pass" if passed else "fail", jsonable(values)))
        return passed

    @contextmanager
    def timed(self, label: str):
        start = time.perf_counter()
        try:
            yield
        finally:
            self.timings[label] = round(time.perf_counter() - start, 6)

    @property
    def passed(self) -> bool:
        return self.error is None and all(c.status == "pass" for c in self.checks)

    @property
    def status(self) -> str:
        if self.error is not None:
            return "error"
        return "pass" if self.passed else "fail"

    def inputs_digest(self) -> str:
        text = json.dumps(self.inputs, sort_keys=True)
        return hashlib.sha256(text.encode("utf-8")).hexdigest()

    def to_dict(self, timings: bool = True) -> dict:
        out = {
            "schema": SCHEMA,
            "version": self.version,
            "command": self.command,
            "field": self.field,
            "seed": self.seed,
            "inputs": dict(sorted(self.inputs.items())),
            "inputs_digest": self.inputs_digest(),
            "status": self.status,
            "checks": [c.to_dict() for c in sorted(self.checks, key=lambda c: c.name)],
            "results": jsonable(self.results),
        }
        if self.error is not None:
            out["error"] = self.error
        if timings:
            out["timings"] = dict(sorted(self.timings.items()))
        return out

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.to_dict(timings), indent=2, sort_keys=True) + "\n"


def jsonable(value):
    """Convert tuples, numpy integers and exact scalars into JSON values."""
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (bool, str)) or value is None:
        return value
    if isinstance(value, int):
        return int(value)
    if hasattr(value, "__index__"):
        return int(value)
    return str(value)


def strip_timings(text: str) -> dict:
    """Parse a serialized report and drop the timing fields."""
    data = json.loads(text)
    data.pop("timings", None)
    return data
