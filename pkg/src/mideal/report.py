"""Structured pass/fail reports shared by every verification routine."""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .ring import MonomialIdeal, PolyRing, to_json


def _plain(obj: Any):
    """Convert library values into JSON-ready data with a stable order."""
    if isinstance(obj, MonomialIdeal):
        return {"ring": list(obj.ring.vars), "gens": [list(g) for g in obj.gens]}
    if isinstance(obj, PolyRing):
        return list(obj.vars)
    if hasattr(obj, "names") and hasattr(obj, "support"):  # MonomialPrime
        return obj.names()
    if hasattr(obj, "to_obj"):
        return obj.to_obj()
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, float) and obj == float("inf"):
        return "inf"
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in sorted(obj.items(), key=lambda kv: str(kv[0]))}
    if isinstance(obj, (set, frozenset)):
        items = [_plain(v) for v in obj]
        return sorted(items, key=lambda v: json.dumps(v, sort_keys=True))
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if hasattr(obj, "item"):  # numpy scalars
        return obj.item()
    return obj


def digest(inputs) -> str:
    h = hashlib.sha256()
    for x in inputs:
        h.update((to_json(x) if isinstance(x, MonomialIdeal) else json.dumps(_plain(x), sort_keys=True)).encode())
        h.update(b"\n")
    return h.hexdigest()[:16]


@dataclass
class Check:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)


class VerificationReport:
    """Named list of checks; the overall verdict is their conjunction.

    Wall-clock time is recorded but only serialised when asked for, so the
    default JSON is byte-identical across reruns.
    """

    def __init__(self, identity: str, inputs=(), characteristic: int | None = None):
        self.identity = identity
        self.inputs = list(inputs)
        self.characteristic = characteristic
        self.checks: list[Check] = []
        self.notes: list[str] = []
        self._t0 = time.perf_counter()
        self.elapsed: float | None = None

    def check(self, name: str, passed: bool, **details) -> bool:
        self.checks.append(Check(name, bool(passed), details))
        return bool(passed)

    def note(self, text: str):
        self.notes.append(text)

    def extend(self, other: "VerificationReport", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.details))
        self.notes.extend(other.notes)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def finish(self) -> "VerificationReport":
        self.elapsed = time.perf_counter() - self._t0
        return self

    def to_obj(self, timing: bool = False) -> dict:
        out = {
            "identity": self.identity,
            "inputs_digest": digest(self.inputs),
            "characteristic": self.characteristic,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed,
                 # witnesses are only attached on failure, except for small scalar details
                 "details": _plain(c.details) if (not c.passed or _small(c.details)) else {}}
                for c in self.checks
            ],
        }
        if self.notes:
            out["notes"] = list(self.notes)
        if timing:
            out["seconds"] = round(self.elapsed if self.elapsed is not None
                                   else time.perf_counter() - self._t0, 3)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_obj(timing), sort_keys=True, indent=2)

    def summary_lines(self) -> list[str]:
        lines = [f"{self.identity}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            lines.append(f"  [{'ok' if c.passed else 'FAIL'}] {c.name}")
        return lines

    def __repr__(self):
        return f"VerificationReport({self.identity!r}, passed={self.passed}, checks={len(self.checks)})"


def _small(details: dict) -> bool:
    return all(isinstance(v, (int, str, bool, Fraction)) or v is None for v in details.values())
