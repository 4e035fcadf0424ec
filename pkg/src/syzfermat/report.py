"""RunReport: the JSON document every CLI command produces.

Top-level keys are command, inputs, results, flags, version. Integers at or
above 2^53 are written as decimal strings; polynomials are arrays of
[x_exponent, y_exponent, z_exponent, coefficient].
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .fermat import CurveElem, SyzygyWitness, verify_witness
from .ffield import FieldCtx

JSON_INT_LIMIT = 1 << 53

CRITERION_ONLY = "criterion-only"
BOUND_CAPPED = "bound-capped"
PAPER_DISCREPANCY = "paper-discrepancy"


def jsonable(obj):
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj if abs(obj) < JSON_INT_LIMIT else str(obj)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, Fraction):
        return fraction_json(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def fraction_json(x: Fraction) -> dict:
    return {"exact": f"{x.numerator}/{x.denominator}", "decimal": f"{float(x):.6f}"}


def poly_json(u: CurveElem) -> list[list[int]]:
    return [[x, y, z, c] for x, y, z, c in u.terms()]


def witness_json(w: SyzygyWitness, d: int, p: int) -> dict:
    return {
        "m": w.m,
        "a": [w.a1, w.a2, w.a3],
        "d": d,
        "p": p,
        "F": poly_json(w.F),
        "G": poly_json(w.G),
        "H": poly_json(w.H),
        "display": {"F": str(w.F), "G": str(w.G), "H": str(w.H)},
    }


def witness_from_json(doc: dict) -> tuple[SyzygyWitness, int, int]:
    d, p, m = int(doc["d"]), int(doc["p"]), int(doc["m"])
    a1, a2, a3 = (int(a) for a in doc["a"])
    comps = []
    for key, a in (("F", a1), ("G", a2), ("H", a3)):
        u = CurveElem.zero(d, m - a, p)
        for x, y, z, c in doc[key]:
            u = u + CurveElem.monomial(int(x), int(y), int(z), d, p, int(c))
        comps.append(u)
    return SyzygyWitness(m, *comps, a1, a2, a3), d, p


def find_witnesses(obj):
    """All embedded witness documents, depth first."""
    if isinstance(obj, dict):
        if {"m", "a", "d", "p", "F", "G", "H"} <= obj.keys():
            yield obj
            return
        for v in obj.values():
            yield from find_witnesses(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from find_witnesses(v)


def recheck(results: dict) -> tuple[int, int]:
    """Re-verify every witness in a results tree; returns (checked, passed)."""
    checked = passed = 0
    for doc in find_witnesses(results):
        w, d, p = witness_from_json(doc)
        checked += 1
        passed += verify_witness(w, d, FieldCtx(p))
    return checked, passed


@dataclass
class RunReport:
    command: str
    inputs: dict = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    flags: list = field(default_factory=list)
    version: str = __version__

    def flag(self, marker: str, detail: str = ""):
        self.flags.append({"marker": marker, "detail": detail})

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": jsonable(self.inputs),
            "results": jsonable(self.results),
            "flags": jsonable(self.flags),
            "version": self.version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, doc: dict) -> RunReport:
        return cls(doc["command"], doc["inputs"], doc["results"], doc["flags"], doc["version"])

    @classmethod
    def from_json(cls, text: str) -> RunReport:
        return cls.from_dict(json.loads(text))
