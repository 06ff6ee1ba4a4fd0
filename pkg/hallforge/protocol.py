"""
Report types shared by the verifiers and the command line.
Everything here encodes to plain JSON.
"""

import json
from dataclasses import dataclass, field, asdict
from enum import Enum


class Identity(str, Enum):
    # Factorial identity
    THM_2_1 = "thm2.1"
    SKIP = "skip"

    # Generating functions
    RLHP = "rlhp"
    LHP = "lhp"
    REFINED_LHP = "refined-lhp"
    REFINED_RLHP = "refined-rlhp"
    Q_ANALOGUE_2 = "q-analogue-2"
    FACTORIZATION = "factorization"

    # Structure of the map
    LEMMAS = "lemmas"
    BIJECTION = "bijection"
    CARDINALITY = "cardinality"
    ERRATA = "errata"


class Family(str, Enum):
    LECTURE_HALL = "l"
    REDUCED_LECTURE_HALL = "rl"
    ODD_PARTY = "op"
    REDUCED_ODD_PARTY = "rop"


class StatKind(str, Enum):
    """Statistic recorded by the t marker."""
    NONE = "none"
    LENGTH = "length"
    ALT_SIZE = "alt_size"


@dataclass
class VerificationReport:
    """Outcome of checking one identity at one parameter point."""
    identity: str
    params: dict
    passed: bool
    window: dict | None = None
    counterexample: dict | None = None
    details: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    wall_time: float = 0.0  # metadata only, never part of golden data

    def to_json(self) -> dict:
        data = asdict(self)
        wall_time = data.pop("wall_time")
        data["meta"] = {"wall_time": round(wall_time, 6)}
        return data


@dataclass
class ReportBundle:
    """Reports for one identity over a parameter grid, in parameter order."""
    identity: str
    reports: list[VerificationReport]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "passed": self.passed,
            "reports": [r.to_json() for r in self.reports],
        }


def encode_message(msg: dict | object) -> str:
    """Encode a report (or plain dict) as a JSON document with stable key order."""
    if hasattr(msg, "to_json"):
        msg = msg.to_json()
    elif hasattr(msg, "__dataclass_fields__"):
        msg = asdict(msg)
    return json.dumps(msg, ensure_ascii=False, indent=2)


def decode_message(data: str) -> dict:
    return json.loads(data)


def strip_meta(data):
    """Drop every "meta" field, recursively; used when comparing against golden data."""
    if isinstance(data, dict):
        return {k: strip_meta(v) for k, v in data.items() if k != "meta"}
    if isinstance(data, list):
        return [strip_meta(v) for v in data]
    return data
