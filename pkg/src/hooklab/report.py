"""Uniform result records for identity checkers."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
EXHAUSTED = "sampling-exhausted"


@dataclass
class Report:
    """Outcome of one identity check on one instance."""

    identity: str
    instance: dict
    status: str
    witness: dict | None = None
    points: list | None = None
    resamples: int = 0
    elapsed_ms: float | None = None

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def to_json_obj(self, include_timing: bool = False) -> dict:
        obj = {
            "identity": self.identity,
            "instance": self.instance,
            "status": self.status,
        }
        if self.witness is not None:
            obj["witness"] = self.witness
        if self.points is not None:
            obj["points"] = self.points
        if self.resamples:
            obj["resamples"] = self.resamples
        if include_timing and self.elapsed_ms is not None:
            obj["elapsed_ms"] = self.elapsed_ms
        return obj


def summarize(reports: list[Report]) -> dict:
    return {
        "total": len(reports),
        "passed": sum(r.status == PASS for r in reports),
        "failed": sum(r.status == FAIL for r in reports),
        "exhausted": sum(r.status == EXHAUSTED for r in reports),
    }
