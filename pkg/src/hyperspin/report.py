from __future__ import annotations

import json
from dataclasses import dataclass, field


DIVISIBILITY_NOTE = "N is an infinite hypernatural divisible by every standard integer"


@dataclass(frozen=True)
class MeasureReport:
    """Outcome of a single check: what was evaluated, against what, and whether it held.

    ``inputs``, ``value`` and ``expected`` are rendered in the module grammars so a
    report line can be fed back to the parsers.
    """

    check: str
    inputs: dict[str, str]
    value: str
    expected: str
    passed: bool
    witness: str | None = None
    notes: tuple[str, ...] = field(default=())

    def __bool__(self):
        return self.passed

    def to_record(self) -> dict:
        rec = {
            "check": self.check,
            "inputs": dict(self.inputs),
            "value": self.value,
            "expected": self.expected,
            "pass": self.passed,
        }
        if self.witness is not None:
            rec["witness"] = self.witness
        if self.notes:
            rec["notes"] = list(self.notes)
        return rec

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True, ensure_ascii=False)

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        args = ", ".join(f"{k}={v}" for k, v in self.inputs.items())
        line = f"[{status}] {self.check}({args}): value={self.value} expected={self.expected}"
        if self.witness is not None:
            line += f" witness={self.witness}"
        for note in self.notes:
            line += f"\n    note: {note}"
        return line
