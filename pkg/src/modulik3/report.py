"""Verification records shared by the table checker and the command line."""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import List

STATUSES = ("match", "mismatch", "flagged")


@dataclass(frozen=True)
class CheckItem:
    check_id: str
    location: str
    expected: str
    computed: str
    status: str

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")


def item(check_id, location, expected, computed, ok=None, flagged=False) -> CheckItem:
    expected, computed = str(expected), str(computed)
    if flagged:
        status = "flagged"
    else:
        if ok is None:
            ok = expected == computed
        status = "match" if ok else "mismatch"
    return CheckItem(check_id, location, expected, computed, status)


@dataclass
class VerificationReport:
    items: List[CheckItem] = field(default_factory=list)

    def sorted(self) -> "VerificationReport":
        return VerificationReport(sorted(self.items, key=lambda i: (i.check_id, i.location)))

    @property
    def summary(self) -> dict:
        c = Counter(i.status for i in self.items)
        return {s: c.get(s, 0) for s in STATUSES}

    @property
    def ok(self) -> bool:
        return self.summary["mismatch"] == 0

    def to_json(self) -> str:
        doc = {"items": [asdict(i) for i in self.items], "summary": self.summary}
        return json.dumps(doc, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        doc = json.loads(text)
        return cls([CheckItem(**d) for d in doc["items"]])

    def __eq__(self, other):
        return isinstance(other, VerificationReport) and self.items == other.items
