"""Machine-readable run reports shared by the CLI commands.

JSON layout::

    {"command": ..., "params": {...}, "degrees": [...], "dims": [...],
     "identities": [{"name": ..., "params": {...}, "status": ..., "witness": ...}],
     "table": [...], "basis": [...]}

``table`` and ``basis`` are present only for conjecture and cohomology
runs.  Timings never enter the JSON so that cached and cold runs produce
identical files.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class IdentityResult:
    name: str
    params: Dict[str, Any]
    status: str
    witness: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        d: Dict[str, Any] = {"name": self.name, "params": self.params, "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness
        return d

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "IdentityResult":
        return cls(d["name"], dict(d["params"]), d["status"], d.get("witness"))


@dataclass
class Report:
    command: str
    params: Dict[str, Any] = field(default_factory=dict)
    degrees: List[int] = field(default_factory=list)
    dims: List[Any] = field(default_factory=list)
    identities: List[IdentityResult] = field(default_factory=list)
    table: List[Dict[str, Any]] = field(default_factory=list)
    basis: List[Dict[str, str]] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(i.status == "pass" for i in self.identities)

    def to_dict(self) -> Dict[str, Any]:
        d: Dict[str, Any] = {
            "command": self.command,
            "params": self.params,
            "degrees": self.degrees,
            "dims": self.dims,
            "identities": [i.to_dict() for i in self.identities],
        }
        if self.table:
            d["table"] = self.table
        if self.basis:
            d["basis"] = self.basis
        return d

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "Report":
        return cls(
            command=d["command"],
            params=dict(d.get("params", {})),
            degrees=list(d.get("degrees", [])),
            dims=list(d.get("dims", [])),
            identities=[IdentityResult.from_dict(i) for i in d.get("identities", [])],
            table=[dict(r) for r in d.get("table", [])],
            basis=[dict(b) for b in d.get("basis", [])],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if self.table:
            cols = list(self.table[0])
            w.writerow(cols)
            for row in self.table:
                w.writerow([row[c] for c in cols])
        elif self.identities:
            w.writerow(["name", "params", "status", "witness"])
            for i in self.identities:
                w.writerow([i.name, json.dumps(i.params, sort_keys=True), i.status, i.witness or ""])
        elif self.basis:
            w.writerow(["index", "element"])
            for k, b in enumerate(self.basis):
                w.writerow([k, b["element"]])
        else:
            w.writerow(["degree", "dim"])
            for d, n in zip(self.degrees, self.dims):
                w.writerow([d, n])
        return buf.getvalue()
