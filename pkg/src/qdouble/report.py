"""Verification reports: named checks with optional witnesses, plus
relation listings, serialisable to JSON and LaTeX."""

from dataclasses import dataclass, field
import json


@dataclass
class Check:
    name: str
    passed: bool
    witness: str = None
    detail: str = None

    @property
    def status(self):
        return "pass" if self.passed else "fail"

    def to_dict(self):
        d = {"name": self.name, "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.detail is not None:
            d["detail"] = self.detail
        return d


@dataclass
class Relation:
    lhs: str
    rhs: str
    latex: str
    name: str = None

    def to_dict(self):
        d = {"lhs": self.lhs, "rhs": self.rhs, "latex": self.latex}
        if self.name is not None:
            d = {"name": self.name, **d}
        return d


@dataclass
class Report:
    title: str = ""
    checks: list = field(default_factory=list)
    relations: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def add(self, name, passed, witness=None, detail=None):
        self.checks.append(Check(name, bool(passed), witness, detail))
        return passed

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def get(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self):
        d = {"relations": [r.to_dict() for r in self.relations],
             "checks": [c.to_dict() for c in self.checks]}
        if self.title:
            d = {"title": self.title, **d}
        if self.notes:
            d["notes"] = list(self.notes)
        if self.data:
            d["data"] = self.data
        d["summary"] = {"passed": sum(c.passed for c in self.checks), "total": len(self.checks), "ok": self.ok}
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=False) + "\n"

    def to_latex(self):
        lines = []
        if self.title:
            lines.append(f"% {self.title}")
        if self.relations:
            lines.append(r"\begin{align*}")
            body = [r.latex for r in self.relations]
            lines.append(" \\\\\n".join(body))
            lines.append(r"\end{align*}")
        for c in self.checks:
            lines.append(f"% {c.name}: {c.status}" + (f" ({c.witness})" if c.witness else ""))
        for n in self.notes:
            lines.append(f"% note: {n}")
        return "\n".join(lines) + "\n"
