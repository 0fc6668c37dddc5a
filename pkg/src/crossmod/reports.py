"""Report assembly and deterministic rendering (JSON and markdown)."""

import json
from dataclasses import dataclass, field

from .report import Verdict, jsonable


@dataclass
class Report:
    command: str
    config: dict
    verdicts: list = field(default_factory=list)
    tables: dict = field(default_factory=dict)
    comparisons: list = field(default_factory=list)  # dicts: item, printed, computed, status

    def extend(self, other):
        self.verdicts.extend(other.verdicts)
        self.tables.update(other.tables)
        self.comparisons.extend(other.comparisons)
        return self

    @property
    def failed(self):
        return [v for v in self.verdicts if v.status == "fail"]

    @property
    def exit_status(self):
        return 1 if self.failed else 0

    def to_dict(self):
        return {
            "command": self.command,
            "config": jsonable(self.config),
            "verdicts": [jsonable(v) for v in self.verdicts],
            "tables": jsonable(self.tables),
            "comparisons": jsonable(self.comparisons),
            "summary": {
                "pass": sum(v.status == "pass" for v in self.verdicts),
                "fail": sum(v.status == "fail" for v in self.verdicts),
                "discrepancy": sum(v.status == "discrepancy" for v in self.verdicts),
            },
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_markdown(self):
        d = self.to_dict()
        lines = [f"# crossmod {self.command}", ""]
        lines.append("## Config")
        lines.append("")
        for k in sorted(d["config"]):
            lines.append(f"- {k}: {json.dumps(d['config'][k], sort_keys=True)}")
        lines.append("")
        lines.append("## Verdicts")
        lines.append("")
        for v in d["verdicts"]:
            w = "" if v["witness"] is None else f"  witness: {json.dumps(v['witness'], sort_keys=True)}"
            lines.append(f"- [{v['status']}] {v['name']}{w}")
        if d["tables"]:
            lines += ["", "## Tables", ""]
            for name in sorted(d["tables"]):
                lines.append(f"### {name}")
                lines.append("")
                lines.append("```")
                lines.append(json.dumps(d["tables"][name], indent=1, sort_keys=True))
                lines.append("```")
                lines.append("")
        if d["comparisons"]:
            lines += ["## Comparison with printed values", "", "| item | printed | computed | status |",
                      "|---|---|---|---|"]
            for c in d["comparisons"]:
                lines.append(f"| {c['item']} | {json.dumps(c['printed'])} | {json.dumps(c['computed'])} | {c['status']} |")
            lines.append("")
        s = d["summary"]
        lines.append(f"summary: {s['pass']} pass, {s['fail']} fail, {s['discrepancy']} discrepancy")
        return "\n".join(lines) + "\n"

    def render(self, fmt="markdown"):
        return self.to_json() if fmt == "json" else self.to_markdown()


def comparison(item, printed, computed, agree=None):
    agree = printed == computed if agree is None else agree
    return {"item": item, "printed": printed, "computed": computed, "status": "agree" if agree else "discrepancy"}


def discrepancy(name, witness=None, **details):
    return Verdict(name, "discrepancy", witness, details)
