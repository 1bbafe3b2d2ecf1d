# cli/report.py

"""
Rendering of command results.

Results are JSON-native dictionaries (rationals as "p/q" strings), so the
JSON report round-trips through json.loads unchanged. Human output lays
tables out with pandas.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict

import pandas as pd

from config.settings import REPORT_SCHEMA

OK_MARK = "✓"
FAIL_MARK = "✗"


@dataclass
class CommandResult:
    command: str
    file: str
    state: str
    exit_code: int
    result: Dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> Dict[str, Any]:
        return {
            "schema": REPORT_SCHEMA,
            "command": self.command,
            "file": self.file,
            "state": self.state,
            "result": self.result,
            "exit_code": self.exit_code,
        }


def mark(passed: bool) -> str:
    return OK_MARK if passed else FAIL_MARK


def render_json(result: CommandResult) -> str:
    return json.dumps(result.to_json(), indent=2, ensure_ascii=False)


def _table(rows, columns, index=None) -> str:
    frame = pd.DataFrame(rows, columns=columns, index=index)
    return frame.to_string(index=index is not None)


# =========================
# Per-command renderers
# =========================

def _render_validate(r: Dict[str, Any]) -> str:
    if r["state"] == "VALID":
        return f"{r['algebra']}: valid Lie algebra ({r['checked_triples']} Jacobi triples checked)"
    residue = ", ".join(f"{c}*{name}" for name, c in r["residue"].items())
    return f"{r['algebra']}: INVALID: {r['reason']}\n  residue: {residue}"


def _render_classify(r: Dict[str, Any]) -> str:
    lines = [f"{r['algebra']}: {r['summary']}"]
    if r["radical"]:
        lines.append("radical basis: " + ", ".join(r["radical"]))
    if r["derived_length"] is not None:
        lines.append(f"derived length: {r['derived_length']}")
    lines.append(f"Killing form (rank {r['killing_rank']}):")
    kf = r["killing_form"]
    if kf["basis"]:
        lines.append(_table(kf["rows"], kf["basis"], index=kf["basis"]))
    return "\n".join(lines)


def _render_homology(r: Dict[str, Any]) -> str:
    lines = [f"{r['algebra']}: Lie algebra homology, {r['coeffs']} coefficients"]
    rows = [[p, dim, b] for p, dim, b in zip(r["degrees"], r["chain_dims"], r["betti"])]
    lines.append(_table(rows, ["p", "dim C_p", "b_p"]))
    if "euler_characteristic" in r:
        lines.append(f"Euler characteristic: {r['euler_characteristic']}")
    lines.append(f"d o d = 0: {mark(r['d_squared_zero'])}")
    return "\n".join(lines)


def _render_obstruction(r: Dict[str, Any]) -> str:
    if r["state"] == "VACUOUS":
        return f"{r['algebra']}: solvable: no obstruction (k=0)"
    if r["state"] == "LEVI_FAILED":
        return f"{r['algebra']}: Levi factor not verified ({r['failed_condition']}): {r['reason']}"

    lines = [
        f"{r['algebra']}: obstruction certificate, k = {r['k']}, N = {r['truncation']}",
        f"  Levi factor: {', '.join(r['levi'])}",
        f"  radical:     {', '.join(r['radical']) or '0'}",
        f"  eta = {r['eta']}",
    ]
    rows = [
        [name, mark(c["passed"]), c["checked"], c["statement"], c["counterexample"] or ""]
        for name, c in r["checks"].items()
    ]
    lines.append(_table(rows, ["condition", "", "checked", "statement", "counterexample"]))
    lines.append(f"  not a boundary (linear solve): {mark(r['non_boundary'])}")
    summary = " ".join(f"{name} {mark(c['passed'])}" for name, c in r["checks"].items())
    lines.append(f"  {summary}")
    lines.append(f"{r['state']}: {r['reason']}")
    return "\n".join(lines)


def _render_smash_check(r: Dict[str, Any]) -> str:
    if r.get("state") == "LEVI_FAILED":
        return f"{r['algebra']}: Levi factor not verified ({r['failed_condition']}): {r['reason']}"
    lines = [f"{r['algebra']}: {r['action']} (truncation {r['truncation']})"]
    rows = [[c["name"], mark(c["state"] == "PASS"), c["checked"], c["counterexample"] or c["reason"]] for c in r["checks"]]
    lines.append(_table(rows, ["check", "", "checked", "detail"]))
    if "retraction" in r:
        for identity, held in r["retraction"].items():
            lines.append(f"  {mark(held)} {identity}")
    return "\n".join(lines)


_RENDERERS = {
    "validate": _render_validate,
    "classify": _render_classify,
    "homology": _render_homology,
    "obstruction": _render_obstruction,
    "smash-check": _render_smash_check,
}


def render_human(result: CommandResult) -> str:
    if "error" in result.result:
        return f"error: {result.result['error']}"
    if result.result.get("state") == "INVALID":
        return _render_validate(result.result)
    return _RENDERERS[result.command](result.result)
