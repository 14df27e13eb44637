"""Full verification sweeps and their JSON / Markdown reports.

A report is plain data (dicts, lists and strings) so that it round-trips
through its JSON form; :func:`emit_report` renders either format from it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence

from .catalog import Catalog, FamilyClaim
from .operators import (
    AVERAGING_KIND,
    COLUMN,
    NIJENHUIS_KIND,
    PAPER,
    REYNOLDS_KIND,
    ROW,
    STANDARD,
    OperatorKind,
    rota_baxter,
)
from .verify import completeness_check, cross_check, verify_claim, weight_shift_check

TOOL_VERSION = "0.1.0"

KIND_ORDER = (rota_baxter(0), rota_baxter(1), REYNOLDS_KIND, NIJENHUIS_KIND, AVERAGING_KIND)
NOT_APPLICABLE = "n/a"

_TITLES = {
    "rota_baxter:0": "Rota-Baxter operators of weight 0",
    "rota_baxter:1": "Rota-Baxter operators of weight 1",
    "reynolds": "Reynolds operators",
    "nijenhuis": "Nijenhuis operators",
    "averaging": "Averaging operators",
}


def kind_key(kind: OperatorKind) -> str:
    return f"{kind.name}:{kind.weight}" if kind.weight is not None else kind.name


def kind_title(kind: OperatorKind) -> str:
    return _TITLES.get(kind_key(kind), str(kind))


def _kind_rank(kind: OperatorKind):
    try:
        return (KIND_ORDER.index(kind), Fraction(0))
    except ValueError:
        return (len(KIND_ORDER), kind.weight or Fraction(0))


def tails_for(kind: OperatorKind, tails: Sequence[str]) -> List[str]:
    """The tails worth running for ``kind``: the tail only matters for nonzero RB weight."""
    return list(tails) if kind.uses_tail else [NOT_APPLICABLE]


@dataclass
class VerificationReport:
    meta: Dict[str, object]
    verdicts: List[dict] = field(default_factory=list)
    completeness: List[dict] = field(default_factory=list)
    weight_shift: List[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "meta": dict(self.meta),
            "verdicts": list(self.verdicts),
            "completeness": list(self.completeness),
            "weight_shift": list(self.weight_shift),
        }

    @classmethod
    def from_json(cls, doc: dict) -> "VerificationReport":
        return cls(doc.get("meta", {}), list(doc.get("verdicts", [])),
                   list(doc.get("completeness", [])), list(doc.get("weight_shift", [])))

    @classmethod
    def empty(cls, catalog_sha256: str = "", seed: int = 42) -> "VerificationReport":
        return cls({"catalog_sha256": catalog_sha256, "seed": seed, "tool_version": TOOL_VERSION})

    # convenience queries used by the CLI and tests
    def refuted(self) -> List[dict]:
        return [v for v in self.verdicts if v["verdict"] == "REFUTED"]

    def missed(self) -> int:
        return sum(len(c["missed_points"]) for c in self.completeness)

    def disagreements(self) -> List[str]:
        return [d for v in self.verdicts for d in v.get("dual_engine", {}).get("disagreements", [])]


def _claim_row(claim: FamilyClaim) -> dict:
    return {
        "claim": claim.id,
        "algebra": claim.algebra,
        "kind": claim.kind.name,
        "weight": None if claim.kind.weight is None else str(claim.kind.weight),
        "params": list(claim.params),
        "matrix": claim.matrix_strings(),
        "restrictions": [str(r) for r in claim.restrictions],
        "source": claim.source,
    }


def run_sweep(catalog: Catalog, conventions: Sequence[str] = (ROW,), tails: Sequence[str] = (STANDARD,),
              seed: int = 42, samples: int = 50, points: int = 200,
              algebras: Optional[Iterable[str]] = None,
              kinds: Optional[Sequence[OperatorKind]] = None,
              completeness: bool = True, shift_weight=1) -> VerificationReport:
    """Verify every selected claim and audit completeness per (algebra, kind).

    Rows come out ordered by algebra, kind, claim (catalog order),
    convention and tail.  ``points`` seeded points feed the numeric cross
    check of each verdict; ``samples`` points per solved component feed
    the completeness audit.
    """
    report = VerificationReport.empty(catalog.sha256, seed)
    wanted = set(algebras) if algebras is not None else None
    kind_list = sorted({c.kind for c in catalog.claims} | set(KIND_ORDER), key=_kind_rank)
    if kinds is not None:
        kind_list = [k for k in kind_list if k in kinds] + [k for k in kinds if k not in kind_list]
    for alg in catalog.algebras:
        if wanted is not None and alg.id not in wanted:
            continue
        for kind in kind_list:
            claims = catalog.claims_for(alg.id, kind)
            for claim in claims:
                for conv in conventions:
                    for tail in tails_for(kind, tails):
                        t = STANDARD if tail == NOT_APPLICABLE else tail
                        verdict = verify_claim(claim, alg, conv, t)
                        check = cross_check(claim, alg, verdict, conv, t, seed=seed, count=points)
                        row = _claim_row(claim)
                        row.update({"convention": conv, "rb_tail": tail})
                        row.update(verdict.to_json())
                        row["dual_engine"] = {"points": check.points, "skipped": check.skipped,
                                              "agrees": check.agrees,
                                              "disagreements": check.disagreements}
                        report.verdicts.append(row)
            if completeness:
                for conv in conventions:
                    for tail in tails_for(kind, tails):
                        t = STANDARD if tail == NOT_APPLICABLE else tail
                        summary = completeness_check(alg, kind, claims, conv, t, seed, samples)
                        doc = summary.to_json()
                        doc["rb_tail"] = tail
                        report.completeness.append(doc)
            if kind == rota_baxter(0) and shift_weight is not None:
                for claim in claims:
                    for conv in conventions:
                        for tail in tails_for(rota_baxter(shift_weight), tails):
                            t = STANDARD if tail == NOT_APPLICABLE else tail
                            verdict = weight_shift_check(claim, alg, shift_weight, conv, t)
                            report.weight_shift.append({
                                "claim": claim.id, "algebra": alg.id, "from_weight": "0",
                                "to_weight": str(Fraction(shift_weight)), "convention": conv,
                                "rb_tail": tail, "matrix": claim.matrix_strings(),
                                **verdict.to_json(),
                            })
    return report


# -- emission ---------------------------------------------------------------------


def emit_report(report: VerificationReport, fmt: str = "JSON") -> bytes:
    """Deterministic bytes for ``report`` in ``JSON`` or ``MARKDOWN``."""
    fmt = fmt.upper()
    if fmt == "JSON":
        return (json.dumps(report.to_json(), indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    if fmt in ("MARKDOWN", "MD"):
        return render_markdown(report).encode("utf-8")
    raise ValueError(f"unknown report format {fmt!r}")


def _matrix_cell(matrix) -> str:
    return "; ".join(" ".join(f"`{e}`" for e in row) for row in matrix)


def _verdict_cell(v: dict) -> str:
    status = v["verdict"]
    if status == "CONDITIONAL":
        return "CONDITIONAL ⟨" + ", ".join(f"`{c}`" for c in v.get("conditions", [])) + "⟩"
    if status == "REFUTED":
        return f"REFUTED ({v.get('witness', '')})"
    return status


def _esc(text: str) -> str:
    return text.replace("|", "\\|")


def _section_key(row: dict) -> str:
    return f"{row['kind']}:{row['weight']}" if row.get("weight") is not None else row["kind"]


def render_markdown(report: VerificationReport) -> str:
    meta = report.meta
    lines = ["# Operator classification audit", ""]
    lines.append(f"- catalog sha256: `{meta.get('catalog_sha256', '')}`")
    lines.append(f"- seed: {meta.get('seed', '')}")
    lines.append(f"- tool version: {meta.get('tool_version', '')}")
    statuses = [v["verdict"] for v in report.verdicts]
    lines.append(f"- verdicts: {len(statuses)} "
                 f"({statuses.count('CONFIRMED')} confirmed, {statuses.count('CONDITIONAL')} conditional, "
                 f"{statuses.count('REFUTED')} refuted)")
    lines.append(f"- dual-engine disagreements: {len(report.disagreements())}")
    lines.append("")

    sections: Dict[str, List[dict]] = {}
    for v in report.verdicts:
        sections.setdefault(_section_key(v), []).append(v)
    for key, rows in sections.items():
        lines.append(f"## {_TITLES.get(key, key)}")
        lines.append("")
        columns = []
        for v in rows:
            col = (v["convention"], v["rb_tail"])
            if col not in columns:
                columns.append(col)
        heads = [f"{c}" if t == NOT_APPLICABLE else f"{c}, {t} tail" for c, t in columns]
        lines.append("| Algebra | Claim | Matrix | Restrictions | " + " | ".join(heads) + " |")
        lines.append("|" + "---|" * (4 + len(columns)))
        by_claim: Dict[str, Dict[tuple, dict]] = {}
        for v in rows:
            by_claim.setdefault(v["claim"], {})[(v["convention"], v["rb_tail"])] = v
        for claim_id, cells in by_claim.items():
            first = next(iter(cells.values()))
            restr = ", ".join(f"`{r} ≠ 0`" for r in first["restrictions"]) or ""
            verdicts = [_esc(_verdict_cell(cells[c])) if c in cells else "" for c in columns]
            lines.append(f"| {first['algebra']} | {claim_id} | {_esc(_matrix_cell(first['matrix']))} | "
                         f"{_esc(restr)} | " + " | ".join(verdicts) + " |")
        lines.append("")

    if report.completeness:
        lines.append("## Completeness")
        lines.append("")
        lines.append("| Algebra | Kind | Convention | Tail | Status | Components | Sampled | Missed |")
        lines.append("|---|---|---|---|---|---|---|---|")
        for c in report.completeness:
            kind = c["kind"] if c.get("weight") is None else f"{c['kind']} (weight {c['weight']})"
            lines.append(f"| {c['algebra']} | {kind} | {c['convention']} | {c['rb_tail']} | {c['status']} | "
                         f"{len(c['components'])} | {c['sampled_points']} | {len(c['missed_points'])} |")
        lines.append("")
        lines.append("### Solved components")
        lines.append("")
        for c in report.completeness:
            kind = c["kind"] if c.get("weight") is None else f"{c['kind']} (weight {c['weight']})"
            lines.append(f"- {c['algebra']}, {kind}, {c['convention']}, {c['rb_tail']}:")
            for comp in c["components"]:
                lines.append(f"  - `{comp}`")
        lines.append("")

    if report.weight_shift:
        lines.append("## Weight shift")
        lines.append("")
        lines.append("Weight-0 families re-checked against the weight-1 system.")
        lines.append("")
        lines.append("| Algebra | Claim | Matrix | Convention | Tail | Verdict at new weight |")
        lines.append("|---|---|---|---|---|---|")
        for w in report.weight_shift:
            lines.append(f"| {w['algebra']} | {w['claim']} | {_esc(_matrix_cell(w['matrix']))} | "
                         f"{w['convention']} | {w['rb_tail']} | {_esc(_verdict_cell(w))} |")
        lines.append("")
    return "\n".join(lines)
