"""A complete sweep written as JSON and Markdown.

This mirrors ``dend verify --all --conventions both --rb-tail both``.
"""
# %%
import sys
import tempfile
from pathlib import Path

from dend.catalog import default_catalog
from dend.operators import COLUMN, PAPER, ROW, STANDARD
from dend.report import emit_report, run_sweep

catalog = default_catalog()
report = run_sweep(catalog, (ROW, COLUMN), (STANDARD, PAPER), seed=42)
out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp())
out.mkdir(parents=True, exist_ok=True)
(out / "report.json").write_bytes(emit_report(report, "JSON"))
(out / "report.md").write_bytes(emit_report(report, "MARKDOWN"))
print(f"{len(report.verdicts)} verdicts, {len(report.completeness)} completeness runs -> {out}")
print("\n".join(emit_report(report, "MARKDOWN").decode().splitlines()[:20]))
