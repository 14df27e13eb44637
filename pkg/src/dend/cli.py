"""The ``dend`` command line.

Subcommands: ``axioms``, ``system``, ``solve``, ``sample``, ``verify`` and
``report``.  Exit status: 0 success, 1 strict-mode findings (a refuted
verdict, a missed completeness point or an engine disagreement), 2 bad
input, 3 a resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

from . import __version__
from .algebra import check_axioms, sum_associativity_check
from .catalog import MANIFEST, Catalog, default_catalog_bytes, load_catalog
from .errors import DendError, InputError, RejectionExhausted, ResourceLimit
from .groebner import component_sample, solve_components
from .operators import CONVENTIONS, KIND_NAMES, PAPER, ROTA_BAXTER, STANDARD, build_system, parse_kind
from .report import VerificationReport, emit_report, run_sweep

EXIT_OK, EXIT_FINDINGS, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


class _UsageError(InputError):
    pass


def _add(parser, *names):
    opts = {
        "--algebra": dict(metavar="ID", help="algebra id, e.g. Dend2_1"),
        "--all": dict(action="store_true", help="every algebra in the catalog"),
        "--op": dict(choices=KIND_NAMES, help="operator kind"),
        "--weight": dict(metavar="RATIONAL", help="Rota-Baxter weight (default 0)"),
        "--convention": dict(choices=CONVENTIONS + ("both",), default="row",
                             help="matrix convention: row means P(e_i) = sum_j m[i][j] e_j"),
        "--rb-tail": dict(choices=(STANDARD, PAPER, "both"), default=STANDARD,
                          help="product used in the weight term of the Rota-Baxter identity"),
        "--catalog": dict(metavar="PATH", help="catalog JSON (default: the shipped data)"),
        "--out": dict(metavar="DIR", default="report", help="report directory (default: report)"),
        "--format": dict(choices=("text", "json"), default="text"),
        "--seed": dict(type=int, default=42),
        "--count": dict(type=int, metavar="N"),
        "--strict": dict(action="store_true", help="exit 1 on refuted claims or missed points"),
    }
    for name in names:
        kwargs = dict(opts[name])
        if name == "--convention":
            parser.add_argument("--convention", "--conventions", dest="convention", **kwargs)
        else:
            parser.add_argument(name, **kwargs)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dend", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"dend {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("axioms", help="check the dendriform axioms of catalog algebras")
    _add(p, "--algebra", "--all", "--catalog", "--format")

    for name, helptext in (("system", "print the polynomial system of an operator kind"),
                           ("solve", "decompose the solution set into components")):
        p = sub.add_parser(name, help=helptext)
        _add(p, "--algebra", "--op", "--weight", "--convention", "--rb-tail", "--catalog", "--format")

    p = sub.add_parser("sample", help="draw exact points from each solved component")
    _add(p, "--algebra", "--op", "--weight", "--convention", "--rb-tail", "--catalog", "--format",
         "--seed", "--count")

    p = sub.add_parser("verify", help="verify catalog claims and write report.json and report.md")
    _add(p, "--algebra", "--all", "--op", "--weight", "--convention", "--rb-tail", "--catalog",
         "--out", "--format", "--seed", "--count", "--strict")

    p = sub.add_parser("report", help="regenerate report.md from an existing report.json")
    _add(p, "--out", "--strict")
    return parser


# -- helpers -------------------------------------------------------------------


def _catalog(args) -> Catalog:
    if getattr(args, "catalog", None):
        try:
            data = Path(args.catalog).read_bytes()
        except OSError as exc:
            raise _UsageError(f"cannot read catalog: {exc}") from None
    else:
        data = default_catalog_bytes()
    return load_catalog(data)


def _kind(args, required=True):
    if args.op is None:
        if args.weight is not None:
            raise _UsageError("--weight needs --op rota_baxter")
        if required:
            raise _UsageError("--op is required")
        return None
    if args.weight is not None and args.op != ROTA_BAXTER:
        raise _UsageError(f"{args.op} operators take no --weight")
    try:
        weight = Fraction(args.weight) if args.weight is not None else None
    except (ValueError, ZeroDivisionError):
        raise _UsageError(f"not a rational weight: {args.weight!r}") from None
    return parse_kind(args.op, weight)


def _conventions(args) -> List[str]:
    return list(CONVENTIONS) if args.convention == "both" else [args.convention]


def _tails(args) -> List[str]:
    return [STANDARD, PAPER] if args.rb_tail == "both" else [args.rb_tail]


def _one_algebra(args, catalog: Catalog):
    if not args.algebra:
        raise _UsageError("--algebra is required")
    try:
        return catalog.algebra(args.algebra)
    except KeyError:
        raise _UsageError(f"unknown algebra {args.algebra!r}") from None


def _selected_algebras(args, catalog: Catalog):
    if args.all and args.algebra:
        raise _UsageError("--all and --algebra are exclusive")
    if args.all:
        return list(catalog.algebras)
    return [_one_algebra(args, catalog)]


def _emit(args, payload, text_lines):
    if args.format == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        for line in text_lines:
            print(line)


def _systems(args, catalog):
    alg = _one_algebra(args, catalog)
    kind = _kind(args)
    tails = _tails(args) if kind.uses_tail else [STANDARD]
    for conv in _conventions(args):
        for tail in tails:
            yield alg, kind, conv, tail, build_system(alg, kind, conv, tail)


# -- subcommands ---------------------------------------------------------------------


def cmd_axioms(args) -> int:
    catalog = _catalog(args)
    payload, lines, failed = [], [], False
    for alg in _selected_algebras(args, catalog):
        bad = check_axioms(alg) + sum_associativity_check(alg)
        failed = failed or bool(bad)
        payload.append({"algebra": alg.id, "pass": not bad, "violations": [str(v) for v in bad]})
        lines.append(f"{'FAIL' if bad else 'PASS'} {alg.id}")
        lines.extend(f"  {v}" for v in bad)
    _emit(args, payload, lines)
    return EXIT_FINDINGS if failed else EXIT_OK


def cmd_system(args) -> int:
    catalog = _catalog(args)
    payload, lines = [], []
    for alg, kind, conv, tail, system in _systems(args, catalog):
        payload.append(system.to_json())
        lines.append(f"# {alg.id}, {kind}, {conv}" + (f", {tail} tail" if kind.uses_tail else "")
                     + f": {len(system.equations)} equations")
        lines.extend(f"{label}: {p}" for label, p in system.equations)
    _emit(args, payload if len(payload) > 1 else payload[0], lines)
    return EXIT_OK


def cmd_solve(args) -> int:
    catalog = _catalog(args)
    payload, lines = [], []
    for alg, kind, conv, tail, system in _systems(args, catalog):
        comps = solve_components(system.polynomials, system.unknowns, system.parameters)
        payload.append({"algebra": alg.id, "kind": kind.name,
                        "weight": None if kind.weight is None else str(kind.weight),
                        "convention": conv, "rb_tail": tail,
                        "components": [c.to_json() for c in comps]})
        lines.append(f"# {alg.id}, {kind}, {conv}: {len(comps)} component(s)")
        lines.extend(f"[{k}] {c.describe()}" for k, c in enumerate(comps, start=1))
    _emit(args, payload if len(payload) > 1 else payload[0], lines)
    return EXIT_OK


def cmd_sample(args) -> int:
    catalog = _catalog(args)
    count = args.count if args.count is not None else 3
    if count < 1:
        raise _UsageError("--count must be positive")
    payload, lines = [], []
    for alg, kind, conv, tail, system in _systems(args, catalog):
        comps = solve_components(system.polynomials, system.unknowns, system.parameters)
        names = list(system.table.names)
        for k, comp in enumerate(comps, start=1):
            pts = component_sample(comp, args.seed + 7919 * (k - 1), count, names)
            payload.append({"algebra": alg.id, "convention": conv, "component": comp.describe(),
                            "points": [{v: str(x) for v, x in p.items()} for p in pts]})
            lines.append(f"# {alg.id}, {kind}, {conv}, component {k}: {comp.describe()}")
            lines.extend("  " + ", ".join(f"{v}={x}" for v, x in p.items()) for p in pts)
    _emit(args, payload, lines)
    return EXIT_OK


def _write_report(report: VerificationReport, out: Path):
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.json").write_bytes(emit_report(report, "JSON"))
    (out / "report.md").write_bytes(emit_report(report, "MARKDOWN"))


def _findings(report: VerificationReport) -> bool:
    return bool(report.refuted() or report.missed() or report.disagreements())


def cmd_verify(args) -> int:
    catalog = _catalog(args)
    if args.all:
        catalog.check_manifest(MANIFEST)
    algebras = [a.id for a in _selected_algebras(args, catalog)]
    kind = _kind(args, required=False)
    samples = args.count if args.count is not None else 50
    if samples < 1:
        raise _UsageError("--count must be positive")
    report = run_sweep(catalog, _conventions(args), _tails(args), seed=args.seed, samples=samples,
                       algebras=algebras, kinds=[kind] if kind else None)
    out = Path(args.out)
    _write_report(report, out)
    statuses = [v["verdict"] for v in report.verdicts]
    comp = [c["status"] for c in report.completeness]
    summary = {
        "verdicts": len(statuses),
        "confirmed": statuses.count("CONFIRMED"),
        "conditional": statuses.count("CONDITIONAL"),
        "refuted": statuses.count("REFUTED"),
        "completeness_runs": len(comp),
        "complete": comp.count("COMPLETE"),
        "incomplete": comp.count("INCOMPLETE"),
        "undetermined": comp.count("UNDETERMINED"),
        "missed_points": report.missed(),
        "disagreements": len(report.disagreements()),
        "report": [str(out / "report.json"), str(out / "report.md")],
    }
    lines = [f"verdicts: {summary['verdicts']} ({summary['confirmed']} confirmed, "
             f"{summary['conditional']} conditional, {summary['refuted']} refuted)",
             f"completeness: {summary['completeness_runs']} runs ({summary['complete']} complete, "
             f"{summary['incomplete']} incomplete, {summary['undetermined']} undetermined), "
             f"{summary['missed_points']} missed points",
             f"dual-engine disagreements: {summary['disagreements']}"]
    for w in report.weight_shift:
        if w["algebra"] == report.weight_shift[0]["algebra"]:
            cond = ", ".join(w.get("conditions", []))
            lines.append(f"weight shift {w['claim']} ({w['convention']}, {w['rb_tail']}) -> weight "
                         f"{w['to_weight']}: {w['verdict']}" + (f" <{cond}>" if cond else ""))
    lines.append(f"wrote {out / 'report.json'} and {out / 'report.md'}")
    _emit(args, summary, lines)
    for d in report.disagreements():
        print(f"dend: engine disagreement: {d}", file=sys.stderr)
    return EXIT_FINDINGS if args.strict and _findings(report) else EXIT_OK


def cmd_report(args) -> int:
    out = Path(args.out)
    try:
        doc = json.loads((out / "report.json").read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise _UsageError(f"cannot read {out / 'report.json'}: {exc}") from None
    report = VerificationReport.from_json(doc)
    (out / "report.md").write_bytes(emit_report(report, "MARKDOWN"))
    print(f"wrote {out / 'report.md'}")
    return EXIT_FINDINGS if args.strict and _findings(report) else EXIT_OK


COMMANDS = {"axioms": cmd_axioms, "system": cmd_system, "solve": cmd_solve, "sample": cmd_sample,
            "verify": cmd_verify, "report": cmd_report}


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help, --version and usage errors
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (ResourceLimit, RejectionExhausted) as exc:
        print(f"dend: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except DendError as exc:
        print(f"dend: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
