"""wlogkit {bb|artin|oracle|flag-check} FILE [flags]

Exit codes: 0 ok, 2 malformed input, 3 simple-connectivity gate refuted or
uncertified, 4 a claim disagrees with its oracle (report still written).
"""

from __future__ import annotations

import argparse
import logging
import sys

from .artin import artin_invariants
from .bestvina_brady import ASSUMED, CERTIFIED, bb_invariants, flag_gate
from .errors import BudgetExceeded, InvalidInput, NotCertifiedSimplyConnected, NotInCommutatorSubgroup
from .graphs import flag_two_skeleton, triangles
from .homology import (
    exterior_rank,
    flag_boundary_rank,
    flag_h1,
    pi1_trivial_certificate,
    presentation_complex_homology,
    suspension_check,
)
from .io import (
    InputDocument,
    dumps,
    export_presentation,
    load_document,
    presentation_to_json,
    wlog_to_json,
    write_atomic,
)
from .wlog import Presentation, WlogGraph, presentation, substituted_presentation

EXIT_OK, EXIT_INPUT, EXIT_GATE, EXIT_DISAGREE = 0, 2, 3, 4


class Outcome:
    def __init__(self, report: dict, code: int = EXIT_OK, export: Presentation | None = None):
        self.report = report
        self.code = code
        self.export = export


def _expect(kind: str, want: str, command: str):
    if kind != want:
        raise InvalidInput(f"'{command}' expects a document of kind {want!r}, got {kind!r}")


def run_bb(doc: InputDocument, args) -> Outcome:
    g = doc.graph()
    report = {"command": "bb", "input": doc.to_json()}
    gate = flag_gate(g, assume=args.assume_simply_connected)
    report["gate"] = gate
    if gate not in (CERTIFIED, ASSUMED):
        report["error"] = f"flag complex simple connectivity is {gate}"
        return Outcome(report, EXIT_GATE)
    warnings = []
    try:
        res = bb_invariants(
            g,
            mode=args.tree,
            budget=args.tree_budget,
            emit_all=args.emit_all,
            assume=args.assume_simply_connected,
            cycle_pruning=not args.apex_pruning_only,
        )
    except BudgetExceeded as exc:
        warnings.append(f"exact tree search abandoned ({exc}); using greedy tree")
        res = bb_invariants(
            g,
            mode="greedy",
            emit_all=args.emit_all,
            assume=args.assume_simply_connected,
            cycle_pruning=not args.apex_pruning_only,
        )
    w = res.wlog
    report["tree"] = {
        "mode": res.tree_mode,
        "edges": [list(e) for e in res.tree.edges],
        "unfavourable_triangles": res.unfavourable,
    }
    report["emissions"] = [r.to_json() for r in res.emissions]
    report["wlog"] = wlog_to_json(w)
    report["presentation"] = presentation_to_json(presentation(w))
    report["invariants"] = {
        "abelianization": str(res.abelianization),
        "h2_rank": res.h2_rank,
        "b0_rank": res.report.b0_rank_claim,
        "loops": res.loops,
        "skipped_triangles": res.skipped,
        "exterior_rank": res.exterior_rank,
        "flag_boundary_rank": res.flag_boundary_rank,
    }
    report["multiplier"] = res.report.to_json(w)
    report["checks"] = dict(res.checks)
    report["agree"] = res.agree
    report["warnings"] = warnings + res.warnings
    return Outcome(report, EXIT_OK if res.agree else EXIT_DISAGREE, substituted_presentation(w))


def run_artin(doc: InputDocument, args) -> Outcome:
    s = doc.artin()
    res = artin_invariants(s)
    w = res.wlog
    computed, formula, same = res.component_check
    d = res.decomposition
    report = {
        "command": "artin",
        "input": doc.to_json(),
        "wlog": wlog_to_json(w),
        "presentation": presentation_to_json(presentation(w)),
        "decomposition": {
            "components": [list(c) for c in d.components],
            "forest_edges": list(d.forest_edges),
            "extra_edges": list(d.extra_edges),
        },
        "component_count": {"computed": computed, "formula": formula, "agree": same},
        "invariants": {"h2_rank": res.report.h2_rank_claim, "b0_rank": res.report.b0_rank_claim},
        "multiplier": res.report.to_json(w),
        "checks": dict(res.checks),
        "agree": res.agree,
        "warnings": list(res.warnings),
    }
    return Outcome(report, EXIT_OK if res.agree else EXIT_DISAGREE, substituted_presentation(w))


def _homology_block(p: Presentation) -> dict:
    h1, h2 = presentation_complex_homology(p.generators, p.relators)
    try:
        ext = exterior_rank(p.relators, p.generators)
    except NotInCommutatorSubgroup:
        ext = "not-applicable"
    return {"h1": str(h1), "h1_detail": h1.to_json(), "h2_rank": h2, "exterior_rank": ext}


def run_oracle(kind: str, obj, args) -> Outcome:
    if kind == "wlog":
        w: WlogGraph = obj
        p = presentation(w)
        sus = suspension_check(w)
        report = {
            "command": "oracle",
            "input": wlog_to_json(w),
            "homology": _homology_block(p),
            "suspension": sus.to_json(),
        }
        if w.definitions:
            report["substituted"] = _homology_block(substituted_presentation(w))
        report["agree"] = sus.passed
        return Outcome(report, EXIT_OK if sus.passed else EXIT_DISAGREE, p)
    if kind == "presentation":
        report = {"command": "oracle", "input": presentation_to_json(obj), "homology": _homology_block(obj)}
        return Outcome(report, EXIT_OK, obj)
    raise InvalidInput(f"'oracle' expects a wlog or presentation document, got {kind!r}")


def run_flag_check(doc: InputDocument, args) -> Outcome:
    g = doc.graph()
    sk = flag_two_skeleton(g)
    gate = flag_gate(g, assume=args.assume_simply_connected)
    report = {
        "command": "flag-check",
        "input": doc.to_json(),
        "connected": g.is_connected() if g.vertices else False,
        "triangles": len(triangles(g)),
        "flag_h1": str(flag_h1(sk)),
        "flag_boundary_rank": flag_boundary_rank(sk),
        "pi1_certificate": pi1_trivial_certificate(sk),
        "gate": gate,
    }
    return Outcome(report, EXIT_OK if gate in (CERTIFIED, ASSUMED) else EXIT_GATE)


def _render_value(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return "[" + ", ".join(_render_value(x) for x in v) + "]"
    if isinstance(v, dict):
        return ", ".join(f"{k}={_render_value(x)}" for k, x in v.items())
    return str(v)


def _flat(v) -> bool:
    if isinstance(v, list):
        return all(_flat(x) and not isinstance(x, dict) for x in v)
    if isinstance(v, dict):
        return all(not isinstance(x, (dict, list)) for x in v.values())
    return True


def _render(obj, indent: int, out: list[str]) -> None:
    pad = "  " * indent
    if isinstance(obj, dict):
        for k, v in obj.items():
            line = f"{pad}{k}: {_render_value(v)}"
            if _flat(v) and len(line) <= 100:
                out.append(line)
            else:
                out.append(f"{pad}{k}:")
                _render(v, indent + 1, out)
    elif isinstance(obj, list):
        for item in obj:
            line = f"{pad}- {_render_value(item)}"
            if _flat(item) and len(line) <= 100:
                out.append(line)
            else:
                out.append(f"{pad}-")
                _render(item, indent + 1, out)
    else:
        out.append(pad + _render_value(obj))


def render_text(report: dict) -> str:
    """Human-readable view of the same document the --json flag prints."""
    out: list[str] = []
    _render(report, 0, out)
    return "\n".join(out) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wlogkit", description="WLOG constructions and Schur multiplier reports.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", help="input document (JSON, or DOT for graphs)")
        p.add_argument("--json", action="store_true", help="print the report as JSON")
        p.add_argument("-o", "--output", help="write the report here instead of stdout")
        p.add_argument("-v", "--verbose", action="store_true")

    bb = sub.add_parser("bb", help="Bestvina-Brady group of a graph")
    common(bb)
    bb.add_argument("--tree", choices=("exact", "greedy"), default="exact")
    bb.add_argument("--tree-budget", type=int, default=None, metavar="N")
    bb.add_argument("--emit-all", action="store_true", help="emit every triangle, no pruning")
    bb.add_argument("--apex-pruning-only", action="store_true", help="skip the 2-cycle pruning stage")
    bb.add_argument("--assume-simply-connected", action="store_true")
    bb.add_argument("--export-presentation", metavar="PATH")

    ar = sub.add_parser("artin", help="Artin group of a labelled graph")
    common(ar)
    ar.add_argument("--export-presentation", metavar="PATH")

    orc = sub.add_parser("oracle", help="homology of a WLOG or presentation")
    common(orc)

    fc = sub.add_parser("flag-check", help="simple-connectivity gate for a graph")
    common(fc)
    fc.add_argument("--assume-simply-connected", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s: %(message)s")
    try:
        kind, obj = load_document(args.file)
        if args.command == "bb":
            _expect(kind, "graph", "bb")
            outcome = run_bb(obj, args)
        elif args.command == "artin":
            _expect(kind, "artin", "artin")
            outcome = run_artin(obj, args)
        elif args.command == "oracle":
            outcome = run_oracle(kind, obj, args)
        else:
            if kind not in ("graph", "artin"):
                raise InvalidInput(f"'flag-check' expects a graph document, got {kind!r}")
            outcome = run_flag_check(obj, args)
    except (InvalidInput, NotCertifiedSimplyConnected) as exc:
        print(f"wlogkit: error: {exc}", file=sys.stderr)
        return EXIT_GATE if isinstance(exc, NotCertifiedSimplyConnected) else EXIT_INPUT

    text = dumps(outcome.report) if args.json else render_text(outcome.report)
    if args.output:
        write_atomic(args.output, text)
    else:
        sys.stdout.write(text)
    path = getattr(args, "export_presentation", None)
    if path and outcome.export is not None and outcome.code != EXIT_GATE:
        write_atomic(path, export_presentation(outcome.export))
    if outcome.code == EXIT_GATE:
        print(f"wlogkit: {outcome.report.get('error', 'gate ' + outcome.report['gate'])}", file=sys.stderr)
    elif outcome.code == EXIT_DISAGREE:
        print("wlogkit: validation disagreement, see report", file=sys.stderr)
    return outcome.code


if __name__ == "__main__":
    sys.exit(main())
