"""Command-line front end: classify, label, verify, search, survey, export.

Exit codes are uniform across subcommands:
  0  positive result (SEG found / verified / survey clean)
  1  usage or parse error
  2  undecided (budget exhausted, guard refused, open case)
  3  verified negative (not SEG, verification failed, survey disagreement)
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .constructions import LABELED, PROVED_NOT_SEG, label_any
from .labeling import (
    LabelingFormatError,
    induce,
    read_labeling,
    to_dot,
    verify,
    write_labeling,
)
from .search import (
    BUDGET_EXCEEDED,
    COUNT_ALL,
    EXHAUST_ALL,
    EXHAUSTED_NONE,
    FIND_ONE,
    FOUND,
    GUARD_Q,
    GuardRefused,
    SearchConfig,
    make_certificate,
    search,
)
from .trees import (
    CONJECTURED,
    CONSTRUCTIVE,
    NOT_SEG,
    TreeSpec,
    build_tree,
    classify,
    enumerate_specs,
    parse_spec,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNDECIDED = 2
EXIT_NEGATIVE = 3

# per-row search budget used by survey unless --search-budget is given
SURVEY_DEFAULT_BUDGET = 10**6

_STATUS_TEXT = {
    CONSTRUCTIVE: "SEG (constructive)",
    NOT_SEG: "not SEG (non-existence case)",
    CONJECTURED: "open (conjectured SEG)",
    "uncovered": "open (no case applies)",
}


def _parse_budget(text: str) -> int:
    """Accept 1000000, 10^6, or 1e6."""
    t = text.strip().lower()
    try:
        if "^" in t:
            base, exp = t.split("^", 1)
            return int(base) ** int(exp)
        if "e" in t:
            v = float(t)
            if v != int(v):
                raise ValueError
            return int(v)
        return int(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad budget {text!r}") from None


def _config_from(args: argparse.Namespace, mode: str) -> SearchConfig:
    return SearchConfig(
        node_budget=getattr(args, "search_budget", None),
        break_negation=getattr(args, "break_negation", True),
        break_leaf_permutations=getattr(args, "break_leaves", True),
        break_equal_spine_vertices=getattr(args, "break_spine", True),
        mode=mode,
        override_guard=getattr(args, "override_guard", False),
    )


def _safe_name(spec: TreeSpec) -> str:
    # RT(0^3,2,5) -> RT_0x3_2_5; ^ -> x keeps RT(2^3) distinct from RT(2,3)
    return re.sub(r"[^0-9A-Za-z]+", "_", spec.format().replace("^", "x")).strip("_")


def _write_certificate(cert: dict, directory: str, spec: TreeSpec) -> Path:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    path = d / f"{_safe_name(spec)}.cert.json"
    path.write_text(json.dumps(cert, indent=2) + "\n")
    return path


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _labeling_lines(spec: TreeSpec, f: dict[str, int]) -> list[str]:
    tree = build_tree(spec)
    lines = [f"  {e} = {f[e]}" for e in tree.edge_ids]
    g = induce(tree, f)
    lines.append("  induced: " + ", ".join(f"{v}={g[v]}" for v in tree.vertex_ids))
    return lines


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_classify(args: argparse.Namespace) -> int:
    spec = parse_spec(args.spec)
    cls = classify(spec)
    if args.format == "json":
        _print_json(
            {
                "spec": spec.format(),
                "family": cls.family,
                "j": cls.j,
                "k": cls.k,
                "l": cls.l,
                "q": cls.q,
                "p": cls.p,
                "status": cls.status,
                "tag": cls.tag,
                "case": cls.case,
                "params": cls.params,
            }
        )
    else:
        parity = "even" if cls.q % 2 == 0 else "odd"
        print(f"{spec.format()}: {cls.family}, {_STATUS_TEXT[cls.status]}")
        print(f"  (j,k,l) = ({cls.j},{cls.k},{cls.l}); q = {cls.q} ({parity}), p = {cls.p}")
        case = f" [{cls.case}]" if cls.case else ""
        print(f"  dispatch: {cls.tag}{case}")
    return EXIT_OK


def cmd_label(args: argparse.Namespace) -> int:
    spec = parse_spec(args.spec)
    outcome = label_any(
        spec, search_budget=args.search_budget, override_guard=args.override_guard
    )
    cert = None
    if outcome.kind == PROVED_NOT_SEG and outcome.tag == "by-exhaustion":
        # the fallback search exhausted; rerun deterministically for the record
        cfg = _config_from(args, EXHAUST_ALL)
        cert = make_certificate(spec, cfg, search(spec, cfg))
        if args.certificates_dir:
            path = _write_certificate(cert, args.certificates_dir, spec)
    if outcome.kind == LABELED:
        f = outcome.labeling
        report = verify(build_tree(spec), f)
        if not report.is_seg:  # label_any already gates on this; belt and braces
            print("internal error: produced labeling failed verification", file=sys.stderr)
            return EXIT_NEGATIVE
        if args.out:
            Path(args.out).write_text(write_labeling(build_tree(spec), f))
        if args.format == "json":
            _print_json(
                {
                    "spec": spec.format(),
                    "status": "labeled",
                    "tag": outcome.tag,
                    "case": outcome.case,
                    "labeling": f,
                    "verified": True,
                }
            )
        else:
            via = f" via {outcome.tag}" + (f" [{outcome.case}]" if outcome.case else "")
            print(f"{spec.format()}: SEG labeling found{via}")
            for line in _labeling_lines(spec, f):
                print(line)
            if args.out:
                print(f"  written to {args.out}")
        return EXIT_OK
    if outcome.kind == PROVED_NOT_SEG:
        if args.format == "json":
            _print_json(
                {
                    "spec": spec.format(),
                    "status": "not-seg",
                    "tag": outcome.tag,
                    "certificate": cert,
                }
            )
        else:
            print(f"{spec.format()}: not SEG ({outcome.tag})")
            if cert and args.certificates_dir:
                print(f"  certificate written: {path}")
        return EXIT_NEGATIVE
    if args.format == "json":
        _print_json({"spec": spec.format(), "status": "unknown", "tag": outcome.tag})
    else:
        print(f"{spec.format()}: undecided ({outcome.tag}); no labeling produced")
        if args.search_budget is None:
            print("  hint: pass --search-budget N to let the oracle try")
    return EXIT_UNDECIDED


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        text = Path(args.file).read_text()
    except OSError as exc:
        print(f"cannot read {args.file}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    spec, f = read_labeling(text)
    tree = build_tree(spec)
    report = verify(tree, f)
    if args.format == "json":
        _print_json(
            {
                "spec": spec.format(),
                "is_seg": report.is_seg,
                "violations": [
                    {"kind": v.kind, "missing": list(v.missing), "extra": list(v.extra)}
                    for v in report.violations
                ],
            }
        )
    elif report.is_seg:
        print(f"{spec.format()}: SEG labeling verified")
    else:
        print(f"{spec.format()}: NOT a SEG labeling")
        for v in report.violations:
            print(f"  {v.describe()}")
    return EXIT_OK if report.is_seg else EXIT_NEGATIVE


def cmd_search(args: argparse.Namespace) -> int:
    spec = parse_spec(args.spec)
    if args.exhaust:
        mode = EXHAUST_ALL
    elif args.count:
        mode = COUNT_ALL
    else:
        mode = FIND_ONE
    cfg = _config_from(args, mode)
    result = search(spec, cfg)
    cert_path = None
    cert = None
    if result.outcome == EXHAUSTED_NONE and args.exhaust:
        cert = make_certificate(spec, cfg, result)
        cert_path = _write_certificate(cert, args.certificates_dir, spec)
    if args.format == "json":
        _print_json(
            {
                "spec": spec.format(),
                "mode": mode,
                "outcome": result.outcome,
                "nodes_visited": result.nodes_visited,
                "count": result.count,
                "labeling": result.labeling,
                "certificate": cert,
                "certificate_path": str(cert_path) if cert_path else None,
            }
        )
    elif result.outcome == FOUND:
        print(f"{spec.format()}: found (nodes={result.nodes_visited})")
        if result.count is not None:
            print(f"  count: {result.count} SEG labelings")
        for line in _labeling_lines(spec, result.labeling):
            print(line)
    elif result.outcome == EXHAUSTED_NONE:
        msg = f"{spec.format()}: none (exhausted, nodes={result.nodes_visited})"
        if cert_path:
            msg += f", certificate written: {cert_path}"
        print(msg)
    else:
        print(
            f"{spec.format()}: budget exceeded after {result.nodes_visited} nodes; undecided"
        )
    if result.outcome == FOUND:
        return EXIT_OK
    if result.outcome == EXHAUSTED_NONE:
        return EXIT_NEGATIVE
    return EXIT_UNDECIDED


def _oracle_status(spec: TreeSpec, args: argparse.Namespace) -> tuple[str, int]:
    if spec.q > GUARD_Q and not args.override_guard:
        return "skipped", 0
    budget = args.search_budget if args.search_budget is not None else SURVEY_DEFAULT_BUDGET
    cfg = SearchConfig(
        node_budget=budget,
        break_negation=args.break_negation,
        break_leaf_permutations=args.break_leaves,
        break_equal_spine_vertices=args.break_spine,
        mode=FIND_ONE,
        override_guard=args.override_guard,
    )
    result = search(spec, cfg)
    if result.outcome == FOUND:
        return "found", result.nodes_visited
    if result.outcome == EXHAUSTED_NONE:
        return "none", result.nodes_visited
    return "budget", result.nodes_visited


def cmd_survey(args: argparse.Namespace) -> int:
    rows = []
    disagreements = 0
    for spec in enumerate_specs(args.max_size):
        cls = classify(spec)
        theory = {
            CONSTRUCTIVE: "SEG",
            NOT_SEG: "not-SEG",
            CONJECTURED: "conjectured",
        }.get(cls.status, "uncovered")
        oracle, nodes = _oracle_status(spec, args)
        if theory in ("conjectured", "uncovered") or oracle in ("skipped", "budget"):
            agreement = "info"
        elif (theory == "SEG") == (oracle == "found"):
            agreement = "yes"
        else:
            agreement = "no"
            disagreements += 1
        rows.append(
            {
                "spec": spec.format(),
                "jkl": [cls.j, cls.k, cls.l],
                "q": spec.q,
                "tag": cls.tag,
                "theory": theory,
                "oracle": oracle,
                "agreement": agreement,
            }
        )
    if args.format == "json":
        _print_json(
            {"max_size": args.max_size, "disagreements": disagreements, "rows": rows}
        )
    else:
        widths = [14, 10, 3, 26, 11, 7, 5]
        header = ["spec", "(j,k,l)", "q", "dispatch", "theory", "oracle", "agree"]
        print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
        for row in rows:
            jkl = "({},{},{})".format(*row["jkl"])
            cells = [
                row["spec"],
                jkl,
                str(row["q"]),
                row["tag"],
                row["theory"],
                row["oracle"],
                row["agreement"],
            ]
            print("  ".join(c.ljust(w) for c, w in zip(cells, widths)))
        print(
            f"{len(rows)} trees surveyed, {disagreements} disagreement(s)"
            + ("" if disagreements else "; theory and oracle agree")
        )
    return EXIT_OK if disagreements == 0 else EXIT_NEGATIVE


def cmd_export(args: argparse.Namespace) -> int:
    target = args.target
    if Path(target).exists():
        spec, f = read_labeling(Path(target).read_text())
    else:
        spec, f = parse_spec(target), None
    dot = to_dot(build_tree(spec), f)
    if args.out:
        Path(args.out).write_text(dot)
        print(f"DOT written to {args.out}")
    else:
        print(dot, end="")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")


def _add_search_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--search-budget", type=_parse_budget, default=None,
                   metavar="N", help="node budget (accepts 10^6 / 1e6 forms)")
    p.add_argument("--override-guard", action="store_true",
                   help=f"search even when q > {GUARD_Q}")
    p.add_argument("--no-break-negation", dest="break_negation",
                   action="store_false", help="disable the negation symmetry flag")
    p.add_argument("--no-break-leaves", dest="break_leaves",
                   action="store_false", help="disable leaf-permutation breaking")
    p.add_argument("--no-break-spine", dest="break_spine",
                   action="store_false", help="disable equal-spine-vertex breaking")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="segtrees",
        description="Super edge-graceful labelings of diameter-4 trees.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="family, (j,k,l), and dispatch case")
    p.add_argument("spec")
    _add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("label", help="construct (or search for) a SEG labeling")
    p.add_argument("spec")
    p.add_argument("--out", metavar="PATH", help="also write the labeling file")
    p.add_argument("--certificates-dir", metavar="PATH", default=None,
                   help="write an absence certificate here when search exhausts")
    _add_format(p)
    _add_search_flags(p)
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="check a labeling file")
    p.add_argument("file")
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="run the exhaustive oracle")
    p.add_argument("spec")
    p.add_argument("--exhaust", action="store_true",
                   help="explore everything; certify absence if none found")
    p.add_argument("--count", action="store_true",
                   help="count all SEG labelings (symmetry re-expanded)")
    p.add_argument("--certificates-dir", metavar="PATH", default="certificates")
    _add_format(p)
    _add_search_flags(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("survey", help="theory vs oracle over all small trees")
    p.add_argument("--max-size", type=int, default=9, metavar="Q")
    _add_format(p)
    _add_search_flags(p)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("export", help="emit a DOT drawing of a spec or labeling file")
    p.add_argument("target", help="tree spec or labeling file path")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_export)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except GuardRefused as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED
    except LabelingFormatError as exc:
        print(f"bad labeling file: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:  # SpecSyntaxError, NotDiameterFour, EmptyRange, ...
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
