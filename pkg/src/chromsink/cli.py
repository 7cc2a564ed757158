"""Command-line front end.

    chromsink compute --graph G.json --basis e [--json]
    chromsink sigma --graph G.json --mu 7 --j 3
    chromsink orientations --graph G.json [--json]
    chromsink necklace --a 5 --mu 3 --j 2 [--enumerate]
    chromsink verify conjecture --graph G.json [--mu 7 --j 3] [--json]
    chromsink fuzz main --seed 1 --trials 50 --edge-prob 1/2
    chromsink clawfree --graph G.json

Exit status is 0 on success, 1 when a verification fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from .necklaces import count_necklace, enumerate_necklace
from .orientations import acyclic_orientations, count_by_sink_count, sink_decomposition
from .partitions import Partition, format_partition, parse_partition
from .swgraph import (
    GraphFormatError,
    SetWeightedGraph,
    csf_e,
    csf_p,
    is_claw_free,
    is_maximal,
    parse_graph,
    s_allowability_violation,
)
from .symfunc import e_to_m, sigma
from .verify import (
    FAIL,
    STATEMENTS,
    FuzzConfig,
    SweepSummary,
    VerificationReport,
    fuzz,
    sweep,
    verify_conjecture,
    verify_main_theorem,
    verify_no_edge,
    verify_one_edge_graph,
    verify_one_level,
    verify_stanley_sinks,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _load_graph(path: str) -> SetWeightedGraph:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise UsageError(f"--graph: cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"--graph: {path} is not valid JSON ({exc.msg} at line {exc.lineno})") from exc
    try:
        return parse_graph(doc)
    except GraphFormatError as exc:
        raise UsageError(f"{path}: invalid field {exc}") from exc


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a partition: {text!r}") from exc


def _rational_arg(text: str) -> Fraction:
    try:
        p = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational p/q: {text!r}") from exc
    if not 0 <= p <= 1:
        raise argparse.ArgumentTypeError(f"edge probability {text} is outside [0, 1]")
    return p


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return n


def _nonnegative(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chromsink", description="Chromatic symmetric functions of set-weighted graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="chromatic symmetric function in the p, e or m basis")
    p.add_argument("--graph", required=True)
    p.add_argument("--basis", choices=("p", "e", "m"), default="e")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sigma", help="sum of e-coefficients over a transpose prefix")
    p.add_argument("--graph", required=True)
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.add_argument("--j", type=_nonnegative, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("orientations", help="acyclic orientations with sink levels")
    p.add_argument("--graph", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("necklace", help="count subsets of the a-cycle by size and leftover components")
    p.add_argument("--a", type=_positive, required=True)
    p.add_argument("--mu", type=_nonnegative, required=True)
    p.add_argument("--j", type=_nonnegative, required=True)
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="compare both sides of one statement on a graph")
    p.add_argument("statement", choices=STATEMENTS)
    p.add_argument("--graph", required=True)
    p.add_argument("--mu", type=_partition_arg)
    p.add_argument("--j", type=_nonnegative)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timing", action="store_true", help="include wall-clock millis in JSON output")

    p = sub.add_parser("fuzz", help="seeded random-graph sweep of one statement")
    p.add_argument("statement", choices=STATEMENTS)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=_nonnegative, default=50)
    p.add_argument("--max-vertices", type=_positive, default=4)
    p.add_argument("--max-weight", type=_positive, default=3)
    p.add_argument("--edge-prob", type=_rational_arg, default=Fraction(1, 2))
    p.add_argument("--json", action="store_true")
    p.add_argument("--timing", action="store_true", help="include wall-clock millis in JSON output")

    p = sub.add_parser("clawfree", help="claw test and s-allowability of every single-part mu")
    p.add_argument("--graph", required=True)
    p.add_argument("--json", action="store_true")
    return parser


# --------------------------------------------------------------------------
# subcommands

def _emit(out: TextIO, doc) -> None:
    out.write(json.dumps(doc, ensure_ascii=False, sort_keys=False) + "\n")


def cmd_compute(args, out: TextIO) -> int:
    G = _load_graph(args.graph)
    if args.basis == "p":
        f = csf_p(G)
    elif args.basis == "e":
        f = csf_e(G)
    else:
        f = e_to_m(csf_e(G))
    if args.json:
        _emit(out, f.to_json())
    else:
        out.write(f"degree {f.degree}, {len(f.coeffs)} terms in the {args.basis} basis\n")
        for lam, c in f.terms():
            out.write(f"{c:>12}  {args.basis}[{format_partition(lam)}]\n")
    return EXIT_OK


def _single_part_note(G: SetWeightedGraph, mu: Partition) -> tuple[str, bool]:
    if len(mu) == 1:
        return "s-allowable", s_allowability_violation(G, mu[0]) is None
    return "maximal", is_maximal(G, mu)


def cmd_sigma(args, out: TextIO) -> int:
    G = _load_graph(args.graph)
    d = G.total_weight
    mu = args.mu
    if mu.size + args.j > d:
        raise UsageError(f"--j: |mu| + j = {mu.size + args.j} exceeds the total weight {d}")
    if args.j == 0 and mu.size != d:
        raise UsageError("--j: j = 0 needs |mu| equal to the total weight")
    value = sigma(csf_e(G), tuple(mu), args.j)
    if mu.size == 0:
        label, ok = None, None
    else:
        label, ok = _single_part_note(G, mu)
    if args.json:
        doc = {"mu": format_partition(mu), "j": args.j, "sigma": str(value)}
        if label:
            doc[label.replace("-", "_")] = ok
        _emit(out, doc)
    else:
        out.write(f"{value}\n")
        if label:
            out.write(f"{label}: {'true' if ok else 'false'}\n")
    return EXIT_OK


def cmd_orientations(args, out: TextIO) -> int:
    G = _load_graph(args.graph)
    ids = G.ids
    rows = []
    for o in acyclic_orientations(G):
        dec = sink_decomposition(o)
        rows.append({
            "arcs": o.to_json(),
            "levels": [[ids[v] for v in sorted(lev)] for lev in dec.levels],
            "type": list(dec.type_seq),
        })
    hist = count_by_sink_count(G)
    if args.json:
        _emit(out, {"count": len(rows), "orientations": rows,
                    "sink_counts": {str(k): v for k, v in hist.items()}})
        return EXIT_OK
    out.write(f"{len(rows)} acyclic orientations\n")
    for row in rows:
        arcs = ", ".join(f"{u}->{v}" for u, v in row["arcs"]) or "(no edges)"
        levels = " | ".join(" ".join(lev) for lev in row["levels"])
        out.write(f"{arcs}  levels: {levels}  type: {','.join(map(str, row['type']))}\n")
    out.write("sinks: " + ", ".join(f"{k}->{v}" for k, v in hist.items()) + "\n")
    return EXIT_OK


def cmd_necklace(args, out: TextIO) -> int:
    count = count_necklace(args.a, args.mu, args.j)
    subsets = list(enumerate_necklace(args.a, args.mu, args.j)) if args.enumerate else None
    if args.json:
        doc = {"a": args.a, "mu": args.mu, "j": args.j, "count": count}
        if subsets is not None:
            doc["subsets"] = subsets
        _emit(out, doc)
    else:
        out.write(f"{count}\n")
        for W in subsets or ():
            out.write(" ".join(map(str, W)) + "\n")
    return EXIT_OK


def _single_report(args, G: SetWeightedGraph) -> VerificationReport:
    mu, j = args.mu, args.j
    if args.statement == "stanley":
        return verify_stanley_sinks(G)
    if args.statement == "one-level":
        if mu:
            raise UsageError("--mu: the one-level statement takes the empty partition only")
        return verify_one_level(G, j)
    if args.statement == "main":
        return verify_main_theorem(G, mu, j)
    if len(mu) != 1:
        raise UsageError(f"--mu: {args.statement} takes a single part, got {format_partition(mu)!r}")
    check = {"no-edge": verify_no_edge, "one-edge": verify_one_edge_graph,
             "conjecture": verify_conjecture}[args.statement]
    return check(G, mu[0], j)


def _write_reports(reports, args, out: TextIO) -> int:
    summary = SweepSummary()
    for r in reports:
        summary.add(r)
        if args.json:
            doc = r.to_json()
            if not args.timing:
                doc["millis"] = None
            _emit(out, doc)
        else:
            out.write(r.describe() + "\n")
            if r.status == FAIL and r.breakdown is not None:
                for c in r.breakdown:
                    out.write(f"    {json.dumps(c, ensure_ascii=False)}\n")
    if not args.json:
        out.write(f"pass {summary.passed}, fail {summary.failed}, precondition-unmet {summary.unmet}\n")
    return EXIT_FAIL if summary.failed else EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    G = _load_graph(args.graph)
    needs_mu = args.statement not in ("stanley", "one-level")
    if args.statement == "stanley" or (args.j is not None and (args.mu is not None or not needs_mu)):
        reports = [_single_report(args, G)]
    elif args.mu is None and args.j is None:
        reports = sweep(args.statement, G)
    else:
        raise UsageError("--mu/--j: give both (or --j alone for one-level), or neither to sweep")
    return _write_reports(reports, args, out)


def cmd_fuzz(args, out: TextIO) -> int:
    config = FuzzConfig(seed=args.seed, trials=args.trials, max_vertices=args.max_vertices,
                        max_weight=args.max_weight, edge_probability=args.edge_prob,
                        statement=args.statement)
    return _write_reports(fuzz(config), args, out)


def cmd_clawfree(args, out: TextIO) -> int:
    G = _load_graph(args.graph)
    claw_free = is_claw_free(G)
    rejected = [mu for mu in range(1, G.total_weight + 1) if s_allowability_violation(G, mu) is not None]
    if args.json:
        _emit(out, {"claw_free": claw_free, "unweighted": G.is_unweighted(), "not_s_allowable": rejected})
    else:
        out.write(f"claw-free: {'true' if claw_free else 'false'}\n")
        out.write("not s-allowable: " + (", ".join(map(str, rejected)) or "none") + "\n")
    # claw-free unweighted graphs make every single part s-allowable
    return EXIT_FAIL if claw_free and G.is_unweighted() and rejected else EXIT_OK


COMMANDS = {
    "compute": cmd_compute,
    "sigma": cmd_sigma,
    "orientations": cmd_orientations,
    "necklace": cmd_necklace,
    "verify": cmd_verify,
    "fuzz": cmd_fuzz,
    "clawfree": cmd_clawfree,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())
