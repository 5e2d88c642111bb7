"""Command-line front end.

Subcommands:
  gen        emit a family graph as JSON
  construct  build and verify a family labeling, emit the certificate
  verify     re-check a certificate file (exit 0 iff it verifies)
  bounds     closed-form deficiency bounds for a family (or a whole table)
  solve      exact deficiency of a graph by exhaustive search
  reproduce  run the claim manifest and emit the report

Exit codes: 0 success / certificate accepted / exact deficiency found;
1 rejected certificate or failed claims; 2 usage error; 3 the solver
exhausted every filler count up to the cap without a witness; 4 the search
would exceed the label limit.  JSON goes to the --json path ('-' = stdout);
human-readable summaries go to stdout and solver statistics to stderr.

SEMDEF_THREADS sets the default worker count for solve and reproduce.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds as bounds_mod
from . import constructions as cons
from . import reproduce as reproduce_mod
from .graphs import FamilyDescriptor, Graph, make_family, wheel_minus_spoke
from .labeling import (
    Rejection,
    SemCertificate,
    certificate_from_json_dict,
    verify_sem,
)
from .solver import SearchLimitError, deficiency

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_USAGE = 2
EXIT_NOT_SEM_UP_TO = 3
EXIT_LIMIT = 4


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("SEMDEF_THREADS", "1")))
    except ValueError:
        return 1


def _write_json(data: dict, path: str | None) -> None:
    text = json.dumps(data, indent=2, sort_keys=False) + "\n"
    if path is None:
        return
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _read_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def _family_arg(value: str) -> str:
    known = (
        "path",
        "cycle",
        "star",
        "empty",
        "wheel",
        "wheel-minus-spoke",
        "path-join",
        "star-join",
        "cycle-join",
        "generic-join",
    )
    if value not in known:
        raise argparse.ArgumentTypeError(f"unknown family {value!r}; choose from {known}")
    return value


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_gen(args) -> int:
    if args.family == "wheel-minus-spoke" and args.mid_spoke:
        if args.n is None or args.n < 4 or args.n % 2:
            print("--mid-spoke needs an even -n >= 4", file=sys.stderr)
            return EXIT_USAGE
        g = wheel_minus_spoke(args.n, missing_spoke=args.n // 2)
    else:
        g = make_family(FamilyDescriptor(args.family, n=args.n, m=args.m))
    if args.json != "-":  # keep stdout parseable when the JSON goes there
        print(f"{args.family}: p={g.vertex_count}, q={g.q}")
    _write_json(g.to_json_dict(), args.json)
    return EXIT_OK


def _construct(args) -> cons.ConstructionResult:
    family = args.family
    if family != "generic-join" and args.n is None:
        raise ValueError(f"construct --family {family} requires -n")
    if family.endswith("-join") and args.m is None:
        raise ValueError(f"construct --family {family} requires -m")
    if family == "wheel-minus-spoke":
        return cons.construct_wheel_minus_spoke(args.n)
    if family == "path-join":
        return cons.construct_path_join(args.n, args.m)
    if family == "star-join":
        return cons.construct_star_join(args.n, args.m)
    if family == "cycle-join":
        return cons.construct_cycle_join(args.n, args.m)
    if family == "generic-join":
        if args.base is None:
            raise ValueError("generic-join needs --base pointing at a SEM base certificate")
        graph, lab, _claimed = certificate_from_json_dict(_read_json(args.base))
        base = verify_sem(graph, lab)
        if isinstance(base, Rejection):
            raise ValueError(f"base certificate does not verify: {base.reason} ({base.detail})")
        return cons.construct_general_join(base, args.m)
    raise ValueError(f"no construction for family {family!r}")


def _cmd_construct(args) -> int:
    result = _construct(args)
    cert = result.certificate
    out = sys.stderr if args.json == "-" else sys.stdout
    print(
        f"{args.family}: p={cert.graph.vertex_count}, q={cert.graph.q}, "
        f"fillers={result.claimed_isolated}, labels={list(cert.labeling.labels)}, "
        f"s={cert.min_edge_sum}, k={cert.magic_constant}",
        file=out,
    )
    if args.show_errata:
        applied = ", ".join(result.errata_applied) if result.errata_applied else "none"
        print(f"corrections applied: {applied}", file=out)
    _write_json(cert.to_json_dict(), args.json)
    return EXIT_OK


def _cmd_verify(args) -> int:
    graph, lab, claimed = certificate_from_json_dict(_read_json(args.cert))
    if args.graph is not None:
        other = Graph.from_json_dict(_read_json(args.graph))
        if other != graph:
            print("certificate graph differs from --graph", file=sys.stderr)
            return EXIT_REJECTED
    result = verify_sem(graph, lab)
    if isinstance(result, Rejection):
        print(f"REJECTED: {result.reason}: {result.detail}", file=sys.stderr)
        return EXIT_REJECTED
    for key, got in (("s", result.min_edge_sum), ("k", result.magic_constant)):
        if claimed.get(key) is not None and claimed[key] != got:
            print(
                f"REJECTED: claimed {key}={claimed[key]} but the labeling gives {got}",
                file=sys.stderr,
            )
            return EXIT_REJECTED
    print(
        f"OK: sums {result.min_edge_sum}..{result.min_edge_sum + graph.q - 1}, "
        f"fillers={result.isolated}, k={result.magic_constant}"
    )
    return EXIT_OK


def _bounds_rows(family: str, n_max: int, m_max: int):
    if family == "wheel-minus-spoke":
        for n in range(3, n_max + 1):
            yield n, None, bounds_mod.family_bounds(FamilyDescriptor(family, n=n))
        return
    n_lo = {"path-join": 1, "star-join": 2, "cycle-join": 3}[family]
    m_lo = 1 if family == "star-join" else 2
    for n in range(n_lo, n_max + 1):
        for m in range(m_lo, m_max + 1):
            yield n, m, bounds_mod.family_bounds(FamilyDescriptor(family, n=n, m=m))


def _cmd_bounds(args) -> int:
    if args.table:
        rows = list(_bounds_rows(args.family, args.n_max, args.m_max))
        if args.table == "csv":
            print("family,n,m,lower,upper,lower_source,upper_source")
            for n, m, b in rows:
                up = "" if b.upper is None else b.upper
                upsrc = "" if b.upper_source is None else b.upper_source
                print(f"{args.family},{n},{'' if m is None else m},{b.lower},{up},{b.lower_source},{upsrc}")
        else:
            print("| n | m | lower | upper | lower source | upper source |")
            print("| --- | --- | --- | --- | --- | --- |")
            for n, m, b in rows:
                up = "unknown" if b.upper is None else b.upper
                upsrc = "-" if b.upper_source is None else b.upper_source
                print(f"| {n} | {'-' if m is None else m} | {b.lower} | {up} | {b.lower_source} | {upsrc} |")
        return EXIT_OK
    b = bounds_mod.family_bounds(FamilyDescriptor(args.family, n=args.n, m=args.m))
    upper = "unknown (open)" if b.upper is None else f"{b.upper} ({b.upper_source})"
    print(f"{args.family} n={args.n}" + (f" m={args.m}" if args.m is not None else ""))
    print(f"  lower: {b.lower} ({b.lower_source})")
    print(f"  upper: {upper}")
    if b.exact is not None:
        print(f"  exact: {b.exact}")
    return EXIT_OK


def _cmd_solve(args) -> int:
    g = Graph.from_json_dict(_read_json(args.graph))
    try:
        out = deficiency(
            g,
            args.cap,
            prune=not args.no_prune,
            symmetry=not args.no_symmetry,
            threads=args.threads,
            max_labels=args.max_labels,
        )
    except SearchLimitError as exc:
        print(f"limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    print(
        f"stats: nodes={out.nodes} seconds={out.seconds:.3f} threads={args.threads}",
        file=sys.stderr,
    )
    human = sys.stderr if args.json == "-" else sys.stdout
    payload: dict = {
        "schema": "semdef/1",
        "cap": out.cap,
        "deficiency": out.deficiency,
        "certificate": None,
    }
    if out.is_exact:
        payload["status"] = "exact"
        payload["certificate"] = out.witness.to_json_dict()
        print(
            f"deficiency {out.deficiency}; witness labels {list(out.witness.labeling.labels)}, "
            f"k={out.witness.magic_constant}",
            file=human,
        )
        _write_json(payload, args.json)
        return EXIT_OK
    payload["status"] = "not-sem-up-to"
    print(f"no SEM labeling with up to {out.cap} fillers (exhaustive)", file=human)
    _write_json(payload, args.json)
    return EXIT_NOT_SEM_UP_TO


def _cmd_reproduce(args) -> int:
    selection = set(args.select) if args.select else None
    report = reproduce_mod.run(selection=selection, threads=args.threads)
    if selection and not report.entries:
        print(f"no claims match selection {sorted(selection)}", file=sys.stderr)
        return EXIT_USAGE
    for e in report.entries:
        tag = f" [{', '.join(e.errata)}]" if e.errata else ""
        print(f"{e.status.upper():>11}  {e.claim.id}: {e.details}{tag}")
    s = report.summary()
    print(
        f"summary: {s['total']} claims, {s['pass']} pass, {s['errata-pass']} errata-pass, "
        f"{s['fail']} fail, {s['open']} open"
    )
    if args.json:
        _write_json(reproduce_mod.report_json_dict(report), args.json)
    if args.md:
        with open(args.md, "w") as fh:
            fh.write(reproduce_mod.report_markdown(report))
    return EXIT_REJECTED if report.failed else EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semdef",
        description="Super edge-magic labelings: constructions, verification, bounds, exact search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a family graph as JSON")
    p.add_argument("--family", type=_family_arg, required=True)
    p.add_argument("-n", type=int, default=None)
    p.add_argument("-m", type=int, default=None)
    p.add_argument("--mid-spoke", action="store_true", help="missing spoke at n/2 (even n)")
    p.add_argument("--json", default="-", help="output path ('-' = stdout)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("construct", help="build and verify a family labeling")
    p.add_argument("--family", type=_family_arg, required=True)
    p.add_argument("-n", type=int, default=None)
    p.add_argument("-m", type=int, default=None)
    p.add_argument("--base", default=None, help="base certificate JSON (generic-join)")
    p.add_argument("--show-errata", action="store_true")
    p.add_argument("--json", default=None, help="certificate output path ('-' = stdout)")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="re-check a certificate file")
    p.add_argument("--cert", required=True)
    p.add_argument("--graph", default=None, help="cross-check against this graph JSON")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bounds", help="closed-form deficiency bounds")
    p.add_argument("--family", type=_family_arg, required=True)
    p.add_argument("-n", type=int, default=None)
    p.add_argument("-m", type=int, default=None)
    p.add_argument("--table", choices=("md", "csv"), default=None)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--m-max", type=int, default=6)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("solve", help="exact deficiency by exhaustive search")
    p.add_argument("--graph", required=True, help="graph JSON path")
    p.add_argument("--cap", type=int, default=4, help="largest filler count to try")
    p.add_argument("--threads", type=int, default=_default_threads())
    p.add_argument("--no-prune", action="store_true", help="enumerate without pruning")
    p.add_argument("--no-symmetry", action="store_true", help="disable complement symmetry")
    p.add_argument("--max-labels", type=int, default=16, help="label-count limit")
    p.add_argument("--json", default=None, help="outcome output path ('-' = stdout)")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("reproduce", help="run the claim manifest")
    p.add_argument("--select", action="append", default=None, help="group or claim id (repeatable)")
    p.add_argument("--threads", type=int, default=_default_threads())
    p.add_argument("--json", default=None, help="report JSON path")
    p.add_argument("--md", default=None, help="report Markdown path")
    p.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
