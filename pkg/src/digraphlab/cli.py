"""Command-line front end.

Graphs move between subcommands as JSON files only; identical argv (and seed)
produce identical output bytes, except for the optional timing field on
verification reports.

Exit codes: 0 success or PASS, 1 FAIL (counterexample found), 2 indeterminate
(budget or size guard), 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import verify as V
from .coloring import chromatic_number
from .constructions import (
    arc_graph_iter,
    circular_complete,
    complete,
    interleaved_adjoint,
    inverse_interleaved_adjoint,
    path,
    tournament,
    tree_dual,
)
from .core import ConstructionError, Digraph, SizeLimitExceeded, from_json, hom_to_json_dict, to_dot, to_json
from .homs import BUDGET_EXCEEDED, DEFAULT_BUDGET, hom_exists
from .paths import OrientedPath, path_family
from .product import categorical_product

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INDETERMINATE = 2
EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _load(path_str: str) -> Digraph:
    return from_json(Path(path_str).read_text())


def _emit(args, text: str):
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _verdict_exit(verdict: str) -> int:
    return {"PASS": EXIT_PASS, "FAIL": EXIT_FAIL, "INDETERMINATE": EXIT_INDETERMINATE}[verdict]


def _report_out(args, report: V.VerifyReport) -> int:
    if args.json:
        print(json.dumps(report.to_json_dict(include_timing=args.timings), separators=(",", ":")))
    else:
        print(f"[{report.verdict}] {report.claim} {json.dumps(report.params, default=str)}")
        if report.verdict != "PASS":
            print(json.dumps(report.witnesses, indent=2, default=str))
    return _verdict_exit(report.verdict)


def cmd_construct(args) -> int:
    fam = args.family
    g: Digraph
    if fam == "tournament":
        g = tournament(_req(args, "n"))
    elif fam == "complete":
        g = complete(_req(args, "n"))
    elif fam == "path":
        if args.dirs is not None:
            g = OrientedPath.parse(args.dirs).as_digraph()
        else:
            g = path(_req(args, "n"))
    elif fam == "circular":
        g = circular_complete(_req(args, "n"), _req(args, "k"))
    elif fam == "iota":
        g = interleaved_adjoint(_input_graph(args), _req(args, "k"))
    elif fam == "iota-star":
        g = inverse_interleaved_adjoint(_input_graph(args), _req(args, "k"))
    elif fam == "arc-graph":
        g = arc_graph_iter(_input_graph(args), args.k if args.k is not None else 1)
    elif fam == "dual":
        g = tree_dual(_input_graph(args))
    elif fam == "product":
        if not args.factors:
            raise ConstructionError("product needs --factors")
        spec = categorical_product([_load(f) for f in args.factors])
        g = spec.materialize()
    elif fam == "path-family":
        family = path_family(_req(args, "n"), _req(args, "k"))
        if args.json:
            text = json.dumps(
                {"n": family.n, "k": family.k, "members": [p.dirs for p in family.members]},
                separators=(",", ":"),
            )
        else:
            text = "\n".join(p.dirs for p in family.members)
        _emit(args, text + "\n")
        return EXIT_PASS
    else:  # pragma: no cover - argparse restricts choices
        raise ConstructionError(f"unknown family {fam}")
    _emit(args, to_dot(g, args.collapse_symmetric) if args.dot else to_json(g) + "\n")
    return EXIT_PASS


def _req(args, name: str) -> int:
    val = getattr(args, name)
    if val is None:
        raise ConstructionError(f"--{name} is required for this family")
    return val


def _input_graph(args) -> Digraph:
    if not args.input:
        raise ConstructionError("this family needs --input")
    return _load(args.input)


def cmd_hom(args) -> int:
    g = _load(args.source)
    h = _load(args.target)
    r = hom_exists(g, h, args.budget)
    if r is BUDGET_EXCEEDED:
        print(json.dumps({"result": "budget_exceeded", "budget": args.budget}))
        return EXIT_INDETERMINATE
    if r is None:
        print(json.dumps({"result": "none"}))
        return EXIT_PASS
    print(json.dumps({"result": "hom", **hom_to_json_dict(r, h)}, separators=(",", ":")))
    return EXIT_PASS


def cmd_chi(args) -> int:
    g = _load(args.input)
    res = chromatic_number(g, args.limit)
    if res.chi is None:
        print(json.dumps({"chi": None, "above_limit": args.limit}))
        return EXIT_INDETERMINATE
    if args.json:
        payload = {"chi": res.chi, "colouring": list(res.colouring)}
        if res.lower_bound_cert is not None:
            payload["clique"] = list(res.lower_bound_cert)
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(res.chi)
    return EXIT_PASS


def cmd_verify(args) -> int:
    claim = args.claim
    budget = args.budget
    if claim == "gencol":
        if args.input:
            report = V.verify_gencol(_load(args.input), args.k or 2)
        else:
            report = V.verify_gencol_sweep(
                samples=args.samples or 100,
                max_vertices=args.max_vertices or 5,
                k=args.k or 2,
                seed=args.seed if args.seed is not None else 20103,
            )
    elif claim == "adjunction":
        if args.source and args.target:
            report = V.verify_adjunction(_load(args.source), _load(args.target), args.k or 2, budget)
        else:
            report = V.verify_adjunction_sweep(
                samples=args.samples or 200,
                max_vertices=args.max_vertices or 4,
                seed=args.seed if args.seed is not None else 20104,
                budget=budget,
            )
    elif claim == "finobs":
        if args.input:
            report = V.verify_finobs(_load(args.input), _req_opt(args, "n"), _req_opt(args, "k"), budget)
        else:
            report = V.verify_finobs_exhaustive(
                _req_opt(args, "n"), _req_opt(args, "k"), args.max_vertices or 3, budget
            )
    elif claim == "minty":
        report = V.verify_minty(_load_req(args, "input"), _req_opt(args, "c"), _req_opt(args, "k"), budget)
    elif claim == "duality-tree":
        if args.tree:
            tree = _load(args.tree)
            sources = list(V.all_digraphs(args.max_vertices or 3))
            report = V.verify_duality_tree(tree, sources, budget)
        else:
            report = V.verify_duality_tree_exhaustive(
                args.max_tree_arcs or 4, args.max_vertices or 3, budget
            )
    elif claim == "inadprod":
        report = V.verify_inadprod(_req_opt(args, "n"), _req_opt(args, "k"), budget)
    elif claim == "mulpath":
        if args.factors:
            report = V.verify_mulpath([_load(f) for f in args.factors], _req_opt(args, "n"), budget)
        else:
            report = V.verify_mulpath_sweep(
                samples=args.samples or 50,
                seed=args.seed if args.seed is not None else 20108,
                budget=budget,
            )
    elif claim == "hompath":
        if args.input:
            report = V.verify_hompath(_load(args.input), _req_opt(args, "n"), budget)
        else:
            report = V.verify_hompath_sweep(
                samples=args.samples or 50,
                seed=args.seed if args.seed is not None else 20109,
                budget=budget,
            )
    elif claim == "yz-both-ways":
        report = V.verify_yz(_req_opt(args, "n"), _req_opt(args, "k"), budget)
    else:  # pragma: no cover
        raise ConstructionError(f"unknown claim {claim}")
    return _report_out(args, report)


def _req_opt(args, name: str) -> int:
    val = getattr(args, name, None)
    if val is None:
        raise ConstructionError(f"--{name} is required for this claim")
    return val


def _load_req(args, name: str) -> Digraph:
    val = getattr(args, name, None)
    if val is None:
        raise ConstructionError(f"--{name} is required for this claim")
    return _load(val)


def cmd_find_steep_path(args) -> int:
    report = V.verify_steep_path(
        ell=args.ell,
        consequence_samples=args.check_consequence,
        seed=args.seed if args.seed is not None else 20107,
        budget=args.budget,
    )
    if args.json:
        return _report_out(args, report)
    print(report.witnesses["path"])
    print(f"arcs: {report.witnesses['n_arcs']}")
    print(f"[{report.verdict}]")
    return _verdict_exit(report.verdict)


def cmd_h_function(args) -> int:
    result = V.h_function(args.k, args.budget)
    if args.json:
        print(json.dumps(result.to_json_dict(), separators=(",", ":")))
    else:
        for row in result.rows:
            print(f"{row['path']}  chi(dual)={row['chi']}  dual_vertices={row['dual_vertices']}")
        print(f"h({result.k}) = {result.value}  argmin {result.argmin.dirs}")
    return EXIT_PASS


def cmd_verify_all(args) -> int:
    reports = V.run_profile(args.profile, args.workers)
    if args.json:
        print(
            json.dumps(
                [r.to_json_dict(include_timing=args.timings) for r in reports],
                separators=(",", ":"),
            )
        )
    else:
        width = max(len(r.claim) for r in reports)
        for r in reports:
            print(f"{r.claim.ljust(width)}  {r.verdict}  ({r.timing_ms:.0f} ms)")
        n_pass = sum(r.verdict == "PASS" for r in reports)
        print(f"{n_pass}/{len(reports)} PASS")
    if any(r.verdict == "FAIL" for r in reports):
        return EXIT_FAIL
    if any(r.verdict == "INDETERMINATE" for r in reports):
        return EXIT_INDETERMINATE
    return EXIT_PASS


def build_parser() -> _Parser:
    parser = _Parser(prog="digraphlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a graph family or apply a functor")
    p.add_argument(
        "--family",
        required=True,
        choices=[
            "tournament",
            "path",
            "complete",
            "circular",
            "iota",
            "iota-star",
            "arc-graph",
            "dual",
            "product",
            "path-family",
        ],
    )
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--dirs", help="oriented path pattern over +/- (family=path)")
    p.add_argument("--input", help="input digraph JSON file (functor families)")
    p.add_argument("--factors", nargs="+", help="factor files (family=product)")
    p.add_argument("--out", help="write to file instead of stdout")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p.add_argument("--collapse-symmetric", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("hom", help="search for a homomorphism between two graph files")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(fn=cmd_hom)

    p = sub.add_parser("chi", help="exact chromatic number of a graph file")
    p.add_argument("--input", required=True)
    p.add_argument("--limit", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_chi)

    p = sub.add_parser("verify", help="run one claim verifier")
    p.add_argument(
        "--claim",
        required=True,
        choices=[
            "gencol",
            "adjunction",
            "finobs",
            "minty",
            "duality-tree",
            "inadprod",
            "mulpath",
            "hompath",
            "yz-both-ways",
        ],
    )
    p.add_argument("--input")
    p.add_argument("--source")
    p.add_argument("--target")
    p.add_argument("--tree")
    p.add_argument("--factors", nargs="+")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--c", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--max-vertices", type=int, dest="max_vertices")
    p.add_argument("--max-tree-arcs", type=int, dest="max_tree_arcs")
    p.add_argument("--seed", type=int)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true", help="include timing_ms in JSON output")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("find-steep-path", help="search for a path of given level span")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--check-consequence", type=int, default=0, metavar="N",
                   help="also check N random targets of chromatic number >= 4")
    p.add_argument("--seed", type=int)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(fn=cmd_find_steep_path)

    p = sub.add_parser("h-function", help="dual chromatic minima over a reversal family")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_h_function)

    p = sub.add_parser("verify-all", help="run a whole verification profile")
    p.add_argument("--profile", choices=["quick", "full"], default="quick")
    p.add_argument("--workers", type=int, help="worker processes (default: all cores)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(fn=cmd_verify_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ConstructionError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SizeLimitExceeded as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_INDETERMINATE
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
