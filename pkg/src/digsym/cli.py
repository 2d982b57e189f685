"""Command-line front end.

Verbs: group, digraph, check, search, case.  Exit codes: 0 all pass,
1 any check/case failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analyze
from .bounds import DEFAULT_BOUNDS
from .casebook import case_ids, emit_report, run_all, run_case
from .catalog import load_coset_spec_file, load_group_file
from .construct import build_cayley_digraph, build_coset_digraph
from .digraph import direct_product, from_edge_list, to_dot, to_edge_list
from .errors import DigsymError, UnknownCaseError
from .group import point_stabilizer
from .perm import parse_permutation


def _bounds_from_args(args):
    bounds = DEFAULT_BOUNDS
    overrides = {}
    for name in ("subgroup_order", "coset_index", "transporter_nodes",
                 "digraph_vertices", "regular_search_order"):
        value = getattr(args, f"bound_{name}", None)
        if value is not None:
            overrides[name] = value
    return bounds.with_(**overrides) if overrides else bounds


def _add_bound_flags(parser):
    parser.add_argument("--bound-subgroup-order", dest="bound_subgroup_order",
                        type=int, help="subgroup enumeration order limit")
    parser.add_argument("--bound-coset-index", dest="bound_coset_index",
                        type=int, help="coset index limit")
    parser.add_argument("--bound-transporter-nodes", dest="bound_transporter_nodes",
                        type=int, help="transporter search node limit")
    parser.add_argument("--bound-digraph-vertices", dest="bound_digraph_vertices",
                        type=int, help="explicit digraph vertex limit")
    parser.add_argument("--bound-regular-search-order", dest="bound_regular_search_order",
                        type=int, help="regular-subgroup search order limit")


def _emit(args, payload: dict) -> None:
    out = sys.stdout
    if args.out:
        out = open(args.out, "w", encoding="utf-8")
    try:
        if args.format == "json":
            out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        else:
            for key, value in payload.items():
                out.write(f"{key}: {value}\n")
    finally:
        if args.out:
            out.close()


def _write_text(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_group(args) -> int:
    entry = load_group_file(args.group)
    G = entry.group
    payload = {"name": entry.name, "degree": G.degree, "order": str(G.order)}
    if args.orbits:
        payload["orbits"] = str(G.orbits())
        payload["transitive"] = str(G.is_transitive())
        payload["regular"] = str(G.is_regular())
    if args.primitive:
        from .blocks import is_primitive
        payload["primitive"] = str(is_primitive(G))
    if args.stabilizer is not None:
        handle = point_stabilizer(G, args.stabilizer - 1)
        payload[f"stabilizer_of_{args.stabilizer}"] = str(handle.order)
    _emit(args, payload)
    return 0


def _cmd_digraph(args) -> int:
    bounds = _bounds_from_args(args)
    if args.digraph_cmd == "build-coset":
        spec = load_coset_spec_file(args.spec)
        digraph, _ = build_coset_digraph(spec, bounds)
    elif args.digraph_cmd == "build-cayley":
        entry = load_group_file(args.group)
        S = [parse_permutation(t, entry.degree) for t in args.connection]
        digraph, _ = build_cayley_digraph(entry.group, S, bounds)
    elif args.digraph_cmd == "product":
        with open(args.a, "r", encoding="utf-8") as fh:
            a = from_edge_list(fh.read(), bounds)
        with open(args.b, "r", encoding="utf-8") as fh:
            b = from_edge_list(fh.read(), bounds)
        digraph = direct_product(a, b, bounds)
    else:  # export
        with open(args.input, "r", encoding="utf-8") as fh:
            digraph = from_edge_list(fh.read(), bounds)
    text = to_dot(digraph) if args.dot else to_edge_list(digraph)
    _write_text(args, text)
    return 0


def _cmd_check(args) -> int:
    bounds = _bounds_from_args(args)
    if args.check_cmd == "arc-transitivity":
        with open(args.digraph, "r", encoding="utf-8") as fh:
            digraph = from_edge_list(fh.read(), bounds)
        entry = load_group_file(args.group)
        action = analyze.bind_action(digraph, entry.group)
        result = analyze.is_s_arc_transitive(action, args.s, bounds)
        name = f"{args.s}-arc-transitive"
        if result is analyze.VACUOUS:
            _emit(args, {name: "vacuous"})
            return 0
        _emit(args, {name: str(result)})
        return 0 if result else 1
    if args.check_cmd == "criterion":
        spec = load_coset_spec_file(args.spec)
        result = analyze.coset_two_arc_criterion(spec, bounds)
        _emit(args, {"two-arc-criterion": str(result)})
        return 0 if result else 1
    # lemma22
    spec = load_coset_spec_file(args.spec)
    digraph, group = build_coset_digraph(spec, bounds)
    action = analyze.bind_action(digraph, group)
    from .cosets import CosetAction
    act = CosetAction(spec.G, spec.H, bounds=bounds)
    u = act.label_of(spec.g.inverse())
    w = act.label_of(spec.g)
    data = analyze.two_arc_stabilizer_data(action, (u, 0, w), bounds)
    report = analyze.verify_lemma_prime_factn(action, data, bounds)
    if not report.applicable:
        _emit(args, {"lemma22": "not-applicable", "reason": report.reason})
        return 0
    payload = {
        "clause_a": report.clause_a.status,
        "clause_b": report.clause_b.status,
        "clause_c": report.clause_c.status,
    }
    _emit(args, payload)
    return 0 if report.all_pass else 1


def _cmd_search(args) -> int:
    bounds = _bounds_from_args(args)
    entry = load_group_file(args.group)
    witness = analyze.find_regular_subgroup(entry.group, bounds)
    if witness is None:
        _emit(args, {"regular-subgroup": "none"})
        return 0
    payload = {
        "regular-subgroup": "found",
        "order": str(witness.order),
        "generators": str([g.cycle_string() for g in witness.generators]),
    }
    _emit(args, payload)
    return 0


def _cmd_case(args) -> int:
    bounds = _bounds_from_args(args)
    if args.case_cmd == "list":
        for cid in case_ids():
            sys.stdout.write(cid + "\n")
        return 0
    if args.case_cmd == "run":
        try:
            results = [run_case(args.case_id, bounds)]
        except UnknownCaseError:
            sys.stderr.write(f"unknown case id: {args.case_id}\n")
            return 2
    else:
        results = run_all(bounds)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            emit_report(results, fh)
    else:
        emit_report(results, sys.stdout)
    for result in results:
        sys.stderr.write(
            f"{result.case_id}: "
            f"{'FAIL' if result.failed else 'ok'} "
            f"({len(result.claims)} claims, {result.elapsed:.2f}s)\n")
    return 1 if any(r.failed for r in results) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="digsym",
        description="permutation groups, coset/Cayley digraphs, symmetry checks")
    parser.add_argument("--format", choices=("json", "text"), default="text")
    parser.add_argument("--out", help="write output to a file")
    _add_bound_flags(parser)
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_group = sub.add_parser("group", help="inspect a group file")
    p_group.add_argument("group", help="group JSON file")
    p_group.add_argument("--orbits", action="store_true")
    p_group.add_argument("--primitive", action="store_true")
    p_group.add_argument("--stabilizer", type=int, metavar="POINT",
                         help="1-based point whose stabilizer order to print")
    p_group.set_defaults(func=_cmd_group)

    p_dig = sub.add_parser("digraph", help="build and export digraphs")
    dig_sub = p_dig.add_subparsers(dest="digraph_cmd", required=True)
    p_coset = dig_sub.add_parser("build-coset")
    p_coset.add_argument("--spec", required=True, help="coset spec JSON file")
    p_cayley = dig_sub.add_parser("build-cayley")
    p_cayley.add_argument("--group", required=True)
    p_cayley.add_argument("--connection", nargs="+", required=True,
                          metavar="CYCLES")
    p_prod = dig_sub.add_parser("product")
    p_prod.add_argument("--a", required=True, help="edge-list file")
    p_prod.add_argument("--b", required=True, help="edge-list file")
    p_export = dig_sub.add_parser("export")
    p_export.add_argument("--input", required=True, help="edge-list file")
    for p in (p_coset, p_cayley, p_prod, p_export):
        p.add_argument("--dot", action="store_true", help="emit DOT format")
        p.set_defaults(func=_cmd_digraph)

    p_check = sub.add_parser("check", help="transitivity and lemma checks")
    check_sub = p_check.add_subparsers(dest="check_cmd", required=True)
    p_arc = check_sub.add_parser("arc-transitivity")
    p_arc.add_argument("--digraph", required=True, help="edge-list file")
    p_arc.add_argument("--group", required=True, help="group JSON file")
    p_arc.add_argument("--s", type=int, required=True)
    p_lem = check_sub.add_parser("lemma22")
    p_lem.add_argument("--spec", required=True, help="coset spec JSON file")
    p_crit = check_sub.add_parser("criterion")
    p_crit.add_argument("--spec", required=True, help="coset spec JSON file")
    for p in (p_arc, p_lem, p_crit):
        p.set_defaults(func=_cmd_check)

    p_search = sub.add_parser("search", help="regular-subgroup search")
    search_sub = p_search.add_subparsers(dest="search_cmd", required=True)
    p_reg = search_sub.add_parser("regular-subgroup")
    p_reg.add_argument("--group", required=True)
    p_reg.set_defaults(func=_cmd_search)

    p_case = sub.add_parser("case", help="run registered casebook entries")
    case_sub = p_case.add_subparsers(dest="case_cmd", required=True)
    p_run = case_sub.add_parser("run")
    p_run.add_argument("case_id")
    p_run.set_defaults(func=_cmd_case)
    p_list = case_sub.add_parser("list")
    p_list.set_defaults(func=_cmd_case)
    p_all = case_sub.add_parser("run-all")
    p_all.set_defaults(func=_cmd_case)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UnknownCaseError as exc:
        sys.stderr.write(f"unknown case id: {exc}\n")
        return 2
    except (DigsymError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
