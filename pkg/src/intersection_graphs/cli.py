"""Command-line front end.

Exit codes: 0 computed or verified, 1 claim refuted, 2 operational error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .certify import (DATA_DIR, DISTANCE_4, WitnessError, is_theorem2_prime, load_witness, distance_class,
                      verify_theorem2_pair)
from .chain import DEFAULT_ELEMENT_BUDGET, BudgetExceeded, build_chain
from .graph import build_graph, diam2_criterion, diameter, prime_reduction_check
from .lattice import DEFAULT_GROUP_BUDGET, DEFAULT_LATTICE_BUDGET, _is_prime, all_subgroups, catalog
from .perm import CycleParseError

EXIT_OK, EXIT_REFUTED, EXIT_ERROR = 0, 1, 2


def _resolve(path: str) -> Path:
    p = Path(path)
    if p.exists():
        return p
    shipped = DATA_DIR / p.name
    if shipped.exists():
        return shipped
    if (DATA_DIR / f"{p.name}.json").exists():
        return DATA_DIR / f"{p.name}.json"
    raise FileNotFoundError(path)


def _parse_catalog(tokens: list[str]):
    name, _, params = tokens[0].partition(":")
    if name == "direct_product":
        factors = tokens[1:] if not params else params.split("+")
        return catalog("direct_product", factors)
    args = [int(x) for x in params.split(",")] if params else []
    if len(tokens) > 1:
        raise ValueError(f"unexpected arguments {tokens[1:]} for {name}")
    return catalog(name, *args)


def _group(args):
    if args.catalog:
        return _parse_catalog(args.catalog)
    return catalog("from_file", _resolve(args.file))


def _emit(args, human: list[str], data: dict):
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print("\n".join(human))


def cmd_order(args) -> int:
    g = _group(args)
    c = build_chain(g)
    _emit(args, [str(c.order)], {"group": g.label, "degree": g.degree, "order": c.order,
                                 "base": [b + 1 for b in c.base], "orbit_sizes": c.orbit_sizes})
    return EXIT_OK


def cmd_diameter(args) -> int:
    g = _group(args)
    s = all_subgroups(g, args.budget_group, args.budget_lattice)
    graph = build_graph(s)
    d = diameter(graph)
    _emit(args, [str(d), f"vertices: {graph.n_vertices}", f"edges: {graph.n_edges}"],
          {"group": g.label, "order": s.order, "diameter": d,
           "vertices": graph.n_vertices, "edges": graph.n_edges})
    if args.export:
        graph.export(args.export)
    return EXIT_OK


def cmd_diam2(args) -> int:
    g = _group(args)
    crit = diam2_criterion(g, budget=args.budget_elements)
    data = {"group": g.label, "criterion": crit, "diameter": None, "degenerate": None, "notes": []}
    human = [f"no generating pair of prime-order elements: {crit}"]
    try:
        graph = build_graph(all_subgroups(g, args.budget_group, args.budget_lattice))
    except BudgetExceeded as exc:
        human.append(f"diameter: not computed ({exc})")
        data["notes"].append(str(exc))
    else:
        rep = prime_reduction_check(graph)
        data.update(diameter=rep.diameter, degenerate=rep.degenerate, prime_max_distance=rep.prime_max_distance)
        data["notes"].extend(rep.notes)
        human.append(f"diameter: {rep.diameter}")
        human.append(f"max distance between prime-order vertices: {rep.prime_max_distance}")
        if rep.degenerate or graph.is_complete():
            flag = "degenerate: " + ("; ".join(rep.notes) if rep.notes else "complete graph")
            human.append(flag)
            data["degenerate"] = True
    _emit(args, human, data)
    return EXIT_OK


def cmd_certify(args) -> int:
    w = load_witness(_resolve(args.witness))
    cert = distance_class(w, budget=args.budget_elements, threads=args.threads)
    if args.format == "json":
        print(json.dumps(cert.to_dict(timings=not args.no_timings), indent=2))
    else:
        if args.no_timings:
            cert.timings = {}
        print(cert.render())
    return EXIT_OK if cert.verified else EXIT_REFUTED


def cmd_thm2(args) -> int:
    n = args.n
    if not _is_prime(n) or n < 5:
        raise ValueError(f"{n} is not a prime >= 5")
    adm = is_theorem2_prime(n)
    cert = verify_theorem2_pair(n, budget=args.budget_elements)
    if args.format == "json":
        print(json.dumps({"n": n, "admissible": adm.admissible, "reason": adm.reason,
                          "representations": adm.representations,
                          "certificate": cert.to_dict(timings=not args.no_timings)}, indent=2))
    else:
        if args.no_timings:
            cert.timings = {}
        print(f"n = {n}: {'admissible' if adm else 'inadmissible'} ({adm.reason})")
        print(cert.render())
    return EXIT_OK if cert.conclusion == DISTANCE_4 and not cert.failed else EXIT_REFUTED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="intersection-graphs",
                                     description="Intersection graphs of subgroups of permutation groups")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget-elements", type=int, default=DEFAULT_ELEMENT_BUDGET)
    common.add_argument("--budget-lattice", type=int, default=DEFAULT_LATTICE_BUDGET)
    common.add_argument("--budget-group", type=int, default=DEFAULT_GROUP_BUDGET,
                        help="largest group order for full subgroup enumeration")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--format", choices=["human", "json"], default="human")
    common.add_argument("--no-timings", action="store_true", help="omit wall-clock timings")

    source = argparse.ArgumentParser(add_help=False)
    grp = source.add_mutually_exclusive_group(required=True)
    grp.add_argument("--catalog", nargs="+", metavar="NAME[:PARAMS]",
                     help="e.g. alternating:5, quaternion8, direct_product cyclic:2 cyclic:2")
    grp.add_argument("--file", help="group file (JSON with degree, generators, label)")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("order", parents=[common, source], help="group order").set_defaults(func=cmd_order)
    p = sub.add_parser("diameter", parents=[common, source], help="diameter of the intersection graph")
    p.add_argument("--export", help="write the adjacency list to this JSON file")
    p.set_defaults(func=cmd_diameter)
    sub.add_parser("diam2", parents=[common, source],
                   help="generating-pair criterion for diameter 2").set_defaults(func=cmd_diam2)
    p = sub.add_parser("certify", parents=[common], help="check a witness file")
    p.add_argument("witness")
    p.set_defaults(func=cmd_certify)
    p = sub.add_parser("thm2", parents=[common], help="prime-degree normalizer pair for A_n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_thm2)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for name in ("budget_elements", "budget_lattice", "budget_group", "threads"):
        if getattr(args, name) < 1:
            print(f"error: --{name.replace('_', '-')} must be positive", file=sys.stderr)
            return EXIT_ERROR
    try:
        return args.func(args)
    except (BudgetExceeded, CycleParseError, WitnessError, ValueError, FileNotFoundError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
