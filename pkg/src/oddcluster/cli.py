"""Command-line interface.

Exit codes: 0 success/found, 1 not-found or verification failure,
2 resource/parse error, 3 certificate arm of `colour`/`pipeline`.
"""

import argparse
import json
import os
import sys

from .colouring import (
    Budgets,
    OddModelCertificate,
    colour_bounded_tw,
    colour_pipeline,
)
from .decomposition import (
    EXACT_TREEWIDTH_CAP,
    exact_treewidth,
    heuristic_decomposition,
    validate_decomposition,
)
from .errors import OddClusterError, ParseError, ResourceLimitError
from .generators import (
    complete_graph,
    cycle_graph,
    random_partial_ktree,
    star_graph,
)
from .io import (
    certificate_from_json,
    certificate_to_json,
    colouring_to_json,
    decomposition_from_json,
    decomposition_to_json,
    forest_to_json,
    parse_graph,
    parse_partition,
    serialize_graph,
)
from .oddmodel import FIND_MODEL_CAP, find_odd_model, is_nontrivial, verify_model, verify_odd_witness
from .oracles import verify_colouring
from .treedepth import connected_tree_depth, tree_depth, u_graph

EXIT_OK = 0
EXIT_NOT_FOUND = 1
EXIT_RESOURCE = 2
EXIT_CERTIFICATE = 3


def _default_cap():
    cap = os.environ.get("ODDCLUSTER_CAP")
    return int(cap) if cap else FIND_MODEL_CAP


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load_graph(path):
    return parse_graph(_read(path))


def _emit(obj):
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_gen(args):
    if args.family == "u":
        g = u_graph(args.h, args.d)
    elif args.family == "partial-ktree":
        g = random_partial_ktree(args.n, args.k, args.seed, edge_keep=args.edge_keep)
    elif args.family == "cycle":
        g = cycle_graph(args.n)
    elif args.family == "complete":
        g = complete_graph(args.n)
    else:
        g = star_graph(args.n)
    sys.stdout.write(serialize_graph(g))
    return EXIT_OK


def cmd_metric(args):
    g = _load_graph(args.graph)
    if args.metric == "td":
        value, witness = tree_depth(g, cap=args.cap or 20)
        _emit({"metric": "td", "value": value, "witness": forest_to_json(witness)})
    elif args.metric == "ctd":
        value, witness = connected_tree_depth(g, cap=args.cap or 20)
        _emit({"metric": "ctd", "value": value, "witness": forest_to_json(witness)})
    else:
        width, dec = exact_treewidth(g, cap=args.cap or EXACT_TREEWIDTH_CAP)
        _emit({"metric": "tw", "value": width, "witness": decomposition_to_json(dec)})
    return EXIT_OK


def cmd_odd_minor(args):
    g = _load_graph(args.graph)
    h = _load_graph(args.pattern)
    found = find_odd_model(
        g, h, require_nontrivial=args.nontrivial, cap=args.cap or _default_cap()
    )
    if found is None:
        _emit({"found": False})
        return EXIT_NOT_FOUND
    model, witness = found
    _emit(
        {
            "found": True,
            "branch_sets": [list(model.branch_sets[x]) for x in range(h.n)],
            "tree_edges": [
                [list(e) for e in model.branch_trees[x]] for x in range(h.n)
            ],
            "witness": {str(v): c for v, c in sorted(witness.colour.items())},
        }
    )
    return EXIT_OK


def _load_decomposition(g, path):
    dec = decomposition_from_json(json.loads(_read(path)))
    ok, why = validate_decomposition(g, dec)
    if not ok:
        raise OddClusterError(f"supplied decomposition is invalid: {why}")
    return dec


def cmd_colour(args):
    g = _load_graph(args.graph)
    if args.decomposition:
        dec = _load_decomposition(g, args.decomposition)
    elif g.n <= EXACT_TREEWIDTH_CAP:
        dec = exact_treewidth(g)[1]
    else:
        dec = heuristic_decomposition(g)
    out = colour_bounded_tw(g, args.h, args.d, dec, cap=args.cap or _default_cap())
    if isinstance(out, OddModelCertificate):
        _emit(certificate_to_json(out))
        return EXIT_CERTIFICATE
    budgets = Budgets(h=args.h, d=args.d, w=max(dec.width, 0))
    _emit(colouring_to_json(g, out, budgets))
    return EXIT_OK


def cmd_pipeline(args):
    g = _load_graph(args.graph)
    h = _load_graph(args.pattern)
    partition = None
    if args.partition:
        partition = parse_partition(_read(args.partition), g.n)
    out = colour_pipeline(g, h, partition, cap=args.cap or _default_cap())
    if isinstance(out, OddModelCertificate):
        _emit(certificate_to_json(out))
        return EXIT_CERTIFICATE
    _emit(colouring_to_json(g, out))
    return EXIT_OK


def cmd_verify(args):
    g = _load_graph(args.graph)
    if args.what == "model":
        cert = certificate_from_json(json.loads(_read(args.artifact)))
        ok, why = verify_model(g, cert.model)
        if ok:
            ok, why = verify_odd_witness(g, cert.model, cert.witness)
        if ok and not is_nontrivial(cert.model):
            ok, why = False, "model is trivial (a branch set has fewer than 2 vertices)"
    elif args.what == "decomposition":
        data = json.loads(_read(args.artifact))
        dec = decomposition_from_json(data)
        ok, why = validate_decomposition(g, dec)
        if ok and int(data.get("width", dec.width)) != dec.width:
            ok, why = False, f"stored width {data['width']} != recomputed {dec.width}"
    else:
        data = json.loads(_read(args.artifact))
        from .colouring import make_colouring

        colouring = make_colouring(g, dict(enumerate(data["colours"])))
        max_colours = args.max_colours
        max_cluster = args.max_cluster
        if max_colours is None:
            max_colours = data.get("budgets", {}).get("colours", colouring.num_colours)
        if max_cluster is None:
            max_cluster = data.get("budgets", {}).get("clustering", colouring.max_cluster)
        ok, why = verify_colouring(g, colouring, max_colours, max_cluster)
    _emit({"ok": ok, "violation": why})
    return EXIT_OK if ok else EXIT_NOT_FOUND


def build_parser():
    parser = argparse.ArgumentParser(
        prog="oddcluster",
        description="Clustered colouring under excluded odd minors: metrics, "
        "model search, colouring runs and certificate verification.",
    )
    parser.add_argument("--cap", type=int, default=None, help="override search caps")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph as an edge list")
    gensub = p.add_subparsers(dest="family", required=True)
    pu = gensub.add_parser("u")
    pu.add_argument("--h", type=int, required=True)
    pu.add_argument("--d", type=int, required=True)
    pk = gensub.add_parser("partial-ktree")
    pk.add_argument("--n", type=int, required=True)
    pk.add_argument("--k", type=int, required=True)
    pk.add_argument("--seed", type=int, required=True)
    pk.add_argument("--edge-keep", type=float, default=0.8)
    for fam in ("cycle", "complete", "star"):
        pf = gensub.add_parser(fam)
        pf.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("metric", help="tree-depth, connected tree-depth or treewidth")
    p.add_argument("metric", choices=["td", "ctd", "tw"])
    p.add_argument("graph")
    p.set_defaults(func=cmd_metric)

    p = sub.add_parser("odd-minor", help="search for an odd pattern-model")
    p.add_argument("graph")
    p.add_argument("pattern")
    p.add_argument("--nontrivial", action="store_true")
    p.set_defaults(func=cmd_odd_minor)

    p = sub.add_parser("colour", help="clustered colouring or U_{h,d} certificate")
    p.add_argument("graph")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--decomposition", default=None)
    p.set_defaults(func=cmd_colour)

    p = sub.add_parser("pipeline", help="full run against an excluded pattern H")
    p.add_argument("graph")
    p.add_argument("pattern")
    p.add_argument("--partition", default=None)
    p.set_defaults(func=cmd_pipeline)

    p = sub.add_parser("verify", help="check a colouring/model/decomposition artifact")
    p.add_argument("what", choices=["colouring", "model", "decomposition"])
    p.add_argument("graph")
    p.add_argument("artifact")
    p.add_argument("--max-colours", type=int, default=None)
    p.add_argument("--max-cluster", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OddClusterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
