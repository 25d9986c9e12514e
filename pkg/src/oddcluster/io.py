"""File formats: edge-list graphs, partitions, and JSON result schemas.

Graph files: first significant line ``p <n> <m>``, then m lines ``<u> <v>``
with 0-based indices; ``#`` starts a comment.  Partition files: one line of
``r``/``b`` characters, index-aligned with the vertices.
"""

from .errors import ParseError
from .graph import Graph, RootedTree
from .decomposition import TreeDecomposition
from .oddmodel import Model, Witness
from .colouring import OddModelCertificate
from .treedepth import u_graph


def parse_graph(text):
    n = m = None
    edges = []
    expected = 0
    for lineno, rawline in enumerate(text.splitlines(), start=1):
        line = rawline.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "p" or len(parts) != 3:
                raise ParseError(lineno, f"expected header 'p <n> <m>', got {line!r}")
            try:
                n, expected = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(lineno, "header counts must be integers") from None
            continue
        if len(parts) != 2:
            raise ParseError(lineno, f"expected edge '<u> <v>', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, "edge endpoints must be integers") from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(lineno, f"invalid edge ({u},{v}) for n={n}")
        edges.append((u, v))
    if n is None:
        raise ParseError(1, "missing 'p <n> <m>' header")
    if len(edges) != expected:
        raise ParseError(1, f"header promises {expected} edges, file has {len(edges)}")
    return Graph(n, edges)


def serialize_graph(g):
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"{a} {b}" for a, b in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_partition(text, n):
    for lineno, rawline in enumerate(text.splitlines(), start=1):
        line = rawline.split("#", 1)[0].strip()
        if not line:
            continue
        if len(line) != n:
            raise ParseError(lineno, f"partition has {len(line)} entries, graph has {n}")
        if set(line) - {"r", "b"}:
            raise ParseError(lineno, "partition may only contain 'r' and 'b'")
        return list(line)
    raise ParseError(1, "empty partition file")


def forest_to_json(tree):
    verts = sorted(tree.vertices())
    parent = [tree.parent.get(v, -1) for v in verts]
    return {"parent": parent, "roots": list(tree.roots), "vertex_height": tree.vertex_height()}


def colouring_to_json(g, colouring, budgets=None):
    out = {
        "colours": [colouring.colour[v] for v in range(g.n)],
        "num_colours": colouring.num_colours,
        "max_cluster": colouring.max_cluster,
    }
    if budgets is not None:
        out["budgets"] = {"colours": budgets.colours, "clustering": budgets.clustering}
    return out


def certificate_to_json(cert):
    pattern_n = cert.model.pattern.n
    return {
        "h": cert.h,
        "d": cert.d,
        "branch_sets": [list(cert.model.branch_sets[x]) for x in range(pattern_n)],
        "tree_edges": [
            [list(e) for e in cert.model.branch_trees[x]] for x in range(pattern_n)
        ],
        "witness": {str(v): c for v, c in sorted(cert.witness.colour.items())},
    }


def certificate_from_json(data):
    h, d = int(data["h"]), int(data["d"])
    pattern = u_graph(h, d)
    branch_sets = {x: tuple(bs) for x, bs in enumerate(data["branch_sets"])}
    branch_trees = {
        x: tuple(tuple(e) for e in te) for x, te in enumerate(data["tree_edges"])
    }
    witness = Witness(colour={int(v): c for v, c in data["witness"].items()})
    model = Model(pattern=pattern, branch_sets=branch_sets, branch_trees=branch_trees)
    return OddModelCertificate(h=h, d=d, model=model, witness=witness)


def decomposition_to_json(dec):
    return {
        "nodes": dec.num_nodes,
        "edges": [list(e) for e in dec.node_edges()],
        "bags": [list(b) for b in dec.bags],
        "width": dec.width,
    }


def decomposition_from_json(data):
    nodes = int(data["nodes"])
    adj = {x: set() for x in range(nodes)}
    for a, b in data["edges"]:
        adj[a].add(b)
        adj[b].add(a)
    parent = {}
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                parent[y] = x
                stack.append(y)
    if len(seen) != nodes:
        raise ValueError("decomposition tree is not connected")
    tree = RootedTree(parent=parent, roots=(0,))
    return TreeDecomposition(tree, [tuple(b) for b in data["bags"]])
