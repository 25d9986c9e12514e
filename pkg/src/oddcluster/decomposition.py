"""Tree-decompositions: validity checking, exact treewidth, min-fill heuristic.

Exact treewidth runs iterative deepening over elimination orders: for a
candidate width k it searches for an order eliminating every vertex with
(filled) degree at most k, memoizing failed eliminated-sets.  The filled
graph after eliminating a set is independent of the order, so the
eliminated-set is a sound state key.  Decompositions are normalized to a
rooted tree with node 0 as root and children ordered by minimum bag element.
"""

from collections import deque

from .errors import ResourceLimitError
from .graph import Graph, RootedTree

EXACT_TREEWIDTH_CAP = 18


class TreeDecomposition:
    """Tree of bags over a host graph; width = max bag size - 1."""

    __slots__ = ("tree", "bags", "width")

    def __init__(self, tree, bags):
        self.tree = tree
        self.bags = tuple(tuple(sorted(b)) for b in bags)
        self.width = max((len(b) for b in self.bags), default=0) - 1

    @property
    def num_nodes(self):
        return len(self.bags)

    def node_edges(self):
        return self.tree.edges()

    def __repr__(self):
        return f"TreeDecomposition(nodes={self.num_nodes}, width={self.width})"


def validate_decomposition(g, dec):
    """Check the three decomposition conditions; returns (ok, first violation)."""
    nodes = set(range(dec.num_nodes))
    if dec.tree.vertices() != nodes:
        return False, "decomposition tree nodes do not match bag indices"
    for b in dec.bags:
        for v in b:
            if not 0 <= v < g.n:
                return False, f"bag contains invalid vertex {v}"
    for a, b in g.edges:
        if not any(a in bag and b in bag for bag in dec.bags):
            return False, f"edge ({a},{b}) not covered by any bag"
    tree_adj = {x: set() for x in nodes}
    for x, y in dec.tree.edges():
        tree_adj[x].add(y)
        tree_adj[y].add(x)
    for v in range(g.n):
        trace = [x for x in nodes if v in dec.bags[x]]
        if not trace:
            return False, f"vertex {v} appears in no bag"
        seen = {trace[0]}
        queue = deque([trace[0]])
        trace_set = set(trace)
        while queue:
            x = queue.popleft()
            for y in tree_adj[x] & trace_set:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        if seen != trace_set:
            return False, f"bags containing vertex {v} are not connected in the tree"
    recomputed = max((len(b) for b in dec.bags), default=0) - 1
    if dec.width != recomputed:
        return False, f"stored width {dec.width} != recomputed {recomputed}"
    return True, None


def _reach_through(adj, v, eliminated):
    """Vertices outside ``eliminated`` reachable from v via eliminated vertices.

    This is exactly v's neighbourhood in the filled graph after eliminating
    the set, regardless of the order of elimination.
    """
    seen = {v}
    out = set()
    stack = [v]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y in seen:
                continue
            seen.add(y)
            if y in eliminated:
                stack.append(y)
            else:
                out.add(y)
    return out


def _min_fill_order(g):
    adj = [set(s) for s in g.adj]
    alive = set(range(g.n))
    order = []
    while alive:
        best = min(
            alive,
            key=lambda v: (
                sum(1 for a in adj[v] for b in adj[v] if a < b and b not in adj[a]),
                v,
            ),
        )
        for a in adj[best]:
            for b in adj[best]:
                if a != b:
                    adj[a].add(b)
        for a in adj[best]:
            adj[a].discard(best)
        alive.remove(best)
        order.append(best)
    return order


def _degeneracy_lower_bound(g):
    """Max over the peeling process of the minimum degree (MMD lower bound)."""
    adj = [set(s) for s in g.adj]
    alive = set(range(g.n))
    lb = 0
    while alive:
        v = min(alive, key=lambda x: (len(adj[x]), x))
        lb = max(lb, len(adj[v]))
        for u in adj[v]:
            adj[u].discard(v)
        alive.remove(v)
    return lb


def _order_width(g, order):
    eliminated = set()
    width = 0
    for v in order:
        width = max(width, len(_reach_through(g.adj, v, eliminated)))
        eliminated.add(v)
    return width


def _find_order_within(g, k):
    """Elimination order with every filled degree <= k, or None.

    Depth-first search over eliminated-sets with a dead-state memo.  A vertex
    whose filled neighbourhood is a clique (simplicial) can always be
    eliminated first, which collapses the search on chordal-ish inputs.
    """
    adj = g.adj
    full = frozenset(range(g.n))
    dead = set()

    def filled_clique(nbrs, eliminated):
        for a in nbrs:
            reach_a = _reach_through(adj, a, eliminated)
            if not nbrs - {a} <= reach_a:
                return False
        return True

    def search(eliminated, order):
        if len(eliminated) == g.n:
            return True
        key = frozenset(eliminated)
        if key in dead:
            return False
        candidates = []
        for v in sorted(full - eliminated):
            nbrs = _reach_through(adj, v, eliminated)
            if len(nbrs) > k:
                continue
            candidates.append((v, nbrs))
            if len(nbrs) <= 1 or filled_clique(nbrs, eliminated):
                # safe to commit without branching
                eliminated.add(v)
                order.append(v)
                if search(eliminated, order):
                    return True
                eliminated.discard(v)
                order.pop()
                dead.add(key)
                return False
        for v, _ in candidates:
            eliminated.add(v)
            order.append(v)
            if search(eliminated, order):
                return True
            eliminated.discard(v)
            order.pop()
        dead.add(key)
        return False

    order = []
    if search(set(), order):
        return order
    return None


def decomposition_from_order(g, order):
    """Build a normalized decomposition from an elimination order."""
    if g.n == 0:
        return TreeDecomposition(RootedTree(parent={}, roots=(0,)), [()])
    eliminated = set()
    bags = []
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        bags.append({v} | _reach_through(g.adj, v, eliminated))
        eliminated.add(v)
    parent = {}
    for i, v in enumerate(order[:-1]):
        later = [u for u in bags[i] if u != v]
        if later:
            parent[i] = pos[min(later, key=lambda u: pos[u])]
        else:
            parent[i] = i + 1  # keep the tree connected for isolated pieces
    tree = RootedTree(parent=parent, roots=(len(order) - 1,))
    return _normalize(tree, bags)


def _normalize(tree, bags):
    """Re-root at node 0 (BFS relabelling, children by minimum bag element)."""
    children = tree.children()
    root = tree.roots[0]
    relabel = {root: 0}
    queue = deque([root])
    order = [root]
    while queue:
        x = queue.popleft()
        kids = sorted(children[x], key=lambda y: (min(bags[y]) if bags[y] else -1, y))
        for y in kids:
            relabel[y] = len(relabel)
            order.append(y)
            queue.append(y)
    new_bags = [bags[x] for x in order]
    new_parent = {relabel[c]: relabel[p] for c, p in tree.parent.items()}
    return TreeDecomposition(RootedTree(parent=new_parent, roots=(0,)), new_bags)


def exact_treewidth(g, cap=EXACT_TREEWIDTH_CAP):
    """Minimum-width tree-decomposition via iterative deepening on width."""
    if g.n > cap:
        raise ResourceLimitError(f"exact treewidth capped at {cap} vertices, got {g.n}")
    if g.n == 0:
        return -1, decomposition_from_order(g, [])
    mf_order = _min_fill_order(g)
    ub = _order_width(g, mf_order)
    lb = _degeneracy_lower_bound(g)
    if lb >= ub:
        return ub, decomposition_from_order(g, mf_order)
    for k in range(lb, ub):
        order = _find_order_within(g, k)
        if order is not None:
            return k, decomposition_from_order(g, order)
    return ub, decomposition_from_order(g, mf_order)


def heuristic_decomposition(g):
    """Valid decomposition from a min-fill elimination order (width >= tw)."""
    return decomposition_from_order(g, _min_fill_order(g))


def restrict_decomposition(dec, old_to_new):
    """Restrict bags to the domain of ``old_to_new`` and relabel vertices.

    The tree shape is unchanged, so traces stay connected and every edge of
    the induced subgraph stays covered; the width can only shrink.
    """
    bags = [
        tuple(sorted(old_to_new[v] for v in bag if v in old_to_new)) for bag in dec.bags
    ]
    return TreeDecomposition(dec.tree, bags)


def trivial_decomposition(g):
    """Single bag holding all of V(G)."""
    return TreeDecomposition(RootedTree(parent={}, roots=(0,)), [tuple(range(g.n))])


def subtree_bag_unions(dec):
    """For each node, the union of bags in its rooted subtree."""
    children = dec.tree.children()
    out = [None] * dec.num_nodes
    post = postorder(dec)
    for x in post:
        acc = set(dec.bags[x])
        for c in children[x]:
            acc |= out[c]
        out[x] = acc
    return out


def postorder(dec):
    """Post-order traversal of the normalized decomposition tree."""
    children = dec.tree.children()
    out = []

    def rec(x):
        for c in children[x]:
            rec(c)
        out.append(x)

    rec(dec.tree.roots[0])
    return out
