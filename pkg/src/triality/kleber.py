"""Kleber trees of type D4 and the virtual Kleber algorithm for D4^(3).

Nodes carry dominant D4 weights (fundamental weight basis).  Edge labels
are elements of the positive root lattice written in the simple root basis.
Every level increment is added to every node already present, so a
finished tree stores the final weights.

Monotonicity along a path is the non-strict version: the label of the
edge into a child must be componentwise at most the label of the edge
into its parent.  The strict reading drops rows of equal length.
"""
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product

import networkx as nx

from . import core
from .core import D4, G2
from .rc import RC, _vacancy, canon

# folding orbits: G2 node -> D4 nodes
ORBITS = {1: (2,), 2: (1, 3, 4)}


@dataclass
class KleberNode:
    weight: tuple
    depth: int
    label: tuple = None  # d from the parent, in the simple root basis
    parent: "KleberNode" = None
    children: list = field(default_factory=list)

    def path(self):
        out = []
        x = self
        while x is not None:
            out.append(x)
            x = x.parent
        return out[::-1]


@dataclass
class KleberTree:
    root: KleberNode
    factors: tuple
    cartan: core.CartanData
    nodes: list

    def increment(self, level):
        """sum_a Lambda_a sum_{j >= level} L_j^(a)."""
        w = [0] * self.cartan.rank
        for r, s in self.factors:
            if s >= level:
                w[self.cartan.index(r)] += 1
        return tuple(w)

    def configuration(self, node):
        """Partitions nu^(a) read off the edge labels along the path to ``node``."""
        labels = [n.label for n in node.path()[1:]]
        shapes = []
        for k in range(self.cartan.rank):
            cols = [d[k] for d in labels]  # cols[i-1] = number of rows of length >= i
            rows = []
            for i, c in enumerate(cols, start=1):
                nxt = cols[i] if i < len(cols) else 0
                rows += [i] * (c - nxt)
            shapes.append(tuple(sorted(rows, reverse=True)))
        return tuple(shapes)

    def kleber_vacancy(self, node, a, i):
        """p_i^(a) from the tree: (alpha_a | lambda^(i)) - sum_{j>i} (j-i) L_j^(a)."""
        path = node.path()
        lam = (path[i] if i < len(path) else node).weight
        corr = sum(s - i for r, s in self.factors if r == a and s > i)
        return lam[self.cartan.index(a)] - corr

    def to_graph(self):
        g = nx.DiGraph()
        for k, n in enumerate(self.nodes):
            g.add_node(k, weight=n.weight, depth=n.depth)
        ids = {id(n): k for k, n in enumerate(self.nodes)}
        for n in self.nodes:
            if n.parent is not None:
                g.add_edge(ids[id(n.parent)], ids[id(n)], label=n.label)
        return g


def _root_bound(cartan, w):
    """Largest root-lattice coefficients a dominant y below w can leave behind."""
    return tuple(int(x // 1) for x in core.weight_to_roots(cartan, w))


def _from_roots(cartan, d):
    w = core.zero_weight(cartan)
    for k, a in enumerate(cartan.nodes):
        w = core.sub(w, core.scale(d[k], core.simple_root(cartan, a)))
    return w  # = -sum d_k alpha_k


def kleber_tree(factors, cartan=D4, accept=None):
    """Kleber tree for the tensor product of KR crystals B^{r,s} listed in ``factors``.

    ``accept(y)`` can veto children; the virtual algorithm uses it for its symmetry condition.
    """
    factors = tuple(tuple(f) for f in factors)
    for r, s in factors:
        cartan.index(r)
        if s < 1:
            raise ValueError(f"bad factor B^({r},{s})")
    root = KleberNode(core.zero_weight(cartan), 0)
    tree = KleberTree(root, factors, cartan, [root])
    top = max((s for _, s in factors), default=0)
    level = 1
    frontier = [root]
    while True:
        inc = tree.increment(level)
        for n in tree.nodes:
            n.weight = core.add(n.weight, inc)
        new = []
        for x in frontier:
            bound = x.label if x.label is not None else _root_bound(cartan, x.weight)
            for d in product(*(range(b + 1) for b in bound)):
                if not any(d):
                    continue
                y = core.add(x.weight, _from_roots(cartan, d))
                if not core.is_dominant(y):
                    continue
                if accept is not None and not accept(y):
                    continue
                child = KleberNode(y, level, d, x)
                x.children.append(child)
                new.append(child)
        tree.nodes.extend(new)
        if not new and level > top:
            break
        frontier = new
        level += 1
    return tree


def tree_configurations(tree):
    """(node, shapes, vacancy table) for every node, with the Kleber vacancy cross-check."""
    out = []
    for n in tree.nodes:
        shapes = tree.configuration(n)
        for k, a in enumerate(tree.cartan.nodes):
            for i in set(shapes[k]):
                p = _vacancy(tree.cartan, tree.factors, shapes, a, i)
                assert p == tree.kleber_vacancy(n, a, i), (n, a, i)
        out.append((n, shapes))
    return out


def highest_weight_rcs(tree):
    """All highest weight rigged configurations of the (simply-laced) tree."""
    out = []
    for _, shapes in tree_configurations(tree):
        out.extend(_riggings(tree.cartan, tree.factors, shapes))
    return out


def _riggings(cartan, factors, shapes):
    choices = []
    for k, a in enumerate(cartan.nodes):
        per = []
        for l, m in sorted(Counter(shapes[k]).items(), reverse=True):
            p = _vacancy(cartan, factors, shapes, a, l)
            per.append([[(l, x) for x in c] for c in combinations_with_replacement(range(p, -1, -1), m)])
        choices.append([sum(c, []) for c in product(*per)])
    return [RC(cartan, factors, tuple(canon(c) for c in combo)) for combo in product(*choices)]


# ---------------------------------------------------------------------------
# virtual Kleber

def virtual_factors(factors):
    """B^{1,s} -> Bhat^{2,s}; B^{2,s} -> Bhat^{1,s} (x) Bhat^{3,s} (x) Bhat^{4,s}."""
    out = []
    for r, s in factors:
        if r not in ORBITS:
            raise ValueError(f"bad factor B^({r},{s})")
        out.extend((b, s) for b in ORBITS[r])
    return tuple(out)


def _symmetric(y):
    return y[0] == y[2] == y[3]


def virtual_kleber_tree(factors):
    return kleber_tree(virtual_factors(factors), D4, accept=_symmetric)


def virtual_kleber(factors):
    """Highest weight rigged configurations of type D4^(3) from the virtual Kleber tree."""
    factors = tuple(tuple(f) for f in factors)
    tree = virtual_kleber_tree(factors)
    out = []
    for _, shapes in tree_configurations(tree):
        assert shapes[0] == shapes[2] == shapes[3]
        g2_shapes = (shapes[1], shapes[0])
        for x in _riggings(G2, factors, g2_shapes):
            # the G2 vacancy numbers are the virtual ones; checked here
            for a in (1, 2):
                for l in set(x.nu(a)):
                    b = ORBITS[a][0]
                    assert x.vacancy(a, l) == _vacancy(D4, tree.factors, shapes, b, l)
            out.append(x)
    return out


def node_counts(tree):
    """Number of tree nodes per final (G2) weight of the virtual tree, as c1,c2 pairs."""
    out = Counter()
    for n in tree.nodes:
        w = n.weight
        out[(w[1], w[0])] += 1
    return dict(out)
