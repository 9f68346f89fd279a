"""Cartan data, weights and the generic crystal machinery.

Weights are plain tuples of integers in the fundamental weight basis,
indexed by the node order of the Cartan data.  Crystal elements are any
hashable objects exposing ``e(a)``, ``f(a)``, ``epsilon(a)``, ``phi(a)``
and ``weight()``.
"""
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import networkx as nx


class CapExceeded(RuntimeError):
    """Raised when a closure grows past its node cap."""


@dataclass(frozen=True)
class CartanData:
    name: str
    nodes: tuple
    matrix: tuple  # matrix[i][j] = A_{nodes[i], nodes[j]}
    symmetrizer: tuple

    def index(self, a):
        try:
            return self.nodes.index(a)
        except ValueError:
            raise ValueError(f"node {a!r} not in {self.name}") from None

    def A(self, a, b):
        return self.matrix[self.index(a)][self.index(b)]

    @property
    def rank(self):
        return len(self.nodes)


G2 = CartanData("G2", (1, 2), ((2, -3), (-1, 2)), (1, 3))
D4 = CartanData(
    "D4",
    (1, 2, 3, 4),
    ((2, -1, 0, 0), (-1, 2, -1, -1), (0, -1, 2, 0), (0, -1, 0, 2)),
    (1, 1, 1, 1),
)
CARTAN = {"G2": G2, "D4": D4}


def simple_root(cartan, a):
    """alpha_a in the fundamental weight basis (column a of the Cartan matrix)."""
    j = cartan.index(a)
    return tuple(cartan.matrix[i][j] for i in range(cartan.rank))


def root_pairing(cartan, a, b):
    """(alpha_a | alpha_b) = d_a A_ab."""
    return cartan.symmetrizer[cartan.index(a)] * cartan.A(a, b)


def zero_weight(cartan):
    return (0,) * cartan.rank


def add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def scale(k, u):
    return tuple(k * x for x in u)


def fundamental(cartan, a, k=1):
    w = [0] * cartan.rank
    w[cartan.index(a)] = k
    return tuple(w)


def is_dominant(w):
    return all(x >= 0 for x in w)


def affinize(c):
    """Level-zero affine weight (Lambda_0, Lambda_1, Lambda_2) of a G2 weight."""
    c1, c2 = c
    return (-(2 * c1 + 3 * c2), c1, c2)


def format_weight(w, symbol="w", start=1):
    terms = []
    for i, x in enumerate(w):
        if x:
            coeff = {1: "", -1: "-"}.get(x, str(x))
            terms.append(f"{coeff}{symbol}{i + start}")
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


def weight_to_roots(cartan, w):
    """Coordinates of w in the simple root basis, as Fractions."""
    n = cartan.rank
    # solve sum_j c_j alpha_j = w, where alpha_j is column j
    m = [[Fraction(cartan.matrix[i][j]) for j in range(n)] + [Fraction(w[i])] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                k = m[r][col]
                m[r] = [x - k * y for x, y in zip(m[r], m[col])]
    return tuple(m[i][n] for i in range(n))


def weight_pairing(cartan, u, v):
    """Invariant form (u|v) of two weights, normalised so (alpha_a|alpha_b) = d_a A_ab."""
    cu = weight_to_roots(cartan, u)
    # (alpha_a | w) = d_a <h_a, w>
    d = cartan.symmetrizer
    return sum(cu[i] * d[i] * v[i] for i in range(cartan.rank))


def positive_roots(cartan):
    """Positive roots as tuples of simple-root coefficients."""
    n = cartan.rank
    simple = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for r in frontier:
            # <h_i, r> = sum_j A_ij r_j
            for i in range(n):
                pair = sum(cartan.matrix[i][j] * r[j] for j in range(n))
                refl = tuple(r[k] - (pair if k == i else 0) for k in range(n))
                if all(x >= 0 for x in refl) and any(refl) and refl not in roots:
                    roots.add(refl)
                    new.append(refl)
        frontier = new
    return sorted(roots, key=lambda r: (sum(r), r))


def weyl_dimension(cartan, lam):
    """Weyl dimension formula for the irreducible module of highest weight lam."""
    n = cartan.rank
    d = cartan.symmetrizer
    num = Fraction(1)
    for beta in positive_roots(cartan):
        # (lam + rho | beta) / (rho | beta), with (w | alpha_j) = d_j <h_j, w>
        top = sum(beta[j] * d[j] * (lam[j] + 1) for j in range(n))
        bot = sum(beta[j] * d[j] for j in range(n))
        num *= Fraction(top, bot)
    assert num.denominator == 1
    return int(num)


# ---------------------------------------------------------------------------
# tensor products

def _signature(factors, a, eps=None, phi=None):
    """Signature bookkeeping for the tensor rule.

    ``factors`` is listed leftmost first.  The convention is the one where
    on b2 (x) b1, f acts on b2 iff eps(b2) >= phi(b1).  Equivalently the
    list read right to left is a Kashiwara-convention tensor product.
    Returns (unmatched minus positions, unmatched plus positions) as indices
    into ``factors``.  ``eps``/``phi`` default to the factor methods.
    """
    plus = []
    minus = []
    for pos in range(len(factors) - 1, -1, -1):
        b = factors[pos]
        ne = eps(b, a) if eps else b.epsilon(a)
        for _ in range(ne):
            if plus:
                plus.pop()
            else:
                minus.append(pos)
        np_ = phi(b, a) if phi else b.phi(a)
        plus.extend([pos] * np_)
    return minus, plus


def tensor_epsilon(factors, a):
    return len(_signature(factors, a)[0])


def tensor_phi(factors, a):
    return len(_signature(factors, a)[1])


def tensor_f(factors, a):
    """f_a on a tuple of factors; None on annihilation."""
    _, plus = _signature(factors, a)
    if not plus:
        return None
    pos = plus[0]
    new = factors[pos].f(a)
    if new is None:
        return None
    return factors[:pos] + (new,) + factors[pos + 1:]


def tensor_e(factors, a):
    minus, _ = _signature(factors, a)
    if not minus:
        return None
    pos = minus[-1]
    new = factors[pos].e(a)
    if new is None:
        return None
    return factors[:pos] + (new,) + factors[pos + 1:]


def pair_f(a, b2, b1):
    """The two-factor rule written out directly; used as a cross-check."""
    if b2.epsilon(a) >= b1.phi(a):
        x = b2.f(a)
        return None if x is None else (x, b1)
    x = b1.f(a)
    return None if x is None else (b2, x)


def pair_e(a, b2, b1):
    if b2.epsilon(a) > b1.phi(a):
        x = b2.e(a)
        return None if x is None else (x, b1)
    x = b1.e(a)
    return None if x is None else (b2, x)


def pair_epsilon(a, b2, b1, cartan=G2):
    h = b2.weight()[cartan.index(a)] if a != 0 else _h0(b2)
    return max(b2.epsilon(a), b1.epsilon(a) - h)


def pair_phi(a, b2, b1, cartan=G2):
    h = b1.weight()[cartan.index(a)] if a != 0 else _h0(b1)
    return max(b1.phi(a), b2.phi(a) + h)


def _h0(b):
    return affinize(b.weight())[0]


@dataclass(frozen=True)
class Tensor:
    """Tensor product element; ``factors`` leftmost first."""
    factors: tuple

    def e(self, a):
        r = tensor_e(self.factors, a)
        return None if r is None else Tensor(r)

    def f(self, a):
        r = tensor_f(self.factors, a)
        return None if r is None else Tensor(r)

    def epsilon(self, a):
        return tensor_epsilon(self.factors, a)

    def phi(self, a):
        return tensor_phi(self.factors, a)

    def weight(self):
        w = self.factors[0].weight()
        for b in self.factors[1:]:
            w = add(w, b.weight())
        return w

    def __len__(self):
        return len(self.factors)

    def __getitem__(self, i):
        return self.factors[i]

    def __iter__(self):
        return iter(self.factors)

    def to_json(self):
        return [b.to_json() for b in self.factors]

    def __str__(self):
        return " (x) ".join(str(b) for b in self.factors)


# ---------------------------------------------------------------------------
# generic crystal helpers

def f_string(b, word):
    """Apply f_{word[0]} first, then f_{word[1]}, ...; None if any step is 0."""
    for a in word:
        b = b.f(a)
        if b is None:
            return None
    return b


def e_string(b, word):
    for a in word:
        b = b.e(a)
        if b is None:
            return None
    return b


def is_highest_weight(b, index_set=(1, 2)):
    return all(b.e(a) is None for a in index_set)


def to_highest_weight(b, index_set=(1, 2)):
    """Return (hw, word) with b == f_string(hw, word)."""
    raised = []
    while True:
        for a in index_set:
            c = b.e(a)
            if c is not None:
                raised.append(a)
                b = c
                break
        else:
            return b, raised[::-1]


def to_lowest_weight(b, index_set=(1, 2)):
    lowered = []
    while True:
        for a in index_set:
            c = b.f(a)
            if c is not None:
                lowered.append(a)
                b = c
                break
        else:
            return b, lowered[::-1]


def string_lengths(b, a):
    """(epsilon, phi) recomputed by explicit operator powers."""
    eps = 0
    c = b.e(a)
    while c is not None:
        eps += 1
        c = c.e(a)
    ph = 0
    c = b.f(a)
    while c is not None:
        ph += 1
        c = c.f(a)
    return eps, ph


def generate_closure(seeds, index_set=(1, 2), cap=100_000, both=True):
    """Breadth-first closure under e_a, f_a; returns a DiGraph with f-edges.

    Edge b -> f_a(b) carries attribute ``label=a``.
    """
    g = nx.DiGraph()
    queue = deque()
    for s in seeds:
        if s not in g:
            g.add_node(s)
            queue.append(s)
    while queue:
        b = queue.popleft()
        for a in index_set:
            c = b.f(a)
            if c is not None:
                if c not in g:
                    g.add_node(c)
                    queue.append(c)
                g.add_edge(b, c, label=a)
            if both:
                c = b.e(a)
                if c is not None:
                    if c not in g:
                        g.add_node(c)
                        queue.append(c)
                    g.add_edge(c, b, label=a)
        if g.number_of_nodes() > cap:
            raise CapExceeded(f"closure exceeded {cap} nodes")
    return g


def highest_weight_elements(elements, index_set=(1, 2)):
    return [b for b in elements if is_highest_weight(b, index_set)]


def all_tensor_products(*sets):
    return [Tensor(t) for t in product(*sets)]
