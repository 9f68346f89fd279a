"""Rigged configurations.

A rigged configuration stores, for every node a, a tuple of strings
``(length, rigging)`` sorted by decreasing length and, within a length,
by decreasing rigging.  ``factors`` lists the KR crystals B^{r,s} of the
ambient tensor product, leftmost first; vacancy numbers only depend on
the multiset of factors.
"""
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, product

from sympy.utilities.iterables import partitions

from . import core
from .core import CARTAN, G2


def canon(strings):
    return tuple(sorted(strings, key=lambda t: (-t[0], -t[1])))


@lru_cache(maxsize=None)
def _L(factors):
    """L[a][j] = number of factors B^{a,j}."""
    out = {}
    for r, s in factors:
        out.setdefault(r, Counter())[s] += 1
    return out


@dataclass(frozen=True)
class RC:
    cartan: core.CartanData
    factors: tuple
    parts: tuple  # parts[idx] = strings of node cartan.nodes[idx]

    def __post_init__(self):
        for r, s in self.factors:
            if r not in self.cartan.nodes or s < 1:
                raise ValueError(f"bad factor B^({r},{s}) for {self.cartan.name}")

    # -- basic data -------------------------------------------------------
    def strings(self, a):
        return self.parts[self.cartan.index(a)]

    def nu(self, a):
        return tuple(l for l, _ in self.strings(a))

    def riggings(self, a):
        return tuple(x for _, x in self.strings(a))

    def size(self, a):
        return sum(self.nu(a))

    def vacancy(self, a, i):
        """p_i^{(a)}; i may be float('inf') for the weight pairing."""
        return _vacancy(self.cartan, self.factors, tuple(self.nu(b) for b in self.cartan.nodes), a, i)

    def vacancies(self, a):
        return tuple(self.vacancy(a, l) for l in self.nu(a))

    def colabels(self):
        return tuple(tuple(self.vacancy(a, l) - x for l, x in self.strings(a)) for a in self.cartan.nodes)

    def is_valid(self):
        return all(x <= self.vacancy(a, l) for a in self.cartan.nodes for l, x in self.strings(a))

    def is_highest_weight(self):
        return all(x >= 0 for p in self.parts for _, x in p)

    # -- crystal structure -------------------------------------------------
    def _rebuild(self, new_shapes, fixed, factors=None):
        """New RC with the given shapes; ``fixed`` maps (node index, position) to a rigging,
        every other string keeps its colabel (taken from ``self``)."""
        factors = self.factors if factors is None else factors
        shapes = tuple(tuple(l for l, _ in strs) for strs in new_shapes)
        parts = []
        for idx, a in enumerate(self.cartan.nodes):
            row = []
            for pos, (l, colab) in enumerate(new_shapes[idx]):
                if (idx, pos) in fixed:
                    x = fixed[(idx, pos)]
                else:
                    x = _vacancy(self.cartan, factors, shapes, a, l) - colab
                if l > 0:
                    row.append((l, x))
            parts.append(canon(row))
        return RC(self.cartan, factors, tuple(parts))

    def _with_colabels(self):
        return [[(l, self.vacancy(a, l) - x) for l, x in self.strings(a)] for a in self.cartan.nodes]

    def f(self, a):
        idx = self.cartan.index(a)
        strs = self.strings(a)
        shapes = self._with_colabels()
        x = min((r for _, r in strs), default=1)
        if x > 0:
            shapes[idx].append((1, None))
            fixed = {(idx, len(shapes[idx]) - 1): -1}
        else:
            ell = max(l for l, r in strs if r == x)
            pos = next(k for k, (l, r) in enumerate(strs) if l == ell and r == x)
            shapes[idx][pos] = (ell + 1, None)
            fixed = {(idx, pos): x - 1}
        out = self._rebuild(shapes, fixed)
        return out if out.is_valid() else None

    def e(self, a):
        idx = self.cartan.index(a)
        strs = self.strings(a)
        if not strs:
            return None
        x = min(r for _, r in strs)
        if x >= 0:
            return None
        ell = min(l for l, r in strs if r == x)
        pos = next(k for k, (l, r) in enumerate(strs) if l == ell and r == x)
        shapes = self._with_colabels()
        shapes[idx][pos] = (ell - 1, None)
        return self._rebuild(shapes, {(idx, pos): x + 1})

    def epsilon(self, a):
        return -min(0, min(self.riggings(a), default=0))

    def phi(self, a):
        return self.epsilon(a) + self.weight()[self.cartan.index(a)]

    def weight(self):
        return rc_weight(self)

    def f_string(self, word):
        return core.f_string(self, word)

    def e_string(self, word):
        return core.e_string(self, word)

    # -- conversions -------------------------------------------------------
    def with_factors(self, factors):
        return RC(self.cartan, tuple(factors), self.parts)

    def to_json(self):
        return {
            "cartan": self.cartan.name,
            "factors": [list(f) for f in self.factors],
            "nu": [list(self.nu(a)) for a in self.cartan.nodes],
            "riggings": [list(self.riggings(a)) for a in self.cartan.nodes],
        }

    def __str__(self):
        out = []
        for a in self.cartan.nodes:
            rows = [f"{self.vacancy(a, l)}[{'#' * l}]{x}" for l, x in self.strings(a)]
            out.append(" ".join(rows) if rows else "()")
        return " | ".join(out)

    def display(self):
        """Multi-line picture: vacancy number left, rigging right."""
        blocks = []
        for a in self.cartan.nodes:
            lines = [f"{self.vacancy(a, l):>3} " + "[ ]" * l + f" {x}" for l, x in self.strings(a)]
            blocks.append("\n".join(lines) if lines else "  (empty)")
        return "\n\n".join(blocks)


def make_rc(factors, nu, riggings=None, cartan=G2):
    """Build an RC from partitions and riggings listed row by row."""
    if isinstance(cartan, str):
        cartan = CARTAN[cartan]
    factors = tuple(tuple(f) for f in factors)
    parts = []
    for a_idx in range(cartan.rank):
        lens = list(nu[a_idx]) if a_idx < len(nu) else []
        rig = list(riggings[a_idx]) if riggings is not None else [0] * len(lens)
        if len(rig) != len(lens):
            raise ValueError("riggings must match partition rows")
        parts.append(canon((l, x) for l, x in zip(lens, rig) if l > 0))
    return RC(cartan, factors, tuple(parts))


def from_json(d):
    return make_rc(d["factors"], d["nu"], d["riggings"], CARTAN[d["cartan"]])


def empty_rc(factors, cartan=G2):
    return make_rc(factors, [[] for _ in range(CARTAN[cartan].rank if isinstance(cartan, str) else cartan.rank)], cartan=cartan)


@lru_cache(maxsize=None)
def _vacancy(cartan, factors, shapes, a, i):
    L = _L(tuple(sorted(factors)))
    total = sum(min(i, j) * n for j, n in L.get(a, {}).items())
    for idx, b in enumerate(cartan.nodes):
        Aab = cartan.A(a, b)
        if Aab:
            total -= Aab * sum(min(i, l) for l in shapes[idx])
    return total


def vacancy(rc, a, i):
    return rc.vacancy(a, i)


def base_weight(cartan, factors):
    w = [0] * cartan.rank
    for r, s in factors:
        w[cartan.index(r)] += s
    return tuple(w)


def rc_weight(rc):
    w = base_weight(rc.cartan, rc.factors)
    for a in rc.cartan.nodes:
        w = core.sub(w, core.scale(rc.size(a), core.simple_root(rc.cartan, a)))
    return w


def rc_affine_weight(rc):
    return core.affinize(rc_weight(rc))


def cocharge_config(cartan, shapes):
    """cc(nu) = 1/2 sum (alpha_a|alpha_b) min(i,j) m_i^a m_j^b."""
    total = 0
    for ia, a in enumerate(cartan.nodes):
        for ib, b in enumerate(cartan.nodes):
            pr = core.root_pairing(cartan, a, b)
            if pr:
                total += pr * sum(min(i, j) for i in shapes[ia] for j in shapes[ib])
    assert total % 2 == 0
    return total // 2


def cocharge(rc, weighted=True):
    """cc(nu) plus the riggings, each rigging of nu^(a) counted t_a times.

    t = (1, 3) for G2 and all ones for D4; these are the symmetrizer entries.
    With ``weighted=False`` every rigging counts once.  Only the weighted
    form agrees with energy through the bijection once nu^(2) carries
    nonzero riggings, e.g. at 2 (x) 1 (x) empty in (B^{1,1})^3.
    """
    shapes = [rc.nu(a) for a in rc.cartan.nodes]
    t = rc.cartan.symmetrizer if weighted else (1,) * rc.cartan.rank
    return cocharge_config(rc.cartan, shapes) + sum(
        ta * x for ta, p in zip(t, rc.parts) for _, x in p)


def complement(rc):
    """Replace every rigging by its colabel and reverse the factor order."""
    parts = tuple(canon((l, rc.vacancy(a, l) - x) for l, x in rc.strings(a)) for a in rc.cartan.nodes)
    return RC(rc.cartan, tuple(reversed(rc.factors)), parts)


def eta(rc, index_set=None):
    """Complement on highest weight elements, extended as a classical crystal isomorphism."""
    index_set = index_set or rc.cartan.nodes
    hw, word = core.to_highest_weight(rc, index_set)
    out = core.f_string(complement(hw), word)
    assert out is not None
    return out


# ---------------------------------------------------------------------------
# enumeration

def _partitions(n):
    if n == 0:
        yield ()
        return
    for p in partitions(n):
        yield tuple(sorted((k for k, m in p.items() for _ in range(m)), reverse=True))


def dominant_weights_below(cartan, top):
    """Dominant weights top - sum n_a alpha_a with n_a >= 0, with the n vectors."""
    bound = core.weight_to_roots(cartan, top)
    ranges = [range(int(b) + 1) if b >= 0 else range(0) for b in bound]
    for ns in product(*ranges):
        w = top
        for n, a in zip(ns, cartan.nodes):
            w = core.sub(w, core.scale(n, core.simple_root(cartan, a)))
        if core.is_dominant(w):
            yield w, ns


def configurations(factors, lam=None, cartan=G2):
    """(L; lambda)-configurations with p >= 0 on every present row, for all dominant
    lambda (or the given one).  Yields (lambda, shapes)."""
    factors = tuple(tuple(f) for f in factors)
    top = base_weight(cartan, factors)
    for w, ns in dominant_weights_below(cartan, top):
        if lam is not None and tuple(lam) != w:
            continue
        for shapes in product(*[list(_partitions(n)) for n in ns]):
            ok = all(_vacancy(cartan, factors, shapes, a, l) >= 0
                     for idx, a in enumerate(cartan.nodes) for l in set(shapes[idx]))
            if ok:
                yield w, shapes


def enumerate_hw(factors, lam=None, cartan=G2):
    """Brute-force highest weight rigged configurations."""
    factors = tuple(tuple(f) for f in factors)
    out = []
    for _, shapes in configurations(factors, lam, cartan):
        choices = []
        for idx, a in enumerate(cartan.nodes):
            per = []
            for l, m in sorted(Counter(shapes[idx]).items(), reverse=True):
                p = _vacancy(cartan, factors, shapes, a, l)
                per.append([[(l, x) for x in c] for c in combinations_with_replacement(range(p, -1, -1), m)])
            choices.append([sum(c, []) for c in product(*per)])
        for combo in product(*choices):
            out.append(RC(cartan, factors, tuple(canon(c) for c in combo)))
    return out


def hw1_rc(k, s):
    """Highest weight element of RC(B^{1,s}) of weight k w1: nu = ((s-k, s-k), (s-k)), riggings 0."""
    if not 0 <= k <= s:
        raise ValueError(f"need 0 <= k <= s, got k={k}, s={s}")
    n = s - k
    parts = (((n, 0), (n, 0)), ((n, 0),)) if n else ((), ())
    return RC(G2, ((1, s),), parts)


def hw2_rc(params, s):
    """Highest weight element of RC(B^{2,s}) labelled (k1, k2, k3, x).

    nu^(1) = (k1+k2+k3, k1, k1) with x on the first row, nu^(2) = (k1+k2, k1),
    all other riggings 0.
    """
    k1, k2, k3, x = params
    if min(params) < 0 or 2 * k3 > k2 or k1 + k2 > s or x > k2 - 2 * k3:
        raise ValueError(f"invalid parameters {params} for B^(2,{s})")
    n1 = [(k1 + k2 + k3, x), (k1, 0), (k1, 0)]
    n2 = [(k1 + k2, 0), (k1, 0)]
    parts = (canon(t for t in n1 if t[0]), canon(t for t in n2 if t[0]))
    return RC(G2, ((2, s),), parts)


@lru_cache(maxsize=None)
def rc_crystal(factors, cartan=G2, cap=100_000):
    """All of RC(B) as a classical crystal graph (closure of the highest weights)."""
    factors = tuple(tuple(f) for f in factors)
    return core.generate_closure(enumerate_hw(factors, cartan=cartan), cartan.nodes, cap=cap)


def rc_elements(factors, cartan=G2):
    return tuple(rc_crystal(tuple(tuple(f) for f in factors), cartan).nodes)


# ---------------------------------------------------------------------------
# experimental affine operators on RC(B^{1,s})

C_MARKS = {1: 2, 2: 1}


def _single_b1s(rc):
    if rc.cartan is not G2 or len(rc.factors) != 1 or rc.factors[0][0] != 1:
        raise ValueError("affine RC operators are defined on RC(B^(1,s)) only")
    return rc.factors[0][1]


def rc_affine_f0(rc):
    """Remove a box from each row of nu^(a) when it has exactly c_a rows (conjectural)."""
    _single_b1s(rc)
    shapes = rc._with_colabels()
    for idx, a in enumerate(rc.cartan.nodes):
        if len(shapes[idx]) != C_MARKS[a]:
            return None
        # a row shrinking to length 0 must end up singular, i.e. colabel 0
        if any(l == 1 and c != 0 for l, c in shapes[idx]):
            return None
        shapes[idx] = [(l - 1, c) for l, c in shapes[idx]]
    out = rc._rebuild(shapes, {})
    # being under the vacancy numbers is not enough; the result must lie in RC(B)
    return out if out in _rc_set(rc.factors) else None


def rc_affine_e0(rc):
    """Add a box to the first c_a rows of nu^(a), colabels fixed (conjectural)."""
    s = _single_b1s(rc)
    shapes = rc._with_colabels()
    for idx, a in enumerate(rc.cartan.nodes):
        rows = list(shapes[idx]) + [(0, 0)] * max(0, C_MARKS[a] - len(shapes[idx]))
        c = C_MARKS[a]
        shapes[idx] = [(l + 1, col) for l, col in rows[:c]] + rows[c:]
    out = rc._rebuild(shapes, {})
    if not out.is_valid() or out not in _rc_set(rc.factors):
        return None
    return out


@lru_cache(maxsize=None)
def _rc_set(factors):
    return frozenset(rc_elements(factors))


@dataclass(frozen=True)
class AffineRC:
    """Wrapper exposing the conjectural e_0/f_0 next to the classical operators."""
    rc: RC

    def e(self, a):
        r = rc_affine_e0(self.rc) if a == 0 else self.rc.e(a)
        return None if r is None else AffineRC(r)

    def f(self, a):
        r = rc_affine_f0(self.rc) if a == 0 else self.rc.f(a)
        return None if r is None else AffineRC(r)

    def epsilon(self, a):
        return core.string_lengths(self, a)[0] if a == 0 else self.rc.epsilon(a)

    def phi(self, a):
        return core.string_lengths(self, a)[1] if a == 0 else self.rc.phi(a)

    def weight(self):
        return self.rc.weight()
