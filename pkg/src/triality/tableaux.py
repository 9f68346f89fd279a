"""Tableaux models for the D4^(3) crystals.

Letters are the strings "1","2","3","0","-3","-2","-1" and "E" (the
letter written as an empty set in the literature).  Words are tuples of
letters listed leftmost tensor factor first.
"""
from dataclasses import dataclass
from functools import lru_cache

from . import core
from .core import G2, CapExceeded

LETTERS = ("1", "2", "3", "0", "-3", "-2", "-1")
EMPTY = "E"
ALL_LETTERS = LETTERS + (EMPTY,)
RANK = {x: i for i, x in enumerate(LETTERS)}
BAR = {"1": "-1", "2": "-2", "3": "-3", "0": "0", "-3": "3", "-2": "2", "-1": "1"}

_F = {
    1: {"1": "2", "3": "0", "0": "-3", "-2": "-1"},
    2: {"2": "3", "-3": "-2"},
    0: {"-1": EMPTY, EMPTY: "1", "-3": "2", "-2": "3"},
}
_E = {a: {v: k for k, v in t.items()} for a, t in _F.items()}

_WT = {
    "1": (1, 0), "2": (-1, 1), "3": (2, -1), "0": (0, 0),
    "-3": (-2, 1), "-2": (1, -1), "-1": (-1, 0), EMPTY: (0, 0),
}


def _chain(table, x):
    n = 0
    while x in table:
        x = table[x]
        n += 1
    return n


_EPS = {a: {x: _chain(_E[a], x) for x in ALL_LETTERS} for a in _F}
_PHI = {a: {x: _chain(_F[a], x) for x in ALL_LETTERS} for a in _F}
# classical ops see E as an isolated weight zero element
for _a in (1, 2):
    _EPS[_a][EMPTY] = _PHI[_a][EMPTY] = 0


def check_letter(x):
    if x not in _WT:
        raise ValueError(f"unknown letter {x!r}")
    return x


def letter_f(a, x):
    """f_a on the letter crystal B^{1,1}; None means 0."""
    return _F[a].get(check_letter(x))


def letter_e(a, x):
    return _E[a].get(check_letter(x))


def letter_epsilon(a, x):
    return _EPS[a][x]


def letter_phi(a, x):
    return _PHI[a][x]


def letter_weight(x):
    return _WT[x]


def pretty_letter(x):
    if x == EMPTY:
        return "∅"
    if x.startswith("-"):
        return x[1] + "̅"
    return x


# ---------------------------------------------------------------------------
# words

def _weps(x, a):
    return _EPS[a][x]


def _wphi(x, a):
    return _PHI[a][x]


def word_signature(word, a):
    return core._signature(word, a, _weps, _wphi)


def word_f(word, a):
    _, plus = word_signature(word, a)
    if not plus:
        return None
    pos = plus[0]
    return word[:pos] + (_F[a][word[pos]],) + word[pos + 1:]


def word_e(word, a):
    minus, _ = word_signature(word, a)
    if not minus:
        return None
    pos = minus[-1]
    return word[:pos] + (_E[a][word[pos]],) + word[pos + 1:]


def word_epsilon(word, a):
    return len(word_signature(word, a)[0])


def word_phi(word, a):
    return len(word_signature(word, a)[1])


def word_weight(word):
    c1 = c2 = 0
    for x in word:
        w = _WT[x]
        c1 += w[0]
        c2 += w[1]
    return (c1, c2)


# ---------------------------------------------------------------------------
# B^{1,s} in Kang-Misra form

def _is_row(letters):
    if any(x not in RANK for x in letters):
        return False
    if letters.count("0") > 1:
        return False
    return all(RANK[x] <= RANK[y] for x, y in zip(letters, letters[1:]))


def coords_of(letters):
    """(x1, x2, x3, xb3, xb2, xb1) of a row."""
    c = {x: letters.count(x) for x in LETTERS}
    return (c["1"], c["2"], 2 * c["3"] + c["0"], 2 * c["-3"] + c["0"], c["-2"], c["-1"])


def row_of_coords(x):
    x1, x2, x3, xb3, xb2, xb1 = x
    n0 = x3 % 2
    assert xb3 % 2 == n0, "x3 and xb3 must have equal parity"
    return (("1",) * x1 + ("2",) * x2 + ("3",) * ((x3 - n0) // 2) + ("0",) * n0
            + ("-3",) * ((xb3 - n0) // 2) + ("-2",) * xb2 + ("-1",) * xb1)


def z_coords(x):
    x1, x2, x3, xb3, xb2, xb1 = x
    return (xb1 - x1, xb2 - xb3, x3 - x2, (xb3 - x3) // 2)


def _conditions(z, strict_gt):
    """The six condition systems; strict_gt=True gives (F_i), False gives (E_i)."""
    z1, z2, z3, z4 = z
    if strict_gt:
        def P(v):  # '> 0' in F
            return v > 0

        def N(v):  # '<= 0' in F
            return v <= 0
    else:
        def P(v):
            return v >= 0

        def N(v):
            return v < 0
    return (
        N(z1 + z2 + z3 + 3 * z4) and N(z1 + z2 + 3 * z4) and N(z1 + z2) and N(z1),
        N(z1 + z2 + z3 + 3 * z4) and N(z2 + 3 * z4) and N(z2) and P(z1),
        N(z1 + z3 + 3 * z4) and N(z3 + 3 * z4) and N(z4) and P(z2) and P(z1 + z2),
        P(z1 + z2 + 3 * z4) and P(z2 + 3 * z4) and P(z4) and N(z3) and N(z1 + z3),
        P(z1 + z2 + z3 + 3 * z4) and P(z3 + 3 * z4) and P(z3) and N(z1),
        P(z1 + z2 + z3 + 3 * z4) and P(z1 + z3 + 3 * z4) and P(z1 + z3) and P(z1),
    )


# coordinate updates, order (x1, x2, x3, xb3, xb2, xb1)
_F0_MOVES = (
    (1, 0, 0, 0, 0, 0),
    (0, 0, 1, 1, 0, -1),
    (0, 0, 2, 0, -1, 0),
    (0, 1, 0, -2, 0, 0),
    (1, 0, -1, -1, 0, 0),
    (0, 0, 0, 0, 0, -1),
)


def f0_case(x):
    """Index 1..6 of the unique (F_i) that holds."""
    hits = [i + 1 for i, ok in enumerate(_conditions(z_coords(x), True)) if ok]
    assert len(hits) == 1, f"F-conditions not exclusive at {x}: {hits}"
    return hits[0]


def e0_case(x):
    hits = [i + 1 for i, ok in enumerate(_conditions(z_coords(x), False)) if ok]
    assert len(hits) == 1, f"E-conditions not exclusive at {x}: {hits}"
    return hits[0]


def _box_count(x):
    x1, x2, x3, xb3, xb2, xb1 = x
    return x1 + x2 + xb2 + xb1 + (x3 + xb3) // 2


def affine_f0(x, s):
    """f_0 on coordinates; None if the result leaves B^{1,s}."""
    move = _F0_MOVES[f0_case(x) - 1]
    y = tuple(u + v for u, v in zip(x, move))
    if min(y) < 0 or _box_count(y) > s:
        return None
    return y


def affine_e0(x, s):
    move = _F0_MOVES[e0_case(x) - 1]
    y = tuple(u - v for u, v in zip(x, move))
    if min(y) < 0 or _box_count(y) > s:
        return None
    return y


@dataclass(frozen=True)
class Row:
    """An element of B^{1,s} as a weakly increasing row of k <= s letters."""
    s: int
    letters: tuple

    def __post_init__(self):
        if not _is_row(self.letters) or len(self.letters) > self.s:
            raise ValueError(f"not an element of B^(1,{self.s}): {self.letters}")

    @property
    def k(self):
        return len(self.letters)

    def coords(self):
        return coords_of(self.letters)

    def f(self, a):
        if a == 0:
            y = affine_f0(self.coords(), self.s)
            return None if y is None else Row(self.s, row_of_coords(y))
        w = word_f(self.letters, a)
        return None if w is None else Row(self.s, w)

    def e(self, a):
        if a == 0:
            y = affine_e0(self.coords(), self.s)
            return None if y is None else Row(self.s, row_of_coords(y))
        w = word_e(self.letters, a)
        return None if w is None else Row(self.s, w)

    def epsilon(self, a):
        if a == 0:
            return _affine_eps(self)
        return word_epsilon(self.letters, a)

    def phi(self, a):
        if a == 0:
            return _affine_phi(self)
        return word_phi(self.letters, a)

    def weight(self):
        return word_weight(self.letters)

    def to_json(self):
        return list(self.letters)

    def __str__(self):
        return "[" + " ".join(pretty_letter(x) for x in self.letters) + "]"


@lru_cache(maxsize=None)
def _affine_eps(b):
    return core.string_lengths(b, 0)[0]


@lru_cache(maxsize=None)
def _affine_phi(b):
    return core.string_lengths(b, 0)[1]


def row(s, letters):
    """Row from an iterable of letters (sorted for convenience)."""
    return Row(s, tuple(sorted(letters, key=RANK.__getitem__)))


def highest_row(s, k=None):
    return Row(s, ("1",) * (s if k is None else k))


def psi(b):
    """Swap i and i-bar (0 fixed), reverse and re-sort."""
    return row(b.s, [BAR[x] for x in reversed(b.letters)])


@lru_cache(maxsize=None)
def b1s_elements(s):
    """All of B^{1,s}, via classical closure from the rows 1^k."""
    g = core.generate_closure([highest_row(s, k) for k in range(s + 1)])
    return tuple(sorted(g.nodes, key=_row_key))


def _row_key(b):
    return (b.k, [RANK[x] for x in b.letters])


def row_class_of(b):
    """k such that b lies in B(k w1)."""
    return b.k


# ---------------------------------------------------------------------------
# tableaux (Kang-Misra for B(lambda), KR tableaux T^{r,s})

@dataclass(frozen=True)
class Tableau:
    """Left-justified tableau, rows listed top first.

    The reading word goes column by column from the left, each column
    read bottom to top; classical operators act through it.
    """
    rows: tuple

    def __post_init__(self):
        for r in self.rows:
            for x in r:
                check_letter(x)
        lens = [len(r) for r in self.rows]
        if any(a < b for a, b in zip(lens, lens[1:])):
            raise ValueError("row lengths must be weakly decreasing")

    @property
    def shape(self):
        return tuple(len(r) for r in self.rows)

    @property
    def height(self):
        return len(self.rows)

    @property
    def width(self):
        return len(self.rows[0]) if self.rows else 0

    def columns(self):
        return [tuple(r[c] for r in self.rows if c < len(r)) for c in range(self.width)]

    def word(self):
        w = []
        for col in self.columns():
            w.extend(reversed(col))
        return tuple(w)

    def _from_word(self, w):
        it = iter(w)
        cols = [tuple(reversed([next(it) for _ in col])) for col in self.columns()]
        return Tableau(tuple(tuple(col[i] for col in cols if i < len(col)) for i in range(self.height)))

    def f(self, a):
        if a == 0:
            raise NotImplementedError("affine operators are only modelled on B^(1,s)")
        w = word_f(self.word(), a)
        return None if w is None else self._from_word(w)

    def e(self, a):
        if a == 0:
            raise NotImplementedError("affine operators are only modelled on B^(1,s)")
        w = word_e(self.word(), a)
        return None if w is None else self._from_word(w)

    def epsilon(self, a):
        return word_epsilon(self.word(), a)

    def phi(self, a):
        return word_phi(self.word(), a)

    def weight(self):
        return word_weight(self.word())

    def to_json(self):
        return [list(r) for r in self.rows]

    def __str__(self):
        return "/".join("".join(pretty_letter(x) for x in r) for r in self.rows)


def column_tableau(top, bottom):
    return Tableau(((top,), (bottom,)))


def tableau_from_columns(cols):
    h = max(len(c) for c in cols)
    return Tableau(tuple(tuple(c[i] for c in cols if i < len(c)) for i in range(h)))


def km_highest(lam):
    m1, m2 = lam
    return Tableau((("1",) * (m1 + m2), ("2",) * m2) if m2 else (("1",) * m1,))


def km_generate(lam, cap=100_000):
    """Crystal graph of B(lambda) generated from the highest weight tableau."""
    if not core.is_dominant(lam):
        raise ValueError("lambda must be dominant")
    if lam == (0, 0):
        import networkx as nx
        g = nx.DiGraph()
        g.add_node(Tableau(()))
        return g
    return core.generate_closure([km_highest(lam)], cap=cap)


# ---------------------------------------------------------------------------
# filling maps

def fill_1(b):
    """Kang-Misra row of B^{1,s} -> 1 x s KR tableau."""
    d = b.s - b.k
    tail = ("-1", "1") * (d // 2) + ((EMPTY,) if d % 2 else ())
    return Tableau((b.letters + tail,))


def unfill_1(t):
    """Inverse of fill_1 on T^{1,s}."""
    if t.height != 1:
        raise ValueError("expected a one-row tableau")
    w = list(t.rows[0])
    s = len(w)
    if w and w[-1] == EMPTY:
        w.pop()
    while len(w) >= 2 and w[-2:] == ["-1", "1"]:
        w = w[:-2]
    b = Row(s, tuple(w))
    if fill_1(b) != t:
        raise ValueError(f"not a filled row: {t}")
    return b


B21_TABLE = {
    (0, 0, 0, 0): ("1", "2"),
    (0, 1, 0, 0): ("1", "0"),
    (0, 1, 0, 1): ("1", EMPTY),
    (1, 0, 0, 0): (EMPTY, EMPTY),
}


def check_hw2_params(params, s):
    k1, k2, k3, x = params
    ok = (min(params) >= 0 and 2 * k3 <= k2 and k1 + k2 <= s and x <= k2 - 2 * k3)
    if not ok:
        raise ValueError(f"invalid parameters {params} for B^(2,{s})")


def _fill2_columns(params, s):
    k1, k2, k3, x = params
    if s == 0:
        return []
    if s == 1:
        return [B21_TABLE[params]]
    pad = s - k1 - k2
    if pad > 0:
        return [("1", "2")] * pad + _fill2_columns(params, k1 + k2)
    xc = (k2 - 2 * k3) - x
    rest = s - 1
    if k2 == 0:
        if k1 == 2:
            return [("0", "-1"), ("1", EMPTY)]
        return [("-2", "-1")] + _fill2_columns((k1 - 3, 2, 1, 0), rest)
    if xc > 2:
        return [("1", "3")] + _fill2_columns((k1, k2 - 1, k3 + 1, x), rest)
    if xc == 2:
        return [("2", "3")] + _fill2_columns((k1, k2 - 1, k3, k2 - 2 * k3 - 1), rest)
    if xc == 1:
        if k3 > 0:
            return [("2", "0")] + _fill2_columns((k1, k2 - 1, k3 - 1, k2 - 2 * k3 + 1), rest)
        if k2 > 1:
            return [("3", "0")] + _fill2_columns((k1, k2 - 2, k3, k2 - 2 * k3 - 2), rest)
        return [("0", "0")] + _fill2_columns((k1 - 1, 1, 0, 0), rest)
    # xc == 0
    if k3 > 1:
        return [("2", "-3")] + _fill2_columns((k1, k2 - 1, k3 - 2, k2 - 2 * k3 + 3), rest)
    if k3 == 1:
        return [("3", "-3")] + _fill2_columns((k1, k2 - 2, k3 - 1, k2 - 2 * k3), rest)
    if k2 > 2:
        return [("3", "-2")] + _fill2_columns((k1, k2 - 3, k3, k2 - 2 * k3 - 3), rest)
    if k2 == 2 and k1 > 0:
        return [("0", "-2")] + _fill2_columns((k1 - 1, 1, 0, 0), rest)
    if k2 == 2:
        return [("1", "-2"), ("1", "2")]
    if k1 > 1:
        return [("-3", "-2")] + _fill2_columns((k1 - 2, 2, 0, 0), rest)
    return [("2", "-2"), ("1", "0")]


def fill_2(params, s):
    """Filled KR tableau of B^{2,s} for the highest weight data (k1, k2, k3, x)."""
    params = tuple(params)
    check_hw2_params(params, s)
    cols = _fill2_columns(params, s)
    assert len(cols) == s, (params, s, cols)
    return tableau_from_columns(cols)


def hw2_params(s):
    """All (k1, k2, k3, x) labelling highest weight elements of B^{2,s}."""
    out = []
    for k1 in range(s + 1):
        for k2 in range(s - k1 + 1):
            for k3 in range(k2 // 2 + 1):
                for x in range(k2 - 2 * k3 + 1):
                    out.append((k1, k2, k3, x))
    return out


def hw2_weight(params, s):
    k1, k2, k3, _ = params
    return (k2 - 2 * k3, s - k1 - k2 + k3)


@lru_cache(maxsize=None)
def b2s_elements(s, cap=100_000):
    """All of B^{2,s} in KR tableau form (classical closure of the filled highest weights)."""
    seeds = [fill_2(p, s) for p in hw2_params(s)]
    g = core.generate_closure(seeds, cap=cap)
    return tuple(g.nodes)


@lru_cache(maxsize=None)
def b21_component_index(t):
    """Position (1..4) of a B^{2,1} column in the order B(w2), B(w1), B(w1), B(0)."""
    hw, _ = core.to_highest_weight(t)
    order = [B21_TABLE[p] for p in ((0, 0, 0, 0), (0, 1, 0, 0), (0, 1, 0, 1), (1, 0, 0, 0))]
    return order.index((hw.rows[0][0], hw.rows[1][0])) + 1


def kr_elements(r, s):
    """Elements of T^{r,s} (KR tableau form)."""
    if r == 1:
        return tuple(fill_1(b) for b in b1s_elements(s))
    if r == 2:
        return b2s_elements(s)
    raise ValueError("only r in {1, 2} is modelled")


def letter_crystal_edges(affine=True):
    """Edge list (x, a, f_a x) of the letter crystal."""
    nodes = (0, 1, 2) if affine else (1, 2)
    return sorted((x, a, y) for a in nodes for x, y in _F[a].items())


__all__ = [
    "LETTERS", "EMPTY", "ALL_LETTERS", "Row", "Tableau", "letter_f", "letter_e",
    "affine_f0", "affine_e0", "psi", "fill_1", "unfill_1", "fill_2", "km_generate",
    "b1s_elements", "b2s_elements", "kr_elements", "CapExceeded", "G2",
]
