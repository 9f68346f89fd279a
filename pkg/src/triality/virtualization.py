"""Virtualization of D4^(3) data in type D4^(1).

The folding sends D4 nodes {2} to G2 node 1 and {1, 3, 4} to G2 node 2.
Rigged configurations are virtualized by copying nu^(1) to node 2 and
nu^(2) to nodes 1, 3, 4; all scaling factors are 1 here.  Tableaux are
virtualized letter by letter into two-row columns of D4 letters, and the
crystal structure is checked on reading words with the D4 letter crystal.
"""
from . import core
from .core import D4, G2
from .kleber import ORBITS, virtual_factors
from .rc import RC, cocharge
from .tableaux import B21_TABLE, EMPTY, Row, Tableau, fill_1

# ---------------------------------------------------------------------------
# weights

def psi_embed(lam):
    """G2 weight (c1, c2) -> D4 weight, w1 -> w2hat and w2 -> w1hat + w3hat + w4hat."""
    c1, c2 = lam
    return (c2, c1, c2, c2)


def psi_root(a):
    """The virtual simple root of G2 node a, as D4 simple root coefficients."""
    out = [0, 0, 0, 0]
    for b in ORBITS[a]:
        out[D4.index(b)] = 1
    return tuple(out)


# ---------------------------------------------------------------------------
# rigged configurations

def rc_virtualize(rc):
    if rc.cartan is not G2:
        raise ValueError("expected a G2 rigged configuration")
    p1, p2 = rc.parts
    return RC(D4, virtual_factors(rc.factors), (p2, p1, p2, p2))


def devirtual_factors(factors):
    out = []
    k = 0
    factors = tuple(tuple(f) for f in factors)
    while k < len(factors):
        r, s = factors[k]
        if r == 2:
            out.append((1, s))
            k += 1
        elif factors[k:k + 3] == ((1, s), (3, s), (4, s)):
            out.append((2, s))
            k += 3
        else:
            raise ValueError(f"factors {factors} are not a virtual image")
    return tuple(out)


def is_virtual_image(rc_hat):
    try:
        devirtual_factors(rc_hat.factors)
    except ValueError:
        return False
    p = rc_hat.parts
    return p[0] == p[2] == p[3]


def rc_devirtualize(rc_hat):
    if rc_hat.cartan is not D4:
        raise ValueError("expected a D4 rigged configuration")
    if not is_virtual_image(rc_hat):
        raise ValueError("not symmetric under the folding")
    p = rc_hat.parts
    return RC(G2, devirtual_factors(rc_hat.factors), (p[1], p[0]))


def virtual_f(a, rc_hat):
    """Product of fhat_b over the orbit of a; None if any factor kills it."""
    for b in ORBITS[a]:
        rc_hat = rc_hat.f(b)
        if rc_hat is None:
            return None
    return rc_hat


def virtual_e(a, rc_hat):
    for b in ORBITS[a]:
        rc_hat = rc_hat.e(b)
        if rc_hat is None:
            return None
    return rc_hat


def virtual_cocharge(rc):
    """Cocharge of the virtual configuration, computed in type D4."""
    return cocharge(rc_virtualize(rc))


# ---------------------------------------------------------------------------
# the D4 letter crystal, enough to read off virtual tableaux

D4_LETTERS = ("1", "2", "3", "4", "-4", "-3", "-2", "-1")
_D4_F = {
    1: {"1": "2", "-2": "-1"},
    2: {"2": "3", "-3": "-2"},
    3: {"3": "4", "-4": "-3"},
    4: {"3": "-4", "4": "-3"},
}
_D4_E = {a: {v: k for k, v in t.items()} for a, t in _D4_F.items()}
_D4_WT = {
    "1": (1, 0, 0, 0), "2": (-1, 1, 0, 0), "3": (0, -1, 1, 1), "4": (0, 0, -1, 1),
    "-4": (0, 0, 1, -1), "-3": (0, 1, -1, -1), "-2": (1, -1, 0, 0), "-1": (-1, 0, 0, 0),
}


def _d4_eps(x, a):
    return 1 if x in _D4_E[a] else 0


def _d4_phi(x, a):
    return 1 if x in _D4_F[a] else 0


def d4_word_f(word, a):
    _, plus = core._signature(word, a, _d4_eps, _d4_phi)
    if not plus:
        return None
    pos = plus[0]
    return word[:pos] + (_D4_F[a][word[pos]],) + word[pos + 1:]


def d4_word_e(word, a):
    minus, _ = core._signature(word, a, _d4_eps, _d4_phi)
    if not minus:
        return None
    pos = minus[-1]
    return word[:pos] + (_D4_E[a][word[pos]],) + word[pos + 1:]


def d4_word_weight(word):
    w = (0, 0, 0, 0)
    for x in word:
        w = core.add(w, _D4_WT[x])
    return w


def virtual_word_f(a, word):
    for b in ORBITS[a]:
        word = d4_word_f(word, b)
        if word is None:
            return None
    return word


def virtual_word_e(a, word):
    for b in ORBITS[a]:
        word = d4_word_e(word, b)
        if word is None:
            return None
    return word


# ---------------------------------------------------------------------------
# tableaux

LETTER_COLUMNS = {
    "1": ("1", "2"), "2": ("1", "3"), "3": ("2", "-3"), "0": ("3", "-3"),
    "-3": ("3", "-2"), "-2": ("-3", "-1"), "-1": ("-2", "-1"), EMPTY: ("1", "-1"),
}


def tableau_virtualize(b):
    """B^{1,s} element (a row or a filled one-row tableau) -> columns of a two-row D4 tableau."""
    if isinstance(b, Row):
        b = fill_1(b)
    if not isinstance(b, Tableau) or b.height != 1:
        raise ValueError("expected an element of B^(1,s)")
    return tuple(LETTER_COLUMNS[x] for x in b.rows[0])


def column_word(cols):
    """Reading word of a tableau given by columns: left to right, bottom to top."""
    w = []
    for col in cols:
        w.extend(reversed(col))
    return tuple(w)


# images of the classically highest weight columns of B^{2,1}: a D4 letter
# and two spin columns written as sign strings
B21_VIRTUAL = {
    ("1", "2"): ("1", "+++-", "++++"),
    ("1", "0"): ("2", "+---", "++++"),
    ("1", EMPTY): ("-3", "+++-", "++++"),
    (EMPTY, EMPTY): ("-1", "+---", "++++"),
}
assert set(B21_VIRTUAL) == set(B21_TABLE.values())

# the pair of spin columns read as one column of Btilde^{3,1}
SPIN_PAIR_COLUMNS = {
    ("+++-", "++++"): ("1", "2", "3"),
    ("+---", "++++"): ("1", "2", "-2"),
}


def spin_weight(signs):
    """D4 weight of the spin column with the given signs of (e1, ..., e4)/2."""
    e = [1 if c == "+" else -1 for c in signs]
    # pair with h_i = e_i - e_{i+1} (i = 1, 2, 3) and h_4 = e_3 + e_4, halved
    return ((e[0] - e[1]) // 2, (e[1] - e[2]) // 2, (e[2] - e[3]) // 2, (e[2] + e[3]) // 2)


def b21_image_weight(image):
    letter, s3, s4 = image
    return core.add(_D4_WT[letter], core.add(spin_weight(s3), spin_weight(s4)))


def b2_virtualize(b):
    """Virtual image of a B^{2,1} column.

    Returns the image of its highest weight together with the virtual
    lowering word: b is f_word(hw), and the image is the product of the
    orbit operators along the same word.
    """
    if not isinstance(b, Tableau) or b.shape != (1, 1):
        raise ValueError("expected a B^(2,1) column")
    hw, word = core.to_highest_weight(b)
    image = B21_VIRTUAL[(hw.rows[0][0], hw.rows[1][0])]
    return {
        "highest_weight": image,
        "column_form": (image[0], SPIN_PAIR_COLUMNS[image[1:]]),
        "word": list(word),
        "virtual_word": [c for a in word for c in ORBITS[a]],
        "weight": psi_embed(b.weight()),
    }
