"""The bijection Phi between rigged configurations and KR tableaux.

delta removes one B^{1,1} from the left of the factor list and returns a
letter; ls splits the leftmost column (or box of a row) off, lt splits the
bottom box off a leftmost B^{2,1}.  Phi is the composition of these; its
inverse runs the inverse maps from the rightmost factor.
"""
from dataclasses import dataclass, field

from . import core
from .core import G2, Tensor
from .rc import RC, canon, _vacancy
from .tableaux import EMPTY, Tableau, fill_1, unfill_1, Row

INF = float("inf")

LETTER_ORDER = ("1", "2", "3", "0", "-3", "-2", "-1", EMPTY)


@dataclass
class DeltaTrace:
    letter: str
    ell: dict = field(default_factory=dict)  # keys l1,l2,l3,lb3,lb2,lb1
    cases: tuple = ()

    def to_json(self):
        out = {"letter": self.letter, "cases": list(self.cases)}
        for k in ("l1", "l2", "l3", "lb3", "lb2", "lb1"):
            v = self.ell.get(k, INF)
            out[k] = "inf" if v == INF else v
        return out


class _Strings:
    """Mutable working copy of one node's strings, each with a stable id."""

    def __init__(self, strings):
        self.items = [[l, x] for l, x in strings]


def _p(cartan, factors, shapes, a, i):
    return _vacancy(cartan, factors, shapes, a, i)


def _shapes(work):
    return tuple(tuple(sorted((s[0] for s in w.items if s[0] > 0), reverse=True)) for w in work)


def delta(rc, check=True):
    """One step of the algorithm: returns (rc over B*, letter, trace)."""
    if not rc.factors or rc.factors[0] != (1, 1):
        raise ValueError("delta needs B^(1,1) as the leftmost factor")
    if rc.cartan is not G2:
        raise ValueError("delta is implemented for the G2 rigged configurations")
    cart = rc.cartan
    F = rc.factors
    sh = tuple(rc.nu(a) for a in (1, 2))
    n1 = [[l, x] for l, x in rc.strings(1)]
    n2 = [[l, x] for l, x in rc.strings(2)]

    def p(a, i):
        return _p(cart, F, sh, a, i)

    def sing(nu, a, k):
        return nu[k][1] == p(a, nu[k][0])

    def min_singular(nu, a, lo, excl=(), gt=False):
        best = None
        for k, (l, x) in enumerate(nu):
            if k in excl or (l <= lo if gt else l < lo):
                continue
            if x == p(a, l) and (best is None or l < nu[best][0]):
                best = k
        return best

    ell = {}
    cases = []
    removals = {}  # (node, index) -> boxes
    quasi_after = set()

    def finish(letter):
        return _delta_finish(rc, n1, n2, removals, quasi_after, letter, ell, cases, check)

    s1 = min_singular(n1, 1, 1)
    if s1 is None:
        return finish("1")
    ell["l1"] = n1[s1][0]
    removals[(1, s1)] = 1
    s2 = min_singular(n2, 2, ell["l1"])
    if s2 is None:
        return finish("2")
    ell["l2"] = n2[s2][0]
    removals[(2, s2)] = 1

    others = [k for k in range(len(n1)) if k != s1]

    def is_sing(k):
        return sing(n1, 1, k)

    def is_quasi(k):
        l, x = n1[k]
        if x != p(1, l) - 1:
            return False
        # the l1 string has been set aside and does not count here
        return not any(n1[j][0] == l and is_sing(j) for j in others)

    l1, l2 = ell["l1"], ell["l2"]
    big = [k for k in others if n1[k][0] >= l2 and (is_sing(k) or is_quasi(k))]
    if not big:
        return finish("3")
    big.sort(key=lambda k: (n1[k][0], not is_sing(k)))
    s3 = big[0]
    i = n1[s3][0]
    s3b = None
    if is_sing(s3):
        if i == 1:
            ell["l3"] = 1
            cases.append("P")
            removals[(1, s3)] = 1
            return finish(EMPTY)
        ell["l3"], ell["lb3"] = i - 1, i
        cases.append("S")
        s3b = s3
        removals[(1, s3)] = 2
    else:
        ell["l3"] = i
        cands = [k for k in others if k != s3 and n1[k][0] > i and n1[k][0] > 1 and is_sing(k)]
        if not cands:
            cases.append("Q")
            removals[(1, s3)] = 1
            quasi_after.discard(s3)
            return finish("0")
        s3b = min(cands, key=lambda k: n1[k][0])
        ell["lb3"] = n1[s3b][0]
        cases.append("Q,S")
        removals[(1, s3)] = 1
        removals[(1, s3b)] = 1
        quasi_after.add(s3b)

    # a = 2
    if ell["l2"] == ell["lb3"]:
        ell["lb2"] = ell["l2"]
        ell["l2"] = ell["lb2"] - 1
        cases.append("S2(2)")
        removals[(2, s2)] = 2
    else:
        s2b = min_singular(n2, 2, ell["lb3"], excl=(s2,))
        if s2b is None:
            return finish("-3")
        ell["lb2"] = n2[s2b][0]
        removals[(2, s2b)] = 1
    # a = 1
    if ell["l1"] == ell["lb2"]:
        ell["lb1"] = ell["l1"]
        ell["l1"] = ell["lb1"] - 1
        cases.append("S2(1)")
        removals[(1, s1)] = 2
    else:
        s1b = min_singular(n1, 1, ell["lb2"], excl=(s1, s3, s3b))
        if s1b is None:
            return finish("-2")
        ell["lb1"] = n1[s1b][0]
        removals[(1, s1b)] = 1
    return finish("-1")


def _delta_finish(rc, n1, n2, removals, quasi_after, letter, ell, cases, check):
    cart = rc.cartan
    newF = rc.factors[1:]
    work = {1: [list(s) for s in n1], 2: [list(s) for s in n2]}
    for (a, k), m in removals.items():
        work[a][k][0] -= m
    shapes = tuple(tuple(sorted((l for l, _ in work[a] if l > 0), reverse=True)) for a in (1, 2))
    for (a, k) in removals:
        l = work[a][k][0]
        if l > 0:
            pv = _vacancy(cart, newF, shapes, a, l)
            work[a][k][1] = pv - 1 if (a == 1 and k in quasi_after) else pv
    parts = tuple(canon((l, x) for l, x in work[a] if l > 0) for a in (1, 2))
    out = RC(cart, newF, parts)
    trace = DeltaTrace(letter, dict(ell), tuple(cases))
    if check:
        _check_vacancy_change(rc, out, trace)
        if not out.is_valid():
            raise AssertionError(f"delta produced an invalid configuration from {rc}")
    return out, letter, trace


def vacancy_change(trace, a, i):
    """Predicted change of p_i^{(a)} under delta, from the selected lengths."""
    g = {k: trace.ell.get(k, INF) for k in ("l1", "l2", "l3", "lb3", "lb2", "lb1")}

    def chi(k):
        return 1 if i >= g[k] else 0

    one = chi("l1") + chi("l3") + chi("lb3") + chi("lb1")
    two = chi("l2") + chi("lb2")
    if a == 1:
        return -1 + 2 * one - 3 * two
    return -one + 2 * two


def vacancy_change_table(trace, a, i):
    """Same quantity read off the interval table (valid when the lengths are ordered)."""
    g = [trace.ell.get(k, INF) for k in ("l1", "l2", "l3", "lb3", "lb2", "lb1")]
    rows = {1: (-1, 1, -2, 0, 2, -1, 1), 2: (0, -1, 1, 0, -1, 1, 0)}
    pos = sum(1 for b in g if i >= b)
    return rows[a][pos]


def _check_vacancy_change(before, after, trace):
    top = max([l for a in (1, 2) for l in before.nu(a)] + [1]) + 2
    for a in (1, 2):
        for i in range(1, top + 1):
            got = after.vacancy(a, i) - before.vacancy(a, i)
            want = vacancy_change(trace, a, i)
            if got != want:
                raise AssertionError(f"vacancy change mismatch at ({a},{i}): {got} vs {want}; {trace}")


# ---------------------------------------------------------------------------
# inverse

class NoPreimage(ValueError):
    pass


def delta_inv(rc, b):
    """Add the letter b on the left: RC(B*) x B^{1,1} -> RC(B^{1,1} (x) B*)."""
    cart = rc.cartan
    F = rc.factors
    newF = ((1, 1),) + F
    sh = tuple(rc.nu(a) for a in (1, 2))
    work = {1: [list(s) for s in rc.strings(1)], 2: [list(s) for s in rc.strings(2)]}

    def p(a, i):
        return _vacancy(cart, F, sh, a, i)

    def is_sing(a, k):
        l, x = work[a][k]
        return l == 0 or x == p(a, l)

    def is_quasi(a, k, excl=()):
        # strings already set aside do not block quasi-singularity
        l, x = work[a][k]
        return x == p(a, l) - 1 and not any(
            work[a][j][0] == l and is_sing(a, j) for j in range(len(work[a])) if j not in excl)

    def new0(a):
        work[a].append([0, 0])
        return len(work[a]) - 1

    def largest(a, bound=INF, excl=(), quasi=False):
        best = None
        for k, (l, _) in enumerate(work[a]):
            if k in excl or l > bound:
                continue
            ok = is_sing(a, k) or (quasi and l > 0 and is_quasi(a, k, excl))
            if ok and (best is None or l > work[a][best][0]
                       or (l == work[a][best][0] and is_sing(a, k) and not is_sing(a, best))):
                best = k
        return best if best is not None else new0(a)

    def length(a, k):
        return work[a][k][0]

    add = []  # (node, index) per box
    quasi = set()
    if b not in LETTER_ORDER:
        raise ValueError(f"unknown letter {b!r}")
    if b == EMPTY:
        for a, n in ((1, 2), (2, 1)):
            for _ in range(n):
                k = new0(a)
                add.append((a, k))
    elif b != "1":
        if b == "2":
            add.append((1, largest(1)))
        elif b == "3":
            k2 = largest(2)
            k1 = largest(1, length(2, k2))
            add += [(2, k2), (1, k1)]
        elif b == "0":
            k3 = largest(1)
            k2 = largest(2, length(1, k3))
            k1 = largest(1, length(2, k2), excl=(k3,))
            add += [(1, k3), (2, k2), (1, k1)]
            quasi.add(k3)
        else:
            bound3 = INF
            excl13 = ()
            k1b = k2b = None
            if b == "-1":
                k1b = largest(1)
                k2b = largest(2, length(1, k1b))
                bound3 = length(2, k2b)
                excl13 = (k1b,)
            elif b == "-2":
                k2b = largest(2)
                bound3 = length(2, k2b)
            k3b = largest(1, bound3, excl=excl13, quasi=True)
            if length(1, k3b) == 0 or is_sing(1, k3b):
                k3 = k3b
            else:
                k3 = largest(1, length(1, k3b) - 1, excl=excl13 + (k3b,))
                quasi.add(k3)
            k2 = largest(2, length(1, k3))
            k1 = largest(1, length(2, k2), excl=(k3, k3b))
            add += [(1, k3b), (1, k3), (2, k2), (1, k1)]
            if k2b is not None:
                add.append((2, k2b))
            if k1b is not None:
                add.append((1, k1b))
    for a, k in add:
        work[a][k][0] += 1
    shapes = tuple(tuple(sorted((l for l, _ in work[a] if l > 0), reverse=True)) for a in (1, 2))
    for a, k in set(add):
        l = work[a][k][0]
        pv = _vacancy(cart, newF, shapes, a, l)
        work[a][k][1] = pv - 1 if (a == 1 and k in quasi) else pv
    parts = tuple(canon((l, x) for l, x in work[a] if l > 0) for a in (1, 2))
    out = RC(cart, newF, parts)
    if not out.is_valid():
        raise NoPreimage(f"no preimage for letter {b} over {rc}")
    return out


# ---------------------------------------------------------------------------
# splitting maps

def ls(rc):
    r, s = rc.factors[0]
    if s < 2:
        raise ValueError("ls needs a leftmost factor of width at least 2")
    return rc.with_factors(((r, 1), (r, s - 1)) + rc.factors[1:])


def ls_inv(rc):
    (r, one), (r2, s) = rc.factors[:2]
    if one != 1 or r != r2:
        raise ValueError("ls_inv needs B^(r,1) (x) B^(r,s) on the left")
    return rc.with_factors(((r, s + 1),) + rc.factors[2:])


def rs(rc):
    r, s = rc.factors[-1]
    if s < 2:
        raise ValueError("rs needs a rightmost factor of width at least 2")
    return rc.with_factors(rc.factors[:-1] + ((r, s - 1), (r, 1)))


def _add_length_one(rc, factors, rigging):
    shapes = ((1,) + rc.nu(1), rc.nu(2))
    shapes = (tuple(sorted(shapes[0], reverse=True)), shapes[1])
    x = _vacancy(rc.cartan, factors, shapes, 1, 1) if rigging is None else rigging
    parts = (canon(rc.strings(1) + ((1, x),)), rc.strings(2))
    return RC(rc.cartan, factors, parts)


def lt(rc):
    """Leftmost B^{2,1} -> B^{1,1} (x) B^{1,1}; adds a singular string of length 1."""
    if rc.factors[0] != (2, 1):
        raise ValueError("lt needs B^(2,1) as the leftmost factor")
    return _add_length_one(rc, ((1, 1), (1, 1)) + rc.factors[1:], None)


def lt_inv(rc):
    if rc.factors[:2] != ((1, 1), (1, 1)):
        raise ValueError("lt_inv needs B^(1,1) (x) B^(1,1) on the left")
    strs = list(rc.strings(1))
    k = next((k for k, (l, x) in enumerate(strs) if l == 1 and x == rc.vacancy(1, 1)), None)
    if k is None:
        raise NoPreimage("no singular string of length 1 to remove")
    del strs[k]
    return RC(rc.cartan, ((2, 1),) + rc.factors[2:], (canon(strs), rc.strings(2)))


def rb(rc):
    """Rightmost B^{2,1} -> B^{1,1} (x) B^{1,1}; adds a string (1, 0)."""
    if rc.factors[-1] != (2, 1):
        raise ValueError("rb needs B^(2,1) as the rightmost factor")
    return _add_length_one(rc, rc.factors[:-1] + ((1, 1), (1, 1)), 0)


# ---------------------------------------------------------------------------
# Phi

def _check_factors(factors):
    for r, s in factors:
        if r not in (1, 2) or s < 1:
            raise ValueError(f"unsupported factor B^({r},{s})")


def phi(rc, trace=None):
    """Rigged configuration -> tensor product of KR tableaux (leftmost factor first)."""
    _check_factors(rc.factors)
    out = []
    cur = rc
    while cur.factors:
        r, s = cur.factors[0]
        if r == 1:
            letters = []
            for _ in range(s):
                if cur.factors[0][1] > 1:
                    cur = ls(cur)
                    _log(trace, "ls", cur)
                cur, b, tr = delta(cur)
                _log(trace, "delta", cur, b)
                letters.append(b)
            out.append(Tableau((tuple(letters),)))
        else:
            cols = []
            for _ in range(s):
                if cur.factors[0][1] > 1:
                    cur = ls(cur)
                    _log(trace, "ls", cur)
                cur = lt(cur)
                _log(trace, "lt", cur)
                cur, bottom, _ = delta(cur)
                _log(trace, "delta", cur, bottom)
                cur, top, _ = delta(cur)
                _log(trace, "delta", cur, top)
                cols.append((top, bottom))
            out.append(Tableau((tuple(c[0] for c in cols), tuple(c[1] for c in cols))))
    return Tensor(tuple(out))


def _log(trace, step, rc, letter=None):
    if trace is not None:
        trace.append((step, rc, letter))


def phi_inv(t, cartan=G2):
    """Tensor product of KR tableaux -> rigged configuration."""
    factors = tuple(t.factors) if isinstance(t, Tensor) else tuple(t)
    cur = RC(cartan, (), ((), ()))
    for tab in reversed(factors):
        r, s = tab.height, tab.width
        _check_factors([(r, s)])
        if r == 1:
            letters = tab.rows[0]
            for j in range(s - 1, -1, -1):
                cur = delta_inv(cur, letters[j])
                if j < s - 1:
                    cur = ls_inv(cur)
        else:
            cols = tab.columns()
            for j in range(s - 1, -1, -1):
                top, bottom = cols[j]
                cur = delta_inv(cur, top)
                cur = delta_inv(cur, bottom)
                cur = lt_inv(cur)
                if j < s - 1:
                    cur = ls_inv(cur)
    return cur


def kr_factor(r, s, x):
    """Wrap a KR tableau or an unfilled row as a KR tableau of shape r x s."""
    if isinstance(x, Row):
        return fill_1(x)
    return x


def r_matrix_rc(b, bp):
    """R: B^{1,s} (x) B^{1,s'} -> B^{1,s'} (x) B^{1,s} through the bijection (unfilled rows)."""
    rc = phi_inv(Tensor((fill_1(b), fill_1(bp))))
    out = phi(rc.with_factors((rc.factors[1], rc.factors[0])))
    return Tensor((unfill_1(out[0]), unfill_1(out[1])))


def r_matrix_rc_tableaux(t):
    """R on a two-factor tensor of KR tableaux, via Phi and Phi^{-1}."""
    rc = phi_inv(t)
    return phi(rc.with_factors((rc.factors[1], rc.factors[0])))
