"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""
import time
from collections import Counter

import pytest

from triality import bijection as B
from triality import cli, core, kleber
from triality import rc as R
from triality.tableaux import EMPTY, b1s_elements, hw2_params, psi

BIJECTION_SETS = (
    [((1, 1),) * n for n in range(1, 5)]
    + [((1, 1), (2, 1), (1, 2)), ((2, 1), (2, 1)), ((1, 3), (1, 2))]
    + [((1, s),) for s in range(1, 5)]
    + [((2, s),) for s in range(1, 4)]
)
FIGURE_EDGES = {
    ("1", 1, "2"), ("3", 1, "0"), ("0", 1, "-3"), ("-2", 1, "-1"), ("2", 2, "3"), ("-3", 2, "-2"),
    ("-1", 0, EMPTY), (EMPTY, 0, "1"), ("-3", 0, "2"), ("-2", 0, "3"),
}
XM_SETS = [((1, 1),) * n for n in range(1, 5)] + [((1, 2), (1, 1)), ((1, 2), (1, 2)), ((1, 3), (1, 2))]


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {title}" + (f" ({detail})" if detail else ""))
        assert ok, detail
    return emit


def _multiset(rcs):
    return Counter((x.factors, x.parts) for x in rcs)


def test_criterion_01_b11_affine_crystal(report):
    start = time.perf_counter()
    g = core.generate_closure(b1s_elements(1), (0, 1, 2))
    edges = {((u.letters or (EMPTY,))[0], d["label"], (v.letters or (EMPTY,))[0]) for u, v, d in g.edges(data=True)}
    elapsed = time.perf_counter() - start
    report(1, "B^{1,1} affine crystal", g.number_of_nodes() == 8 and edges == FIGURE_EDGES and elapsed < 1,
           f"{g.number_of_nodes()} nodes, {len(edges)} edges, {elapsed:.2f}s")


def test_criterion_02_highest_weight_enumeration(report):
    start = time.perf_counter()
    ok = all(set(R.enumerate_hw(((1, s),))) == {R.hw1_rc(k, s) for k in range(s + 1)} for s in range(1, 7))
    ok &= all(_multiset(R.enumerate_hw(((2, s),))) == _multiset(R.hw2_rc(p, s) for p in hw2_params(s))
              for s in range(1, 5))
    sets = [((1, s),) for s in range(1, 7)] + [((2, s),) for s in range(1, 5)] + BIJECTION_SETS[:7]
    ok &= all(_multiset(kleber.virtual_kleber(f)) == _multiset(R.enumerate_hw(f)) for f in sets)
    elapsed = time.perf_counter() - start
    report(2, "highest weight enumeration and virtual Kleber", ok and elapsed < 30, f"{elapsed:.1f}s")


def test_criterion_03_decomposition_and_grading(report):
    res = cli.suite_decomposition(4)
    report(3, "B^{2,s} multiplicities and grading, s <= 4", res["pass"])


def test_criterion_04_delta_and_phi_examples(report):
    F = ((1, 1), (2, 1), (1, 2))
    cases = [
        (((4, 1), (4,)), ((3, 1), (-2,)), "3", ((4,), (3,)), ((3,), (-2,))),
        (((4, 1), (4,)), ((5, 1), (-2,)), "-2", ((2,), (2,)), ((4,), (-1,))),
        (((2, 2, 2, 1, 1), (2, 1, 1)), ((-1, -1, -1, 1, -1), (1, 0, 0)), "-1", ((2, 1, 1), (1, 1)), ((-1, 1, -1), (0, 0))),
    ]
    ok = True
    for nu, rig, letter, nu2, rig2 in cases:
        y, b, _ = B.delta(R.make_rc(F, nu, rig))
        ok &= b == letter and y == R.make_rc(F[1:], nu2, rig2)
    x = R.make_rc(F, ((4, 1), (4,)), ((3, 1), (-2,)))
    trace = []
    t = B.phi(x, trace)
    letters = [b for step, _, b in trace if step == "delta"]
    states = [(y.nu(1), y.nu(2), y.riggings(1), y.riggings(2)) for step, y, _ in trace if step == "delta"]
    ok &= letters == ["3", "-3", "3", "1", "3"]
    ok &= states == [((4,), (3,), (3,), (-2,)), ((2,), (2,), (5,), (-2,)), ((1,), (1,), (2,), (-1,)),
                     ((1,), (1,), (2,), (-1,)), ((), (), (), ())]
    ok &= cli.format_tensor(t) == "[[3]] ⊗ [[3],[-3]] ⊗ [[1,3]]"
    report(4, "delta examples and the Phi chain", ok, cli.format_tensor(t))


def test_criterion_05_bijection(report):
    bad = []
    for f in BIJECTION_SETS:
        if not cli.suite_bijection(f, full=False)["pass"]:
            bad.append(f)
    report(5, "Phi bijective on highest weights, Phi^-1 o Phi = id", not bad, f"{len(BIJECTION_SETS)} sets, failures {bad}")


def test_criterion_06_classical_isomorphism(report):
    bad = []
    total = 0
    for f in BIJECTION_SETS:
        res = cli.suite_bijection(f, full=True)
        total += res["elements"]
        if not res["pass"]:
            bad.append((f, res["problems"]))
    report(6, "Phi intertwines e_a, f_a on full crystals", not bad, f"{total} elements, failures {bad}")


def test_criterion_07_filling(report):
    r2 = cli.suite_filling(2, 3)
    r1 = cli.suite_filling(1, 4)
    report(7, "filling tables and fill = Phi o iota", r2["pass"] and r1["pass"], f"{r2['problems']} {r1['problems']}")


def test_criterion_08_r_matrix(report):
    res = cli.suite_rmatrix(5)
    report(8, "R-matrix table, R o R = id, B^{1,1} (x) B^{2,1}", res["pass"], f"{res['checked']} elements")


def test_criterion_09_x_equals_m(report):
    bad = [f for f in XM_SETS if not cli.suite_xm(f)["pass"]]
    report(9, "X = M and both M paths agree", not bad, f"failures {bad}")


def test_criterion_10_cocharge_lemmas(report):
    lt_sets = [f for f in BIJECTION_SETS if (2, 1) in f]
    tested = failures = 0
    for f in lt_sets:
        res = cli.cocharge_lt_check(f)
        tested += res["tested"]
        failures += res["failures"]
    invariant = True
    for f in [((1, s),) for s in range(1, 4)] + [((2, s),) for s in range(1, 4)]:
        for x in R.rc_elements(f):
            for a in (1, 2):
                y = x.f(a)
                invariant &= y is None or R.cocharge(y) == R.cocharge(x)
    report(10, "cocharge under lt and classical invariance", tested > 0 and failures == 0 and invariant,
           f"lt: {tested} tested, {failures} failures")


def test_criterion_11_virtualization(report):
    res = cli.suite_virtualization(3)
    report(11, "virtualization of rigged configurations and tableaux", res["pass"], f"{res['checked']} elements")


def test_criterion_12_affine_conjecture(report):
    res = cli.suite_affine_conjecture(2)
    detail = f"{res['checked']} checks, {len(res['counterexamples'])} counterexamples, figure {res['figure']['pass']}"
    report(12, "RC affine operators against the coordinate model", res["pass"], detail)


def test_criterion_13_psi_involution(report):
    ok = True
    for s in (1, 2, 3):
        for b in b1s_elements(s):
            p = psi(b)
            ok &= psi(p) == b and p.weight() == tuple(-x for x in b.weight())
            for a in (0, 1, 2):
                fb, eb = b.f(a), b.e(a)
                ok &= p.e(a) == (None if fb is None else psi(fb))
                ok &= p.f(a) == (None if eb is None else psi(eb))
                ok &= p.epsilon(a) == b.phi(a) and p.phi(a) == b.epsilon(a)
    report(13, "psi exchanges e_a and f_a, negates weights", ok)
