import pytest

from triality import bijection as B
from triality import rc as R
from triality.core import Tensor, is_highest_weight
from triality.tableaux import Tableau, fill_1, highest_row, row

RUNNING = ((1, 1), (2, 1), (1, 2))


def state(x):
    return (x.nu(1), x.nu(2)), (x.riggings(1), x.riggings(2))


DELTA_EXAMPLES = [
    (((4, 1), (4,)), ((3, 1), (-2,)), "3", ((4,), (3,)), ((3,), (-2,))),
    (((4, 1), (4,)), ((5, 1), (-2,)), "-2", ((2,), (2,)), ((4,), (-1,))),
    (((2, 2, 2, 1, 1), (2, 1, 1)), ((-1, -1, -1, 1, -1), (1, 0, 0)), "-1",
     ((2, 1, 1), (1, 1)), ((-1, 1, -1), (0, 0))),
]


@pytest.mark.parametrize("nu,rig,letter,nu_out,rig_out", DELTA_EXAMPLES)
def test_delta_examples(nu, rig, letter, nu_out, rig_out):
    x = R.make_rc(RUNNING, nu, rig)
    y, b, trace = B.delta(x)
    assert b == letter == trace.letter
    assert y.factors == ((2, 1), (1, 2))
    assert state(y) == (nu_out, rig_out)


@pytest.mark.parametrize("nu,rig,letter,nu_out,rig_out", DELTA_EXAMPLES)
def test_delta_inverse_examples(nu, rig, letter, nu_out, rig_out):
    y = R.make_rc(RUNNING[1:], nu_out, rig_out)
    assert B.delta_inv(y, letter) == R.make_rc(RUNNING, nu, rig)


def test_delta_trace_lengths():
    x = R.make_rc(RUNNING, ((4, 1), (4,)), ((5, 1), (-2,)))
    trace = B.delta(x)[2].to_json()
    assert (trace["l1"], trace["l2"], trace["l3"], trace["lb3"], trace["lb2"], trace["lb1"]) == (1, 3, 3, 4, 4, "inf")


def test_delta_inverse_trivial():
    assert B.delta_inv(R.empty_rc(()), "1") == R.empty_rc(((1, 1),))


def test_delta_round_trip():
    for x in R.rc_elements(((1, 1), (1, 2))):
        y, b, _ = B.delta(x)
        assert B.delta_inv(y, b) == x


def test_ls():
    x = R.make_rc(((1, 2),), ((1,), (1,)), ((2,), (-1,)))
    y = B.ls(x)
    assert y.factors == ((1, 1), (1, 1))
    assert state(y) == state(x)
    assert (x.vacancy(1, 1), y.vacancy(1, 1)) == (2, 3)
    assert B.ls(R.empty_rc(((1, 2),))) == R.empty_rc(((1, 1), (1, 1)))


def test_rb_on_empty():
    y = B.rb(R.empty_rc(((1, 1), (2, 1))))
    assert state(y) == (((1,), ()), ((0,), ()))


def test_phi_worked_example():
    x = R.make_rc(RUNNING, ((4, 1), (4,)), ((3, 1), (-2,)))
    trace = []
    t = B.phi(x, trace)
    assert t == Tensor((Tableau((("3",),)), Tableau((("3",), ("-3",))), Tableau((("1", "3"),))))
    steps = [(step, state(y), letter) for step, y, letter in trace]
    assert steps == [
        ("delta", (((4,), (3,)), ((3,), (-2,))), "3"),
        ("lt", (((4, 1), (3,)), ((3, 2), (-2,))), None),
        ("delta", (((2,), (2,)), ((5,), (-2,))), "-3"),
        ("delta", (((1,), (1,)), ((2,), (-1,))), "3"),
        ("ls", (((1,), (1,)), ((2,), (-1,))), None),
        ("delta", (((1,), (1,)), ((2,), (-1,))), "1"),
        ("delta", (((), ()), ((), ())), "3"),
    ]
    assert B.phi_inv(t) == x


def test_phi_simple_values():
    assert B.phi(R.hw1_rc(3, 5)) == Tensor((Tableau((("1", "1", "1", "-1", "1"),)),))
    assert B.phi(R.hw1_rc(3, 5)) == Tensor((fill_1(highest_row(5, 3)),))
    one = Tableau((("1",),))
    assert B.phi(R.empty_rc(((1, 1),) * 3)) == Tensor((one,) * 3)


@pytest.mark.parametrize("factors", [((1, 1), (1, 1)), ((2, 1),), ((1, 2), (1, 1)), ((2, 2),), ((1, 1), (2, 1))])
def test_phi_hw_bijection(factors):
    hw = R.enumerate_hw(factors)
    images = [B.phi(x) for x in hw]
    assert len(set(images)) == len(hw)
    for x, t in zip(hw, images):
        assert is_highest_weight(t)
        assert t.weight() == x.weight()
        assert B.phi_inv(t) == x


def test_phi_intertwines_on_b12():
    for x in R.rc_elements(((1, 2),)):
        t = B.phi(x)
        for a in (1, 2):
            y = x.f(a)
            assert t.f(a) == (None if y is None else B.phi(y))


def test_bad_leading_factor():
    with pytest.raises(ValueError):
        B.delta(R.empty_rc(((2, 1),)))


def test_r_matrix_through_rcs():
    # 2 (x) 1^n -> 1^(n-1) 2 0 (x) 1 for n < s
    out = B.r_matrix_rc(row(1, ["2"]), row(3, ["1", "1"]))
    assert out == Tensor((row(3, ["1", "2", "0"]), row(1, ["1"])))
    out = B.r_matrix_rc(row(1, []), row(3, ["1"]))
    assert out == Tensor((row(3, ["1"]), row(1, [])))
