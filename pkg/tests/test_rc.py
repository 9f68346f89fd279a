import pytest

from triality import rc as R
from triality.tableaux import hw2_params

RUNNING = ((1, 1), (2, 1), (1, 2))


@pytest.fixture
def running():
    return R.make_rc(RUNNING, ((4, 1), (4,)), ((3, 1), (-2,)))


def test_vacancy_numbers(running):
    assert running.vacancy(1, 4) == 5
    assert running.vacancy(1, 1) == 1
    assert running.vacancy(2, 4) == -2
    assert R.empty_rc(()).vacancy(1, 3) == 0
    assert running.is_valid()


def test_crystal_operators(running):
    assert running.e(2) == R.make_rc(RUNNING, ((4, 1), (3,)), ((0, 1), (-1,)))
    assert running.f(1) == R.make_rc(RUNNING, ((4, 1, 1), (4,)), ((1, -1, -1), (-1,)))
    assert running.e(1) is None
    assert running.f(2) is None


def test_weights(running):
    assert running.weight() == (5, -2)
    assert R.rc_affine_weight(running) == (-4, 5, -2)
    hw = R.make_rc(RUNNING, ((1, 1), (1,)), ((1, 0), (0,)))
    assert hw.is_highest_weight()
    assert hw.weight() == (2, 1)
    assert R.rc_affine_weight(hw) == (-7, 2, 1)
    assert R.empty_rc(((1, 2), (2, 1), (1, 1))).weight() == (3, 1)


def test_json_round_trip(running):
    assert R.from_json(running.to_json()) == running


@pytest.mark.parametrize("s", range(1, 7))
def test_hw_b1s_closed_form(s):
    assert set(R.enumerate_hw(((1, s),))) == {R.hw1_rc(k, s) for k in range(s + 1)}
    for k in range(s + 1):
        x = R.hw1_rc(k, s)
        assert x.nu(1) == ((s - k,) * 2 if k < s else ())
        assert set(x.riggings(1) + x.riggings(2)) <= {0}
        assert R.cocharge(x) == s - k


@pytest.mark.parametrize("s", range(1, 5))
def test_hw_b2s_closed_form(s):
    family = [R.hw2_rc(p, s) for p in hw2_params(s)]
    assert len(set(family)) == len(family)
    assert set(R.enumerate_hw(((2, s),))) == set(family)


@pytest.mark.parametrize("p", hw2_params(3))
def test_b2s_cocharge_and_complement(p):
    k1, k2, k3, k4 = p
    x = R.hw2_rc(p, 3)
    assert R.cocharge(x) == 3 * k1 + k2 + k3 + k4
    assert R.eta(x) == R.hw2_rc((k1, k2, k3, k2 - 2 * k3 - k4), 3)


def test_eta_involution():
    for x in R.enumerate_hw(((1, 2), (1, 1))):
        assert R.eta(R.eta(x)) == x


def test_empty_factors():
    assert R.enumerate_hw(()) == [R.empty_rc(())]


@pytest.mark.parametrize("factors", [((1, 1),), ((1, 2),), ((2, 1),), ((1, 1), (1, 1))])
def test_cocharge_classically_invariant(factors):
    for x in R.rc_elements(factors):
        for a in (1, 2):
            y = x.f(a)
            if y is not None:
                assert R.cocharge(y) == R.cocharge(x)


def test_unweighted_cocharge_differs_only_by_node_two():
    x = R.make_rc(RUNNING, ((1, 1), (1,)), ((1, 0), (0,)))
    assert R.cocharge(x) == R.cocharge(x, weighted=False)
    for y in R.enumerate_hw(((1, 1),) * 3):
        assert R.cocharge(y) - R.cocharge(y, weighted=False) == 2 * sum(y.riggings(2))


def test_affine_operators_partial_inverse():
    for s in (1, 2):
        for x in R.rc_elements(((1, s),)):
            y = R.rc_affine_f0(x)
            if y is not None:
                assert R.rc_affine_e0(y) == x
