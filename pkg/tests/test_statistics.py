import pytest

from triality import statistics as S
from triality.core import Tensor
from triality.tableaux import EMPTY, column_tableau, highest_row, row


def test_q_binomial():
    assert S.poly_to_dict(S.q_binomial(4, 2)) == {0: 1, 1: 1, 2: 2, 3: 1, 4: 1}
    assert S.q_binomial(2, 3).is_zero


@pytest.mark.parametrize("s", [2, 3, 4, 5])
def test_r_matrix_closed_form_cases(s):
    one = row(1, ["1"])
    for n in range(1, s):
        t = Tensor((row(1, ["2"]), highest_row(s, n)))
        expected = Tensor((row(s, ["1"] * (n - 1) + ["2", "0"]), one))
        assert S.r_matrix(t) == expected
        t = Tensor((row(1, []), highest_row(s, n)))
        assert S.r_matrix(t) == Tensor((highest_row(s, n), row(1, [])))
    t = Tensor((one, highest_row(s)))
    assert S.r_matrix(t) == Tensor((highest_row(s), one))


@pytest.mark.parametrize("s", [1, 2, 3, 4, 5])
def test_r_matrix_explicit_agrees(s):
    for t, r in S.r_matrix_table(1, s).items():
        assert S.r_matrix_explicit(t) == r


def test_r_matrix_involutive():
    for s, sp in [(1, 2), (2, 2), (2, 3), (1, 4)]:
        fwd, back = S.r_matrix_table(s, sp), S.r_matrix_table(sp, s)
        for k, v in fwd.items():
            assert back[v] == k


def test_local_energy_normalisation():
    for s, sp in [(1, 1), (1, 2), (2, 3)]:
        assert S.local_energy(Tensor((highest_row(s), highest_row(sp)))) == 0


def test_d_single():
    assert S.d_single(highest_row(4)) == 0
    assert S.d_single(highest_row(5, 3)) == 2
    assert S.d_single(column_tableau(EMPTY, EMPTY)) == 3
    assert S.d_single(column_tableau("1", "2")) == 0


def test_energy_trivial_cases():
    u = Tensor((highest_row(2), highest_row(1), highest_row(3)))
    assert S.energy(u) == 0
    b = highest_row(5, 3)
    assert S.energy(Tensor((b,))) == S.d_single(b) == 2


def test_energy_two_evaluations_agree():
    for t in S.row_tensor_hw((1, 2, 1)):
        assert S.energy(t) == S.energy_terms(t)


def test_m_b21():
    M = S.M_poly(((2, 1),))
    assert S.poly_to_dict(M[(1, 0)]) == {1: 1, 2: 1}
    assert S.poly_to_dict(M[(0, 1)]) == {0: 1}


@pytest.mark.parametrize("shape", [(1, 1), (1, 1, 1), (2, 1), (2, 2)])
def test_x_equals_m(shape):
    factors = S.shape_to_factors(shape)
    X = S.X_poly(shape)
    M = S.M_poly(factors)
    assert set(X) == set(M)
    for w in X:
        assert X[w] == M[w]
    Mb = S.M_poly_binomial(factors)
    assert all(Mb[w] == M[w] for w in M)


def test_grading_bijection():
    assert S.grading_bijection((0, 0, 0, 0)) == (0, 0, 0, 0)
    assert S.grading_bijection((1, 1, 0, 0)) == (1, 0, 0, 1)
    assert S.gr((1, 0, 0, 1)) == 4
    for s in range(1, 5):
        for r in S.grading_set(s):
            assert S.grading_bijection(S.grading_bijection_inv(r)) == r


@pytest.mark.parametrize("s", [1, 2, 3])
def test_decomposition(s):
    d = S.decomposition_check(s)
    assert d["multiplicities_match"] and d["grading_match"]
