import pytest

from triality import core
from triality.core import D4, G2, Tensor
from triality.tableaux import km_generate, row


def test_simple_roots():
    assert core.simple_root(G2, 1) == (2, -1)
    assert core.simple_root(G2, 2) == (-3, 2)
    assert core.simple_root(D4, 3) == (0, -1, 2, 0)


@pytest.mark.parametrize("a,b,value", [(1, 1, 2), (1, 2, -3), (2, 1, -3), (2, 2, 6)])
def test_root_pairing(a, b, value):
    assert core.root_pairing(G2, a, b) == value


@pytest.mark.parametrize("lam,aff", [((5, -2), (-4, 5, -2)), ((0, 0), (0, 0, 0)), ((2, 1), (-7, 2, 1))])
def test_affinize(lam, aff):
    assert core.affinize(lam) == aff


def test_tensor_rule():
    one, two = row(1, ["1"]), row(1, ["2"])
    assert Tensor((one, one)).f(1) == Tensor((one, two))
    assert Tensor((two, one)).f(1) is None
    assert Tensor((one, one)).e(1) is None


def test_tensor_eps_phi_against_strings():
    letters = ["1", "2", "3", "0", "-3", "-2", "-1"]
    for x in letters:
        for y in letters:
            t = Tensor((row(1, [x]), row(1, [y])))
            for a in (1, 2):
                assert (t.epsilon(a), t.phi(a)) == core.string_lengths(t, a)


def test_to_highest_weight():
    one = row(1, ["1"])
    assert core.to_highest_weight(one) == (one, [])
    assert core.to_highest_weight(row(1, ["2"])) == (one, [1])
    assert core.to_highest_weight(row(1, ["-3"])) == (one, [1, 2, 1, 1])
    b = row(1, ["-3"])
    assert core.f_string(one, [1, 2, 1, 1]) == b


@pytest.mark.parametrize("lam", [(1, 0), (0, 1), (0, 0), (1, 1), (2, 0)])
def test_closure_sizes_match_weyl_dimension(lam):
    assert len(km_generate(lam)) == core.weyl_dimension(G2, lam)


def test_empty_closure():
    assert core.generate_closure([]).number_of_nodes() == 0


def test_format_weight():
    assert core.format_weight((5, -2)) == "5w1 - 2w2"
