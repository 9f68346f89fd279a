from collections import Counter

import pytest

from triality import kleber as K
from triality import rc as R
from triality.core import D4


def multiset(rcs):
    return Counter((x.factors, x.parts) for x in rcs)


def test_empty_tree():
    tree = K.virtual_kleber_tree(())
    assert len(tree.nodes) == 1
    assert tree.root.weight == (0, 0, 0, 0)
    assert K.virtual_kleber(()) == [R.empty_rc(())]


def test_b13_chain():
    tree = K.virtual_kleber_tree(((1, 3),))
    assert [n.weight for n in tree.nodes] == [(0, 3, 0, 0), (0, 2, 0, 0), (0, 1, 0, 0), (0, 0, 0, 0)]


def test_simply_laced_tree():
    tree = K.kleber_tree(((1, 1), (1, 1)), D4)
    assert [n.weight for n in tree.nodes] == [(2, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 0)]


def test_virtual_factors():
    assert K.virtual_factors(((1, 2), (2, 1))) == ((2, 2), (1, 1), (3, 1), (4, 1))


@pytest.mark.parametrize("factors", [
    ((1, 1),), ((1, 3),), ((1, 6),), ((2, 1),), ((2, 2),), ((2, 3),),
    ((1, 1), (2, 1), (1, 2)), ((2, 1), (2, 1)), ((1, 3), (1, 2)), ((1, 1),) * 4,
])
def test_virtual_kleber_matches_brute_force(factors):
    assert multiset(K.virtual_kleber(factors)) == multiset(R.enumerate_hw(factors))


@pytest.mark.parametrize("factors", [((1, 1), (2, 1)), ((2, 2),), ((1, 1), (3, 1), (4, 1))])
def test_simply_laced_kleber_matches_brute_force(factors):
    tree = K.kleber_tree(factors, D4)
    assert multiset(K.highest_weight_rcs(tree)) == multiset(R.enumerate_hw(factors, cartan=D4))


@pytest.mark.parametrize("s", [1, 2, 3, 4])
def test_b2s_node_counts(s):
    counts = K.node_counts(K.virtual_kleber_tree(((2, s),)))
    assert counts == {(m1, m2): min(1 + m2, 1 + s - m1 - m2)
                      for m1 in range(s + 1) for m2 in range(s + 1 - m1)}


def test_b1s_nodes_devirtualize_to_closed_form():
    s = 4
    out = set(K.virtual_kleber(((1, s),)))
    assert out == {R.hw1_rc(k, s) for k in range(s + 1)}


def test_graph_export():
    g = K.virtual_kleber_tree(((2, 2),)).to_graph()
    assert g.number_of_nodes() == 7
    assert all("label" in d for _, _, d in g.edges(data=True))
