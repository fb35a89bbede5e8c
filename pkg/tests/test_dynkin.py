import pytest

from starq.dynkin import (
    A,
    D,
    DynkinType,
    E,
    Family,
    coxeter_data,
    predecessors,
    successors,
    tree_edges,
)


def test_validation():
    with pytest.raises(ValueError):
        DynkinType(Family.A, 0)
    with pytest.raises(ValueError):
        DynkinType(Family.D, 3)
    for r in (5, 9):
        with pytest.raises(ValueError):
            DynkinType(Family.E, r)


@pytest.mark.parametrize(
    "d,h,h_star",
    [
        (A(1), 2, None),
        (A(5), 6, None),
        (D(4), 6, 3),
        (D(5), 8, 8),
        (D(6), 10, 5),
        (D(9), 16, 16),
        (E(6), 12, None),
        (E(7), 18, 9),
        (E(8), 30, 15),
    ],
)
def test_coxeter_numbers(d, h, h_star):
    c = coxeter_data(d)
    assert c.h == h
    assert c.m_delta == h - 1
    assert c.h_star == h_star


def test_nodes_and_edges_a():
    d = A(4)
    assert d.nodes == (1, 2, 3, 4)
    assert tree_edges(d) == ((1, 2), (2, 3), (3, 4))


def test_nodes_and_edges_d():
    d = D(5)
    assert tree_edges(d) == ((1, 2), (2, 3), (3, 4), (3, 5))
    assert d.exceptional_nodes == (4, 5)
    assert d.node_name(4) == "4-"
    assert d.node_name(5) == "4+"
    assert d.node_name(2) == "2"


def test_nodes_and_edges_e():
    d = E(6)
    assert tree_edges(d) == ((1, 2), (2, 3), (3, 4), (4, 5), (3, 6))
    d = E(8)
    assert (5, 8) in tree_edges(d)  # branch node attached below n-3


@pytest.mark.parametrize("d", [A(1), A(6), D(4), D(7), E(6), E(7), E(8)])
def test_edge_maps_consistent(d):
    succ, pred = successors(d), predecessors(d)
    edges = set(tree_edges(d))
    assert len(edges) == d.rank - 1
    for v, w in edges:
        assert w in succ[v] and v in pred[w]
        assert v < w  # natural order is a topological order
