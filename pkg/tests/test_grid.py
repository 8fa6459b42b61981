import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import edge_set
from torusham.arith import DomainError, Moduli
from torusham.grid import Rectangle, TorusDigraph, Vertex, in_neighbors, out_neighbors, vertex_count


def test_plain_out_neighbors():
    assert out_neighbors(TorusDigraph.product(3, 5), (0, 0)) == {(1, 0), (0, 1)}


def test_pushed_vertex_points_backwards():
    g = TorusDigraph.pushed(3, 5, at=(0, 0))
    assert out_neighbors(g, (0, 0)) == {(2, 0), (0, 4)}
    assert in_neighbors(g, (0, 0)) == {(1, 0), (0, 1)}


def test_deleted_rectangle_drops_edges(derived):
    g = TorusDigraph.rect_deleted(3, 5)
    assert out_neighbors(g, (2, 0)) == {tuple(v) for v in derived["deleted_out_3_5_at_2_0"]}
    assert out_neighbors(g, (2, 0)) == {(2, 1)}


@pytest.mark.parametrize(
    "g, count",
    [(TorusDigraph.product(3, 5), 15), (TorusDigraph.rect_deleted(3, 5), 11), (TorusDigraph.pushed(3, 5), 15)],
)
def test_vertex_count(g, count):
    assert vertex_count(g) == count == len(list(g.vertices()))


def test_rectangle_validation():
    with pytest.raises(DomainError):
        Rectangle(0, 2)
    with pytest.raises(DomainError):
        TorusDigraph.rect_deleted(3, 5, 4, 2)
    with pytest.raises(DomainError):
        TorusDigraph.rect_deleted(3, 5, 3, 5)


def test_rectangle_wraps_around():
    g = TorusDigraph.rect_deleted(4, 5, 2, 2, origin=(3, 4))
    assert set(g.deleted.members(g.mod)) == {(3, 4), (0, 4), (3, 0), (0, 0)}
    assert g.is_deleted(Vertex(-1, -1))


instances = st.tuples(st.integers(2, 7), st.integers(2, 7)).flatmap(
    lambda mn: st.tuples(
        st.just(mn[0]),
        st.just(mn[1]),
        st.none() | st.tuples(st.integers(0, mn[0] - 1), st.integers(0, mn[1] - 1)),
        st.none()
        | st.tuples(
            st.integers(1, mn[0] - 1) if mn[0] > 2 else st.just(1),
            st.integers(1, mn[1] - 1) if mn[1] > 2 else st.just(1),
            st.tuples(st.integers(0, mn[0] - 1), st.integers(0, mn[1] - 1)),
        ),
    )
)


def _graph(m, n, pushed, rect):
    deleted = None if rect is None else Rectangle(rect[0], rect[1], Vertex(*rect[2]))
    return TorusDigraph(Moduli(m, n), pushed_at=None if pushed is None else Vertex(*pushed), deleted=deleted)


@settings(max_examples=200, deadline=None)
@given(instances)
def test_edges_match_definition(inst):
    m, n, pushed, rect = inst
    g = _graph(m, n, pushed, rect)
    verts, edges = edge_set(m, n, pushed=pushed, rect=rect)
    assert list(g.vertices()) == verts
    assert set(g.edges()) == edges
    for v in verts:
        assert g.in_neighbors(v) == {u for u, w in edges if w == v}


@settings(max_examples=100, deadline=None)
@given(instances)
def test_dense_views_agree(inst):
    m, n, pushed, rect = inst
    g = _graph(m, n, pushed, rect)
    alive, out_adj = g.adjacency()
    assert np.array_equal(alive, g.alive_mask())
    pairs = np.array(list(itertools.product(range(m * n), repeat=2)))
    mask = g.edge_mask(pairs[:, 0], pairs[:, 1])
    dense = {(int(t), int(h)) for t, h in pairs[mask]}
    from_adj = {(t, int(h)) for t in range(m * n) for h in out_adj[t] if h >= 0}
    assert dense == from_adj == {(g.index(u), g.index(w)) for u, w in g.edges()}


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 9), st.integers(2, 9), st.integers(0, 8), st.integers(0, 8))
def test_pushing_twice_is_identity(m, n, pi, pj):
    g = TorusDigraph.pushed(m, n, at=(pi, pj))
    p = g.pushed_at
    edges = set(g.edges())
    touching = {e for e in edges if p in e}
    again = (edges - touching) | {(w, u) for u, w in touching}
    assert again == set(TorusDigraph.product(m, n).edges())


def test_pushed_valence_is_preserved():
    g = TorusDigraph.pushed(5, 7)
    for v in g.vertices():
        assert len(g.out_neighbors(v)) + len(g.in_neighbors(v)) == 4
