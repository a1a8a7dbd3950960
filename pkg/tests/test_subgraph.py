import random

import numpy as np
import pytest

from cubestar.construct import extremal_pair
from cubestar.hypercube import edge_between, edge_count
from cubestar.subgraph import (
    CubeSubgraph,
    EdgeStateError,
    cross_edges,
    cube_product,
    full_degree_set,
    min_degree,
    top_dimension_edges,
)

import oracles


def test_full():
    assert CubeSubgraph.full(3).edge_count == 12
    assert CubeSubgraph.full(3).degree(0) == 3
    assert CubeSubgraph.full(1).edge_count == 1
    with pytest.raises(ValueError):
        CubeSubgraph.full(17)


def test_delete_add_involution():
    g = CubeSubgraph.full(3)
    h = g.copy()
    e = edge_between(3, 0b000, 0b001)
    h.delete_edge(e)
    assert h.degree(0b000) == 2 and h.degree(0b001) == 2
    assert min_degree(h) == 2
    h.add_edge(e)
    assert h == g
    assert h.edges.tobytes() == g.edges.tobytes()


def test_double_add_and_delete_raise():
    g = CubeSubgraph.full(3)
    with pytest.raises(EdgeStateError):
        g.add_edge(0)
    g.delete_edge(0)
    with pytest.raises(EdgeStateError):
        g.delete_edge(0)


def test_full_degree_set():
    assert full_degree_set(CubeSubgraph.full(3)) == set(range(8))
    assert min_degree(CubeSubgraph.full(3)) == 3


def test_extremal_g3_has_two_full_vertices():
    g = extremal_pair(3).g
    deg = oracles.degrees(3, oracles.edge_set(g))
    assert [v for v in range(8) if deg[v] == 3] == sorted(full_degree_set(g))
    assert len(full_degree_set(g)) == 2


def test_copy_is_independent():
    g = CubeSubgraph.full(4)
    h = g.copy()
    h.delete_edge(5)
    assert g.has_edge(5) and not h.has_edge(5)
    assert g.degree(0) == 4


def test_degree_coherence_random_toggles():
    rng = random.Random(1)
    n = 6
    g = CubeSubgraph.full(n)
    m = edge_count(n)
    for step in range(100_000):
        i = rng.randrange(m)
        if g.edges[i]:
            g.delete_edge(i)
        else:
            g.add_edge(i)
        if step % 10_000 == 0:
            assert int(g.deg.sum()) == 2 * g.edge_count
    assert oracles.degrees(n, oracles.edge_set(g)) == g.deg.tolist()
    g.check()
    assert int(g.deg.sum()) == 2 * g.edge_count


def test_debug_mode_checks_every_toggle(monkeypatch):
    monkeypatch.setattr(CubeSubgraph, "debug", True)
    g = CubeSubgraph.full(3)
    g.delete_edge(0)
    g.deg[0] += 1  # corrupt the bookkeeping
    with pytest.raises(AssertionError):
        g.delete_edge(1)


def test_neighbors_and_missing():
    g = CubeSubgraph.full(3)
    g.delete_edge(edge_between(3, 0, 2))
    assert g.neighbors(0) == [1, 4]
    assert g.missing_edges(0) == [edge_between(3, 0, 2)]


def test_cube_product_layout():
    rng = np.random.default_rng(3)
    for n in range(1, 7):
        lo = CubeSubgraph(n, rng.random(edge_count(n)) < 0.5)
        hi = CubeSubgraph(n, rng.random(edge_count(n)) < 0.5)
        big = cube_product(lo, hi)
        want = {(a, b) for a, b in oracles.edge_set(lo)}
        want |= {(a | 1 << n, b | 1 << n) for a, b in oracles.edge_set(hi)}
        want |= {(v, v | 1 << n) for v in range(1 << n)}
        assert oracles.edge_set(big) == want
        big.check()


@pytest.mark.parametrize("n, count", [(1, 2), (3, 8), (4, 16)])
def test_cross_edges(n, count):
    if n >= 3:
        p = extremal_pair(n)
        left, right = p.g, p.g_prime
    else:
        left = right = CubeSubgraph.full(n)
    rep = cross_edges(left, right)
    assert rep.count == count == len(rep.pairs)
    assert all(b == a | (1 << n) for a, b in rep.pairs)


def test_cross_edges_dimension_mismatch():
    with pytest.raises(ValueError):
        cross_edges(CubeSubgraph.full(3), CubeSubgraph.full(4))


def test_top_dimension_edges_of_extremal_g4():
    assert top_dimension_edges(extremal_pair(4).g).count == 8
