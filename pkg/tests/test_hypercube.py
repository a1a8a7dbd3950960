import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from cubestar.hypercube import (
    CubeAutomorphism,
    Edge,
    apply_automorphism,
    automorphisms,
    edge_between,
    edge_count,
    edge_from_id,
    edge_id,
    endpoint_arrays,
    incident_edges,
    layer,
    layer_size,
    layer_vertices,
    neighbors,
)


@pytest.mark.parametrize("n, expected", [(1, 1), (3, 12), (4, 32)])
def test_edge_count(n, expected):
    assert edge_count(n) == expected


def test_edge_count_rejects_zero():
    with pytest.raises(ValueError):
        edge_count(0)


def test_neighbors():
    assert neighbors(0b000, 3) == [0b001, 0b010, 0b100]
    assert neighbors(0b111, 3) == [0b110, 0b101, 0b011]
    assert neighbors(0, 1) == [1]
    with pytest.raises(ValueError):
        neighbors(8, 3)


def test_layers():
    assert layer(0b101) == 2
    assert layer_size(3, 1) == 3
    assert all(layer_size(n, 0) == 1 for n in range(1, 11))
    with pytest.raises(ValueError):
        layer_size(3, 4)


@pytest.mark.parametrize("n", range(1, 11))
def test_layer_sizes_and_inter_layer_edges(n):
    assert sum(layer_size(n, i) for i in range(n + 1)) == 2**n
    # edges between S_{i-1} and S_i: each vertex of S_i sends i edges down
    assert sum(i * layer_size(n, i) for i in range(1, n + 1)) == edge_count(n)


@pytest.mark.parametrize("n", [3, 5])
def test_layer_neighbour_split(n):
    for i in range(n + 1):
        verts = layer_vertices(n, i)
        assert len(verts) == comb(n, i)
        for v in verts:
            nb = [layer(w) for w in neighbors(v, n)]
            assert nb.count(i - 1) == i and nb.count(i + 1) == n - i


@pytest.mark.parametrize("n", range(1, 11))
def test_dense_id_round_trip(n):
    m = edge_count(n)
    base, top = endpoint_arrays(n)
    for i in range(m):
        e = edge_from_id(n, i)
        assert edge_id(n, e.dim, e.base) == i
        assert (base[i], top[i]) == e.endpoints
        assert bin(e.base ^ e.top).count("1") == 1
    assert len({(int(a), int(b)) for a, b in zip(base, top)}) == m


def test_edge_id_rejects_bad_base():
    with pytest.raises(ValueError):
        edge_id(3, 0, 0b001)
    with pytest.raises(ValueError):
        edge_between(3, 0, 3)


def test_incident_edges_match_neighbors():
    n = 5
    for v in range(1 << n):
        ends = [edge_from_id(n, i).endpoints for i in incident_edges(v, n)]
        assert sorted(a ^ b ^ v for a, b in ends) == sorted(neighbors(v, n))


def test_apply_automorphism_examples():
    assert apply_automorphism(CubeAutomorphism.identity(3), 0b011) == 0b011
    assert apply_automorphism(CubeAutomorphism((0, 1, 2), 0b111), 0b000) == 0b111
    assert apply_automorphism(CubeAutomorphism((2, 1, 0), 0), 0b001) == 0b100


def test_automorphism_validation():
    with pytest.raises(ValueError):
        CubeAutomorphism((0, 0, 1))
    with pytest.raises(ValueError):
        CubeAutomorphism((0, 1), 0b100)


def test_group_order():
    assert sum(1 for _ in automorphisms(3)) == 6 * 8
    images = {tuple(a(v) for v in range(8)) for a in automorphisms(3)}
    assert len(images) == 48


def test_automorphisms_preserve_adjacency_random():
    rng = random.Random(7)
    for _ in range(1000):
        n = rng.randint(1, 8)
        perm = list(range(n))
        rng.shuffle(perm)
        a = CubeAutomorphism(tuple(perm), rng.randrange(1 << n))
        u, v = edge_from_id(n, rng.randrange(edge_count(n))).endpoints
        x = a(u) ^ a(v)
        assert x and not x & (x - 1)


@settings(max_examples=200)
@given(st.integers(2, 8).flatmap(lambda n: st.tuples(st.just(n), st.permutations(range(n)),
                                                      st.integers(0, 2**n - 1), st.integers(0, 2**n - 1))))
def test_automorphism_is_bijective_isometry(args):
    n, perm, flip, v = args
    a = CubeAutomorphism(tuple(perm), flip)
    w = (v * 2654435761) % (1 << n)
    assert bin(a(v) ^ a(w)).count("1") == bin(v ^ w).count("1")


def test_edge_namedtuple():
    e = Edge(1, 0b100)
    assert e.top == 0b110 and e.endpoints == (0b100, 0b110)
