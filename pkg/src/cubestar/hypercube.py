"""Combinatorial model of the n-dimensional hypercube Q_n.

Vertices are plain ints in ``[0, 2**n)``; bit ``d`` of a vertex is its
``d``-th coordinate.  Edges are identified by ``(dim, base)`` where ``base``
is the endpoint with bit ``dim`` clear, and densely numbered as

    dense_id = dim * 2**(n-1) + rank(base)

where ``rank`` squeezes bit ``dim`` out of ``base``.  Edge sets over Q_n are
therefore plain bit vectors of length ``n * 2**(n-1)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, NamedTuple

import numpy as np

MAX_DIM = 16


def check_dim(n: int, lo: int = 1) -> None:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise TypeError(f"dimension must be an int, got {type(n).__name__}")
    if not lo <= n <= MAX_DIM:
        raise ValueError(f"dimension {n} outside supported range [{lo}, {MAX_DIM}]")


def check_vertex(v: int, n: int) -> None:
    if not 0 <= v < (1 << n):
        raise ValueError(f"vertex {v} out of range for Q_{n}")


class Edge(NamedTuple):
    """Edge of Q_n along coordinate ``dim``; ``base`` has that bit clear."""

    dim: int
    base: int

    @property
    def top(self) -> int:
        return self.base | (1 << self.dim)

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.base, self.base | (1 << self.dim)


def edge_count(n: int) -> int:
    """Number of edges of Q_n, ``n * 2**(n-1)``."""
    if n < 1:
        raise ValueError("Q_n needs n >= 1")
    return n << (n - 1)


def neighbors(v: int, n: int) -> list[int]:
    """Neighbours of ``v`` in Q_n, in ascending dimension order."""
    check_vertex(v, n)
    return [v ^ (1 << d) for d in range(n)]


def layer(v: int) -> int:
    """Hamming weight of ``v`` (the index of its weight layer)."""
    if v < 0:
        raise ValueError("vertex masks are non-negative")
    return bin(v).count("1")


def layer_size(n: int, i: int) -> int:
    if not 0 <= i <= n:
        raise ValueError(f"layer {i} out of range for Q_{n}")
    return comb(n, i)


def layer_vertices(n: int, i: int) -> list[int]:
    """Vertices of weight ``i`` in ascending order."""
    layer_size(n, i)
    return [v for v in range(1 << n) if layer(v) == i]


def _rank(base: int, dim: int) -> int:
    low = base & ((1 << dim) - 1)
    return low | ((base >> (dim + 1)) << dim)


def _unrank(rank: int, dim: int) -> int:
    low = rank & ((1 << dim) - 1)
    return low | ((rank >> dim) << (dim + 1))


def edge_id(n: int, dim: int, base: int) -> int:
    """Dense index of the edge ``(dim, base)``."""
    if not 0 <= dim < n:
        raise ValueError(f"dimension {dim} out of range for Q_{n}")
    check_vertex(base, n)
    if base >> dim & 1:
        raise ValueError(f"base {base:0{n}b} has bit {dim} set")
    return (dim << (n - 1)) + _rank(base, dim)


def edge_from_id(n: int, eid: int) -> Edge:
    if not 0 <= eid < edge_count(n):
        raise ValueError(f"edge id {eid} out of range for Q_{n}")
    dim, rank = divmod(eid, 1 << (n - 1))
    return Edge(dim, _unrank(rank, dim))


def edge_between(n: int, a: int, b: int) -> int:
    """Dense index of the edge joining ``a`` and ``b``."""
    check_vertex(a, n)
    check_vertex(b, n)
    x = a ^ b
    if x == 0 or x & (x - 1):
        raise ValueError(f"{a:0{n}b} and {b:0{n}b} are not adjacent in Q_{n}")
    dim = x.bit_length() - 1
    return edge_id(n, dim, min(a, b))


def incident_edges(v: int, n: int) -> list[int]:
    """Dense ids of the n edges at ``v``, in ascending dimension order."""
    check_vertex(v, n)
    half = 1 << (n - 1)
    return [d * half + _rank(v & ~(1 << d), d) for d in range(n)]


@lru_cache(maxsize=None)
def _endpoint_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    half = 1 << (n - 1)
    ranks = np.arange(half, dtype=np.int64)
    bases = []
    for d in range(n):
        low = ranks & ((1 << d) - 1)
        bases.append(low | ((ranks >> d) << (d + 1)))
    base = np.concatenate(bases)
    dims = np.repeat(np.arange(n, dtype=np.int64), half)
    top = base | (np.int64(1) << dims)
    base.flags.writeable = False
    top.flags.writeable = False
    return base, top


def endpoint_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Read-only arrays ``(base, top)`` indexed by dense edge id."""
    check_dim(n)
    return _endpoint_arrays(n)


@dataclass(frozen=True)
class CubeAutomorphism:
    """Symmetry of Q_n: coordinate ``i`` of the image is coordinate
    ``perm[i]`` of the source, after which the bits in ``flip`` are
    complemented."""

    perm: tuple[int, ...]
    flip: int = 0

    def __post_init__(self) -> None:
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise ValueError(f"{self.perm} is not a permutation of range({n})")
        if not 0 <= self.flip < (1 << n):
            raise ValueError(f"flip mask {self.flip} out of range for Q_{n}")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "CubeAutomorphism":
        return cls(tuple(range(n)), 0)

    def __call__(self, v: int) -> int:
        return apply_automorphism(self, v)

    def map_edge(self, eid: int) -> int:
        a, b = edge_from_id(self.n, eid).endpoints
        return edge_between(self.n, self(a), self(b))


def apply_automorphism(a: CubeAutomorphism, v: int) -> int:
    check_vertex(v, a.n)
    out = 0
    for i, src in enumerate(a.perm):
        out |= ((v >> src) & 1) << i
    return out ^ a.flip


def automorphisms(n: int) -> Iterator[CubeAutomorphism]:
    """All ``n! * 2**n`` automorphisms of Q_n."""
    for perm in itertools.permutations(range(n)):
        for flip in range(1 << n):
            yield CubeAutomorphism(perm, flip)
