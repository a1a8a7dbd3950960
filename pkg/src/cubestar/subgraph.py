"""Spanning subgraphs of Q_n stored as a bit vector over the edge slots."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .hypercube import (
    Edge,
    check_dim,
    check_vertex,
    edge_count,
    edge_id,
    endpoint_arrays,
    incident_edges,
)


class EdgeStateError(ValueError):
    """Raised on adding a present edge or deleting an absent one."""


def _as_id(n: int, e: int | Edge) -> int:
    if isinstance(e, Edge):
        return edge_id(n, e.dim, e.base)
    e = int(e)
    if not 0 <= e < edge_count(n):
        raise ValueError(f"edge id {e} out of range for Q_{n}")
    return e


class CubeSubgraph:
    """A spanning subgraph of Q_n.

    ``edges[i]`` says whether the edge with dense id ``i`` is present and
    ``deg[v]`` is kept in step with it.  Instances are mutable; use
    :meth:`copy` to branch.
    """

    #: when set, every mutation re-derives the degrees and compares
    debug = False

    __slots__ = ("n", "edges", "deg")

    def __init__(self, n: int, edges: np.ndarray | None = None):
        check_dim(n)
        self.n = n
        m = edge_count(n)
        if edges is None:
            edges = np.zeros(m, dtype=bool)
        else:
            edges = np.array(edges, dtype=bool)
            if edges.shape != (m,):
                raise ValueError(f"edge vector for Q_{n} must have length {m}")
        self.edges = edges
        self.deg = self._count_degrees()

    @classmethod
    def full(cls, n: int) -> "CubeSubgraph":
        check_dim(n)
        return cls(n, np.ones(edge_count(n), dtype=bool))

    @classmethod
    def empty(cls, n: int) -> "CubeSubgraph":
        return cls(n)

    @classmethod
    def from_deleted(cls, n: int, deleted: Iterable[int | Edge]) -> "CubeSubgraph":
        g = cls.full(n)
        for e in deleted:
            g.delete_edge(e)
        return g

    def _count_degrees(self) -> np.ndarray:
        base, top = endpoint_arrays(self.n)
        w = self.edges.astype(np.int32)
        deg = np.bincount(base, weights=w, minlength=1 << self.n)
        deg += np.bincount(top, weights=w, minlength=1 << self.n)
        return deg.astype(np.int32)

    def copy(self) -> "CubeSubgraph":
        g = object.__new__(CubeSubgraph)
        g.n = self.n
        g.edges = self.edges.copy()
        g.deg = self.deg.copy()
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CubeSubgraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edges, other.edges)

    def __repr__(self) -> str:
        return f"CubeSubgraph(n={self.n}, edges={self.edge_count}/{edge_count(self.n)})"

    # -- queries --------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return int(self.edges.sum())

    def has_edge(self, e: int | Edge) -> bool:
        return bool(self.edges[_as_id(self.n, e)])

    def degree(self, v: int) -> int:
        check_vertex(v, self.n)
        return int(self.deg[v])

    def neighbors(self, v: int) -> list[int]:
        """Neighbours of ``v`` in this subgraph, ascending by mask."""
        ids = incident_edges(v, self.n)
        return sorted(v ^ (1 << d) for d, i in enumerate(ids) if self.edges[i])

    def missing_edges(self, v: int) -> list[int]:
        """Dense ids of Q_n edges at ``v`` absent here, ascending."""
        return sorted(i for i in incident_edges(v, self.n) if not self.edges[i])

    def edge_ids(self) -> np.ndarray:
        return np.flatnonzero(self.edges)

    def deleted_ids(self) -> np.ndarray:
        return np.flatnonzero(~self.edges)

    def min_degree(self) -> int:
        return int(self.deg.min())

    def max_degree(self) -> int:
        return int(self.deg.max())

    def full_degree_set(self) -> set[int]:
        return {int(v) for v in np.flatnonzero(self.deg == self.n)}

    # -- mutation -------------------------------------------------------

    def add_edge(self, e: int | Edge) -> None:
        i = _as_id(self.n, e)
        if self.edges[i]:
            raise EdgeStateError(f"edge {i} already present")
        self._toggle(i, 1)

    def delete_edge(self, e: int | Edge) -> None:
        i = _as_id(self.n, e)
        if not self.edges[i]:
            raise EdgeStateError(f"edge {i} not present")
        self._toggle(i, -1)

    def _toggle(self, i: int, step: int) -> None:
        base, top = endpoint_arrays(self.n)
        self.edges[i] = step > 0
        self.deg[base[i]] += step
        self.deg[top[i]] += step
        if self.debug:
            self.check()

    def check(self) -> None:
        """Assert the stored degrees agree with a recount from the edges."""
        recount = self._count_degrees()
        if not np.array_equal(recount, self.deg):
            bad = np.flatnonzero(recount != self.deg)
            raise AssertionError(f"degree bookkeeping diverged at vertices {bad[:8].tolist()}")


def min_degree(g: CubeSubgraph) -> int:
    return g.min_degree()


def full_degree_set(g: CubeSubgraph) -> set[int]:
    return g.full_degree_set()


def cube_product(low: CubeSubgraph, high: CubeSubgraph) -> CubeSubgraph:
    """Subgraph of Q_{n+1}: ``low`` on the copy with new top bit 0, ``high``
    on the copy with top bit 1, joined by all ``2**n`` cross edges."""
    if low.n != high.n:
        raise ValueError(f"dimension mismatch: {low.n} vs {high.n}")
    n = low.n
    check_dim(n + 1)
    # Along dims < n, the rank of a vertex with top bit t is rank_n + t * 2**(n-1),
    # so each dim block of Q_{n+1} is [low block, high block].
    half = 1 << (n - 1)
    parts = []
    for d in range(n):
        parts.append(low.edges[d * half:(d + 1) * half])
        parts.append(high.edges[d * half:(d + 1) * half])
    parts.append(np.ones(1 << n, dtype=bool))
    return CubeSubgraph(n + 1, np.concatenate(parts))


@dataclass
class CrossEdgeReport:
    """Edges between the two copies of Q_n inside Q_{n+1}."""

    count: int
    pairs: list[tuple[int, int]] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.count != len(self.pairs):
            raise ValueError("count does not match pairs")


def top_dimension_edges(g: CubeSubgraph) -> CrossEdgeReport:
    """Present edges of ``g`` along its highest coordinate, as
    (low-copy vertex, high-copy vertex) pairs."""
    n = g.n
    half = 1 << (n - 1)
    block = g.edges[(n - 1) * half:]
    pairs = [(int(r), int(r) | half) for r in np.flatnonzero(block)]
    return CrossEdgeReport(len(pairs), pairs)


def cross_edges(left: CubeSubgraph, right: CubeSubgraph) -> CrossEdgeReport:
    """Cross edges between ``left`` and ``right`` once they are embedded as
    the two halves of Q_{n+1} by :func:`cube_product`."""
    return top_dimension_edges(cube_product(left, right))
