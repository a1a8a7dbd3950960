"""Double-star detection in subgraphs of Q_n.

An edge ``uv`` of a host graph carries a copy of S_{k,l} (u gets k leaves,
v gets l) exactly when

    |N(u) - {v}| >= k,  |N(v) - {u}| >= l,  |(N(u) | N(v)) - {u, v}| >= k + l.

Subgraphs of Q_n are triangle-free, so adjacent vertices never share a
neighbour and the union condition follows from the first two; it is still
evaluated so the detector stays exact for any host.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .hypercube import endpoint_arrays
from .subgraph import CubeSubgraph


@dataclass(frozen=True)
class DoubleStarPattern:
    k: int
    l: int

    def __post_init__(self) -> None:
        if self.k < 1 or self.l < 1:
            raise ValueError(f"double star needs k, l >= 1, got ({self.k}, {self.l})")

    @property
    def balanced(self) -> bool:
        return self.k == self.l

    @classmethod
    def parse(cls, text: str) -> "DoubleStarPattern":
        k, l = (int(x) for x in text.split(","))
        return cls(k, l)


@dataclass(frozen=True)
class EmbeddingWitness:
    center_u: int
    center_v: int
    leaves_u: tuple[int, ...]
    leaves_v: tuple[int, ...]

    def validate(self, g: CubeSubgraph, p: DoubleStarPattern | None = None) -> None:
        """Raise ``AssertionError`` unless this is a genuine copy in ``g``."""
        u, v = self.center_u, self.center_v
        nu, nv = set(g.neighbors(u)), set(g.neighbors(v))
        assert v in nu, f"centres {u}, {v} not adjacent in host"
        assert set(self.leaves_u) <= nu, "a u-leaf is not adjacent to u"
        assert set(self.leaves_v) <= nv, "a v-leaf is not adjacent to v"
        verts = [u, v, *self.leaves_u, *self.leaves_v]
        assert len(set(verts)) == len(verts), "witness vertices not distinct"
        if p is not None:
            assert (len(self.leaves_u), len(self.leaves_v)) == (p.k, p.l)


def _embed_at(g: CubeSubgraph, u: int, v: int, k: int, l: int) -> Optional[EmbeddingWitness]:
    nu = set(g.neighbors(u)) - {v}
    nv = set(g.neighbors(v)) - {u}
    common = nu & nv
    only_u = sorted(nu - common)
    only_v = sorted(nv - common)
    if len(nu) < k or len(nv) < l or len(nu | nv) < k + l:
        return None
    # exclusive leaves first, then share out the common ones
    lu = only_u[:k]
    lv = only_v[:l]
    spare = sorted(common)
    need_u = k - len(lu)
    lu += spare[:need_u]
    lv += spare[need_u:need_u + l - len(lv)]
    return EmbeddingWitness(u, v, tuple(sorted(lu)), tuple(sorted(lv)))


def contains_double_star(g: CubeSubgraph, p: DoubleStarPattern) -> Optional[EmbeddingWitness]:
    """First copy of ``p`` in ``g`` (edges scanned by ascending dense id,
    ``u`` the lower endpoint tried first), or ``None`` if ``g`` is free."""
    base, top = endpoint_arrays(g.n)
    db = g.deg[base] - 1
    dt = g.deg[top] - 1
    fwd = (db >= p.k) & (dt >= p.l)
    rev = (db >= p.l) & (dt >= p.k)
    cand = np.flatnonzero(g.edges & (fwd | rev))
    for i in cand:
        u, v = int(base[i]), int(top[i])
        w = None
        if fwd[i]:
            w = _embed_at(g, u, v, p.k, p.l)
        if w is None and rev[i]:
            w = _embed_at(g, v, u, p.k, p.l)
        if w is not None:
            return w
    return None


def is_balanced_free(g: CubeSubgraph) -> bool:
    """True iff ``g`` has no S_{n-1,n-1}, i.e. no edge joins two vertices
    of full degree n."""
    base, top = endpoint_arrays(g.n)
    full = g.deg == g.n
    return not bool(np.any(g.edges & full[base] & full[top]))


def balanced_pattern(n: int) -> DoubleStarPattern:
    return DoubleStarPattern(n - 1, n - 1)
