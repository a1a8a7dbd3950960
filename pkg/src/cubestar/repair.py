"""Min-degree normalisation of S_{n-1,n-1}-free subgraphs of Q_n.

While some vertex ``v`` has degree below ``n-1``, take its lowest missing
cube edge ``vp``.  If ``p`` has no full-degree neighbour the edge is simply
added; otherwise ``p`` has degree ``n-1`` and a full neighbour ``s``, and
``ps`` is traded for ``vp``.  Neither move creates a full-degree vertex next
to another, so freeness is kept, and the total deficiency
``sum(max(0, n-1-deg))`` drops by at least one per step.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Optional

import numpy as np

from .forbidden import is_balanced_free
from .hypercube import edge_between, edge_from_id
from .subgraph import CubeSubgraph


class NotFreeError(ValueError):
    """Input graph already contains S_{n-1,n-1}."""


@dataclass(frozen=True)
class RepairStep:
    kind: Literal["direct_add", "swap"]
    added: int
    removed: Optional[int] = None

    def __post_init__(self) -> None:
        if (self.kind == "swap") != (self.removed is not None):
            raise ValueError("a swap removes exactly one edge; a direct add none")


@dataclass
class RepairReport:
    steps: list[RepairStep] = field(default_factory=list)

    @property
    def edge_delta(self) -> int:
        return sum(s.kind == "direct_add" for s in self.steps)

    @property
    def was_edge_maximal(self) -> bool:
        """False when a direct add showed the input was not edge-maximal.

        True only means no such evidence turned up, not that the input is
        a maximum free subgraph.
        """
        return self.edge_delta == 0


def deficiency(g: CubeSubgraph) -> int:
    """``sum(max(0, n-1-deg(v)))``, an upper bound on the repair step count."""
    return int(np.maximum(0, g.n - 1 - g.deg).sum())


def repair_step(g: CubeSubgraph) -> Optional[RepairStep]:
    """Apply one add-or-swap move to ``g`` in place; ``None`` when done."""
    n = g.n
    low = np.flatnonzero(g.deg < n - 1)
    if low.size == 0:
        return None
    dmin = g.deg[low].min()
    v = int(low[g.deg[low] == dmin][0])
    added = g.missing_edges(v)[0]
    p = edge_from_id(n, added).endpoints
    p = p[1] if p[0] == v else p[0]
    full_nbrs = [s for s in g.neighbors(p) if g.deg[s] == n]
    if g.deg[p] <= n - 2 or not full_nbrs:
        g.add_edge(added)
        return RepairStep("direct_add", added)
    removed = edge_between(n, p, full_nbrs[0])
    g.delete_edge(removed)
    g.add_edge(added)
    return RepairStep("swap", added, removed)


def normalize_min_degree(g: CubeSubgraph) -> tuple[CubeSubgraph, RepairReport]:
    """Return a copy of ``g`` with minimum degree at least ``n-1``, still
    S_{n-1,n-1}-free and with no fewer edges, plus the list of moves."""
    if g.n < 3:
        raise ValueError(f"repair needs n >= 3, got {g.n}")
    if not is_balanced_free(g):
        raise NotFreeError(f"input contains S_{{{g.n - 1},{g.n - 1}}}")
    h = g.copy()
    report = RepairReport()
    limit = deficiency(h)
    while (step := repair_step(h)) is not None:
        report.steps.append(step)
        if len(report.steps) > limit:
            raise AssertionError("repair exceeded its deficiency bound")
    return h, report


def replay(g: CubeSubgraph, steps: list[RepairStep]) -> list[CubeSubgraph]:
    """Re-apply ``steps`` to a copy of ``g``; returns every intermediate graph."""
    h = g.copy()
    out = []
    for s in steps:
        if s.removed is not None:
            h.delete_edge(s.removed)
        h.add_edge(s.added)
        out.append(h.copy())
    return out
