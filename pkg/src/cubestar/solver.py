"""Exact Turán values ex(Q_n, S_{n-1,n-1}) by closed form and by search.

Deleting an edge set ``D`` from Q_n leaves an S_{n-1,n-1}-free graph iff the
endpoints of ``D`` cover every edge of Q_n: the untouched vertices are exactly
the full-degree ones, and two of them are adjacent iff the cube edge between
them survived.  So the extremal number is ``e(Q_n)`` minus the size of a
minimum edge dominating set of Q_n, which :func:`min_edge_dominating` finds
by branch-and-bound over bitmasks.
"""

from __future__ import annotations

import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Optional

from .construct import extremal_pair
from .forbidden import DoubleStarPattern, contains_double_star
from .hypercube import (
    automorphisms,
    check_dim,
    edge_count,
    endpoint_arrays,
)
from .subgraph import CubeSubgraph

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**9
EXHAUSTIVE_MAX_DIM = 3
BNB_DIMS = (3, 4, 5)


class MalformedCertificate(ValueError):
    pass


def turan_formula(n: int) -> int:
    """ex(Q_n, S_{n-1,n-1}): 0, 2, then ``2**(n-3) * (4n-3)`` for n >= 3."""
    if n < 1:
        raise ValueError("Q_n needs n >= 1")
    if n == 1:
        return 0
    if n == 2:
        return 2
    value = (4 * n - 3) << (n - 3)
    # second printed form: e(Q_n) minus 3 * 2**(n-3) deleted edges
    assert value * 8 == n * 2 ** (n + 2) - 3 * 2**n
    return value


def optimal_deletions(n: int) -> int:
    """Size of a minimum deletion set, ``e(Q_n) - turan_formula(n)``."""
    return edge_count(n) - turan_formula(n)


def covering_bound(n: int) -> int:
    """Lower bound on deletions: one deleted edge dominates at most 2n-1 edges."""
    return -(-edge_count(n) // (2 * n - 1))


def balanced_pattern_for(n: int) -> Optional[DoubleStarPattern]:
    return DoubleStarPattern(n - 1, n - 1) if n >= 2 else None


def is_free_general(g: CubeSubgraph) -> bool:
    """Freeness against S_{n-1,n-1} through the general detector.

    For n = 1 the pattern degenerates to a single edge.
    """
    p = balanced_pattern_for(g.n)
    if p is None:
        return g.edge_count == 0
    return contains_double_star(g, p) is None


@dataclass(frozen=True)
class DeletionCertificate:
    n: int
    deleted: tuple[int, ...]
    claimed_free: bool = True
    claimed_optimal: bool = False

    @classmethod
    def from_subgraph(cls, g: CubeSubgraph, claimed_optimal: bool = False) -> "DeletionCertificate":
        return cls(g.n, tuple(int(i) for i in g.deleted_ids()), True, claimed_optimal)

    def subgraph(self) -> CubeSubgraph:
        return CubeSubgraph.from_deleted(self.n, self.deleted)


@dataclass
class SolveResult:
    n: int
    optimum_edges: int
    witness: CubeSubgraph
    deletions: DeletionCertificate
    nodes_explored: int
    proof_complete: bool
    lower_bound: int = 0
    elapsed: float = 0.0
    info: dict = field(default_factory=dict)


def verify_certificate(c: DeletionCertificate) -> bool:
    """Independent audit of a deletion certificate.

    True iff the deleted ids are distinct and valid, the remaining graph has
    no S_{n-1,n-1} according to the general detector, and, when optimality
    is claimed, the deletion count equals ``e(Q_n) - turan_formula(n)``.
    """
    if not isinstance(c, DeletionCertificate):
        raise MalformedCertificate(f"expected DeletionCertificate, got {type(c).__name__}")
    try:
        check_dim(c.n)
    except (TypeError, ValueError) as exc:
        raise MalformedCertificate(str(exc)) from exc
    ids = list(c.deleted)
    if any(not isinstance(i, int) or isinstance(i, bool) for i in ids):
        raise MalformedCertificate("edge ids must be integers")
    m = edge_count(c.n)
    if len(set(ids)) != len(ids) or any(not 0 <= i < m for i in ids):
        return False
    if not c.claimed_free or not is_free_general(c.subgraph()):
        return False
    if c.claimed_optimal and len(ids) != optimal_deletions(c.n):
        return False
    return True


# -- exhaustive search ------------------------------------------------------


def exhaustive_turan(n: int, p: DoubleStarPattern) -> SolveResult:
    """Maximum S_{k,l}-free subgraph of Q_n by enumerating deletion sets in
    order of size.  Freeness is monotone under deletion, so the first
    feasible size is optimal."""
    check_dim(n)
    if n > EXHAUSTIVE_MAX_DIM:
        raise ValueError(f"exhaustive search limited to n <= {EXHAUSTIVE_MAX_DIM}")
    t0 = time.perf_counter()
    m = edge_count(n)
    nodes = 0
    for d in range(m + 1):
        for deleted in itertools.combinations(range(m), d):
            nodes += 1
            g = CubeSubgraph.from_deleted(n, deleted)
            if contains_double_star(g, p) is None:
                balanced = p == balanced_pattern_for(n)
                cert = DeletionCertificate(n, deleted, True, balanced)
                return SolveResult(
                    n, m - d, g, cert, nodes, True,
                    lower_bound=d,
                    elapsed=time.perf_counter() - t0,
                    info={"sizes_refuted": d, "subsets_before": sum(comb(m, i) for i in range(d))},
                )
    raise AssertionError("the empty graph is always free")


# -- branch and bound over edge dominating sets ----------------------------


@lru_cache(maxsize=None)
def _tables(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Per edge: bitmask of edges sharing an endpoint with it (itself
    included), and bitmask of edges within two such steps."""
    base, top = endpoint_arrays(n)
    inc = [0] * (1 << n)
    for i, (a, b) in enumerate(zip(base.tolist(), top.tolist())):
        inc[a] |= 1 << i
        inc[b] |= 1 << i
    dom = tuple(inc[a] | inc[b] for a, b in zip(base.tolist(), top.tolist()))
    reach = []
    for d in dom:
        r, x = 0, d
        while x:
            lb = x & -x
            r |= dom[lb.bit_length() - 1]
            x ^= lb
        reach.append(r)
    return dom, tuple(reach)


@lru_cache(maxsize=None)
def _root_orbits(n: int) -> tuple[tuple[int, ...], ...]:
    """Orbits of the edges dominating edge 0 under its stabiliser in
    Aut(Q_n), each sorted, ordered by their smallest member."""
    dom, _ = _tables(n)
    cands = [i for i in range(edge_count(n)) if dom[0] >> i & 1]
    e0 = {0, 1}
    stab = [a for a in automorphisms(n) if {a(0), a(1)} == e0]
    seen: set[int] = set()
    orbits = []
    for c in cands:
        if c in seen:
            continue
        orb = sorted({a.map_edge(c) for a in stab})
        seen.update(orb)
        orbits.append(tuple(orb))
    return tuple(orbits)


def _bits(x: int):
    while x:
        lb = x & -x
        yield lb.bit_length() - 1
        x ^= lb


class _Search:
    """Depth-first branch-and-bound for edge dominating sets of size
    strictly below ``bound``.

    A node is (undominated mask, chosen edges, forbidden mask).  Children
    branch on the edges able to dominate the lowest undominated edge; once a
    child is explored its edge is forbidden for later siblings, so each
    dominating set is reached at most once.
    """

    def __init__(self, n: int, bound: int, budget: Optional[int]):
        self.n = n
        self.dom, self.reach = _tables(n)
        self.spread = 2 * n - 1
        self.bound = bound
        self.budget = budget
        self.nodes = 0
        self.best: Optional[tuple[int, ...]] = None
        self.exhausted = False

    def lower_bound(self, undominated: int, forbidden: int) -> int:
        """Max of the covering bound and a packing bound: undominated edges
        pairwise too far apart for one edge to dominate two of them."""
        cover = -(-undominated.bit_count() // self.spread)
        pack, x = 0, undominated
        reach = self.reach
        while x:
            j = (x & -x).bit_length() - 1
            pack += 1
            x &= ~reach[j]
        return max(cover, pack)

    def children(self, undominated: int, forbidden: int) -> list[int]:
        """Candidate edges, largest newly dominated count first."""
        e = (undominated & -undominated).bit_length() - 1
        dom = self.dom
        cands = [(-(undominated & dom[c]).bit_count(), c) for c in _bits(dom[e] & ~forbidden)]
        cands.sort()
        return [c for _, c in cands]

    def run(self, undominated: int, chosen: tuple[int, ...], forbidden: int) -> None:
        if self.exhausted:
            return
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            self.exhausted = True
            return
        depth = len(chosen)
        if not undominated:
            if depth < self.bound:
                self.bound = depth
                self.best = chosen
            return
        if depth + self.lower_bound(undominated, forbidden) >= self.bound:
            return
        dom = self.dom
        for c in self.children(undominated, forbidden):
            self.run(undominated & ~dom[c], chosen + (c,), forbidden)
            forbidden |= 1 << c
            if depth + 1 >= self.bound or self.exhausted:
                return


@dataclass
class _Task:
    undominated: int
    chosen: tuple[int, ...]
    forbidden: int


def _root_tasks(n: int) -> list[_Task]:
    """Root split: one subtree per orbit of dominators of edge 0, with all
    members of earlier orbits forbidden."""
    dom, _ = _tables(n)
    full = (1 << edge_count(n)) - 1
    tasks = []
    forbidden = 0
    for orbit in _root_orbits(n):
        rep = orbit[0]
        tasks.append(_Task(full & ~dom[rep], (rep,), forbidden))
        for c in orbit:
            forbidden |= 1 << c
    return tasks


def _split(n: int, tasks: list[_Task], depth: int, bound: int) -> tuple[list[_Task], int]:
    """Expand tasks ``depth`` more levels in DFS order; returns the frontier
    and the number of nodes expanded."""
    probe = _Search(n, bound, None)
    nodes = 0
    for _ in range(depth):
        nxt = []
        for t in tasks:
            if not t.undominated:
                nxt.append(t)
                continue
            nodes += 1
            if len(t.chosen) + probe.lower_bound(t.undominated, t.forbidden) >= bound:
                continue
            f = t.forbidden
            for c in probe.children(t.undominated, f):
                nxt.append(_Task(t.undominated & ~probe.dom[c], t.chosen + (c,), f))
                f |= 1 << c
        tasks = nxt
    return tasks, nodes


def _run_task(args) -> tuple[Optional[tuple[int, ...]], int, bool]:
    n, task, bound, budget = args
    s = _Search(n, bound, budget)
    s.run(task.undominated, task.chosen, task.forbidden)
    # a node counted past the budget was never expanded
    return s.best, min(s.nodes, budget) if budget is not None else s.nodes, s.exhausted


def min_edge_dominating(
    n: int,
    budget: Optional[int] = DEFAULT_BUDGET,
    workers: int = 1,
    split_depth: int = 2,
) -> SolveResult:
    """Minimum edge dominating set of Q_n, hence ex(Q_n, S_{n-1,n-1}).

    The construction's deletion set seeds the incumbent, so the search only
    has to refute every smaller set.  The root is reduced by symmetry, then
    the tree is cut ``split_depth`` levels down into independent subtrees,
    each searched against the construction bound with an equal share of
    ``budget``.  Results do not depend on ``workers``.  When the budget runs
    out ``proof_complete`` is False and the best set found is returned.
    """
    if n not in BNB_DIMS:
        raise ValueError(f"branch-and-bound supports n in {BNB_DIMS}, got {n}")
    t0 = time.perf_counter()
    pair = extremal_pair(n)
    incumbent = tuple(int(i) for i in pair.g.deleted_ids())
    ub = len(incumbent)
    tasks, nodes = _split(n, _root_tasks(n), split_depth, ub)
    nodes += 1
    split_nodes = nodes
    share = None if budget is None else max(1, budget // max(1, len(tasks)))
    jobs = [(n, t, ub, share) for t in tasks]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_task, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        outcomes = [_run_task(j) for j in jobs]

    best = incumbent
    complete = True
    for found, k, exhausted in outcomes:
        nodes += k
        complete &= not exhausted
        if found is not None and len(found) < len(best):
            best = tuple(sorted(found))
    m = edge_count(n)
    witness = CubeSubgraph.from_deleted(n, best)
    cert = DeletionCertificate(n, best, True, complete and len(best) == optimal_deletions(n))
    elapsed = time.perf_counter() - t0
    log.info("Q_%d: |D|=%d, %d nodes, complete=%s, %.2fs", n, len(best), nodes, complete, elapsed)
    return SolveResult(
        n, m - len(best), witness, cert, nodes, complete,
        lower_bound=len(best) if complete else covering_bound(n),
        elapsed=elapsed,
        info={"subtrees": len(tasks), "root_orbits": len(_root_orbits(n)), "split_nodes": split_nodes},
    )


def reduction_holds(n: int, deleted: tuple[int, ...]) -> bool:
    """Whether "Q_n minus ``deleted`` is free" and "endpoints of ``deleted``
    cover Q_n" agree for this one deletion set."""
    base, top = endpoint_arrays(n)
    touched = set(base[list(deleted)].tolist()) | set(top[list(deleted)].tolist())
    is_cover = all(a in touched or b in touched for a, b in zip(base.tolist(), top.tolist()))
    free = is_free_general(CubeSubgraph.from_deleted(n, deleted))
    return is_cover == free
