"""Recursive construction of complementary extremal pairs (G_n, G_n').

Each graph has ``2**(n-3) * (4n-3)`` edges, is S_{n-1,n-1}-free, and the
two full-degree vertex sets are disjoint.  Level ``n+1`` places G_n and G_n'
on the two halves of Q_{n+1} (new coordinate as the top bit) and keeps all
``2**n`` cross edges; the primed graph swaps the halves.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .forbidden import is_balanced_free
from .hypercube import MAX_DIM, edge_between
from .subgraph import CubeSubgraph, cube_product

# Q_3 minus a 3-edge matching; full-degree sets {000, 111} and {001, 110}.
BASE_DELETED = ((0b001, 0b011), (0b010, 0b110), (0b100, 0b101))
BASE_DELETED_PRIME = ((0b000, 0b010), (0b100, 0b101), (0b011, 0b111))


def extremal_edge_count(n: int) -> int:
    return (4 * n - 3) << (n - 3)


@dataclass(frozen=True)
class ExtremalPair:
    n: int
    g: CubeSubgraph
    g_prime: CubeSubgraph

    def check(self) -> None:
        """Assert the pair invariants with the fast freeness test."""
        want = extremal_edge_count(self.n)
        for h in (self.g, self.g_prime):
            assert h.n == self.n
            assert h.edge_count == want, (h.edge_count, want)
            assert is_balanced_free(h)
        assert not (self.g.full_degree_set() & self.g_prime.full_degree_set())


def _from_pairs(pairs) -> CubeSubgraph:
    return CubeSubgraph.from_deleted(3, [edge_between(3, a, b) for a, b in pairs])


def base_pair_3() -> ExtremalPair:
    pair = ExtremalPair(3, _from_pairs(BASE_DELETED), _from_pairs(BASE_DELETED_PRIME))
    pair.check()
    return pair


def lift(pair: ExtremalPair) -> ExtremalPair:
    """One inductive step: the pair at level ``n+1`` from the pair at ``n``."""
    return ExtremalPair(
        pair.n + 1,
        cube_product(pair.g, pair.g_prime),
        cube_product(pair.g_prime, pair.g),
    )


@lru_cache(maxsize=None)
def _pair(n: int) -> ExtremalPair:
    if n == 3:
        return base_pair_3()
    return lift(_pair(n - 1))


def extremal_pair(n: int) -> ExtremalPair:
    """The extremal pair at dimension ``n`` (3 <= n <= MAX_DIM).

    Returned graphs are fresh copies and may be mutated by the caller.
    """
    if not 3 <= n <= MAX_DIM:
        raise ValueError(f"extremal pair defined for 3 <= n <= {MAX_DIM}, got {n}")
    p = _pair(n)
    return ExtremalPair(n, p.g.copy(), p.g_prime.copy())
