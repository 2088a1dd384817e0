"""Exact s-clique counts for every s at once."""

from __future__ import annotations

import sys
from dataclasses import dataclass
from math import comb

from .graph import Graph, GraphError, popcount

BRUTE_FORCE_LIMIT = 20
_PIVOT_THRESHOLD = 24
_COUNT_LIMIT = 1 << 128

sys.setrecursionlimit(max(sys.getrecursionlimit(), 4000))


@dataclass(frozen=True)
class CliqueProfile:
    """``counts[s - 1]`` is N_s(G) for ``s = 1..n``."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        assert all(0 <= c < _COUNT_LIMIT for c in self.counts), "clique count exceeds 128 bits"

    def __getitem__(self, s: int) -> int:
        if s < 1:
            raise IndexError(f"clique size {s} must be positive")
        return self.counts[s - 1] if s <= len(self.counts) else 0

    @property
    def n(self) -> int:
        return len(self.counts)

    @property
    def edges(self) -> int:
        return self[2]

    @property
    def clique_number(self) -> int:
        return max((s for s, c in enumerate(self.counts, 1) if c), default=0)

    def to_list(self) -> list[int]:
        return list(self.counts)


def _extend(adj, cand: int, depth: int, counts: list[int]) -> None:
    while cand:
        low = cand & -cand
        cand ^= low
        counts[depth] += 1
        nxt = cand & adj[low.bit_length() - 1]
        if nxt:
            if nxt & (nxt - 1):
                _extend(adj, nxt, depth + 1, counts)
            else:
                counts[depth + 1] += 1


def _profile_enumerate(g: Graph) -> list[int]:
    counts = [0] * (g.n + 2)
    _extend(g.adj, g.full, 1, counts)
    return counts[1:g.n + 1]


def _pivot(adj, cand: int, held: int, pivots: int, counts: list[int]) -> None:
    if not cand:
        for j in range(pivots + 1):
            counts[held + j] += comb(pivots, j)
        return
    pivot, best = -1, -1
    rest = cand
    while rest:
        low = rest & -rest
        rest ^= low
        v = low.bit_length() - 1
        deg = popcount(adj[v] & cand)
        if deg > best:
            pivot, best = v, deg
    _pivot(adj, cand & adj[pivot], held, pivots + 1, counts)
    others = cand & ~adj[pivot] & ~(1 << pivot)
    remaining = cand
    while others:
        low = others & -others
        others ^= low
        _pivot(adj, remaining & adj[low.bit_length() - 1], held + 1, pivots, counts)
        remaining &= ~low


def _profile_pivot(g: Graph) -> list[int]:
    counts = [0] * (g.n + 1)
    _pivot(g.adj, g.full, 0, 0, counts)
    return counts[1:]


def clique_profile(g: Graph, method: str = "auto") -> CliqueProfile:
    """N_s(G) for all s.

    ``method="enumerate"`` walks every clique once by intersecting candidate
    sets with adjacency rows; ``"pivot"`` counts through a pivot tree and
    adds binomial blocks at the leaves, which stays fast on dense graphs.
    ``"auto"`` enumerates up to 24 vertices and pivots beyond.
    """
    if method == "auto":
        method = "enumerate" if g.n <= _PIVOT_THRESHOLD else "pivot"
    if method == "enumerate":
        return CliqueProfile(tuple(_profile_enumerate(g)))
    if method == "pivot":
        return CliqueProfile(tuple(_profile_pivot(g)))
    raise ValueError(f"unknown clique counting method {method!r}")


def _count_fixed(adj, cand: int, depth: int, s: int) -> int:
    if depth == s:
        return popcount(cand)
    total = 0
    while cand:
        low = cand & -cand
        cand ^= low
        nxt = cand & adj[low.bit_length() - 1]
        if popcount(nxt) >= s - depth:
            total += _count_fixed(adj, nxt, depth + 1, s)
    return total


def count_cliques(g: Graph, s: int) -> int:
    if not 1 <= s <= g.n:
        raise GraphError(f"clique size {s} outside 1..{g.n}")
    return _count_fixed(g.adj, g.full, 1, s)


def brute_force_profile(g: Graph) -> CliqueProfile:
    """Reference counts by testing every vertex subset; for n <= 20 only."""
    if g.n > BRUTE_FORCE_LIMIT:
        raise GraphError(f"brute-force profile limited to {BRUTE_FORCE_LIMIT} vertices")
    closed = [row | (1 << i) for i, row in enumerate(g.adj)]
    counts = [0] * g.n
    for subset in range(1, 1 << g.n):
        members = [i for i in range(g.n) if subset >> i & 1]
        if all(closed[i] & subset == subset for i in members):
            counts[len(members) - 1] += 1
    return CliqueProfile(tuple(counts))
