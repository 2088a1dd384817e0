"""Longest cycles: circumference, longest cycle through an edge, and ell(G).

Lengths count vertices (a triangle has length 3).  The longest cycle through
``uv`` is one more than the longest ``u``-``v`` path in ``G - uv``, measured
in edges; equivalently the largest vertex count of a ``u``-``v`` path with at
least three vertices.

Up to :data:`EXACT_LIMIT` vertices the answer comes from a subset dynamic
programme over (vertex set, endpoint) states grown from a root.  Larger
graphs fall back to a depth-first branch and bound with a node budget; its
result is flagged exact only when the search ran to completion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .graph import Graph, GraphError, iter_bits, popcount, reachable

EXACT_LIMIT = 16
DEFAULT_NODE_BUDGET = 2_000_000


class NoQualifyingEdge(LookupError):
    """Every edge lies on a cycle of length at least k, so ell(G) is undefined."""


@dataclass(frozen=True)
class CycleReport:
    length: int
    witness: Optional[tuple[int, ...]] = None
    exact: bool = True

    def to_dict(self) -> dict:
        return {
            "length": self.length,
            "witness": None if self.witness is None else list(self.witness),
            "exact": self.exact,
        }


# subset DP -----------------------------------------------------------------

_NUMPY_FROM = 10
_layouts: dict = {}


def _grow_dict(adj: Sequence[int], root: int, allowed: int, closers: int,
               target: int, keep: bool):
    best = [0] * len(adj)
    layer = {1 << root: 1 << root}
    layers = [layer]
    size = 1
    while layer:
        size += 1
        nxt: dict[int, int] = {}
        get = nxt.get
        for mask, ends in layer.items():
            free = allowed & ~mask
            while ends:
                low = ends & -ends
                ends ^= low
                ext = adj[low.bit_length() - 1] & free
                while ext:
                    xb = ext & -ext
                    ext ^= xb
                    m2 = mask | xb
                    nxt[m2] = get(m2, 0) | xb
        if not nxt:
            break
        if keep:
            layers.append(nxt)
        if size >= 3:
            hit = 0
            for ends in nxt.values():
                hit |= ends
            hit &= closers
            if hit:
                for x in iter_bits(hit):
                    best[x] = size
                if target and size >= target:
                    break
        layer = nxt
    if not keep:
        return best, None

    def trace(size: int, end: int) -> tuple[int, ...]:
        ebit = 1 << end
        mask = min(m for m, ends in layers[size - 1].items() if ends & ebit)
        path = [end]
        for i in range(size - 1, 0, -1):
            mask ^= 1 << end
            ends = layers[i - 1][mask] & adj[end]
            end = (ends & -ends).bit_length() - 1
            path.append(end)
        path.reverse()
        return tuple(path)

    return best, trace


def _layout(k: int):
    """Per popcount layer of k-bit masks: the layer and, per bit x, (masks with x, masks without x)."""
    if k not in _layouts:
        masks = np.arange(1 << k, dtype=np.int64)
        pc = np.bitwise_count(masks)
        layers = []
        for size in range(1, k + 1):
            layer = masks[pc == size]
            per_bit = []
            for x in range(k):
                sel = layer[(layer >> x) & 1 == 1]
                per_bit.append((sel, sel ^ (1 << x)))
            layers.append((layer, per_bit))
        _layouts[k] = layers
    return _layouts[k]


def _grow_numpy(adj: Sequence[int], root: int, allowed: int, closers: int,
                target: int, keep: bool):
    """Same contract as the dict version, vectorised across each layer of masks.

    Local vertex 0 is the root; state index ``M`` stands for the vertex set
    ``{root} | (M << 1)`` and ``dp[M]`` is the bitset of feasible path ends.
    """
    verts = [root] + [x for x in iter_bits(allowed) if x != root]
    local = {x: i for i, x in enumerate(verts)}
    ladj = []
    for x in verts:
        row = 0
        for y in iter_bits(adj[x] & allowed):
            row |= 1 << local[y]
        ladj.append(row)
    lclose = 0
    for x in iter_bits(closers & allowed):
        lclose |= 1 << local[x]
    k = len(verts) - 1
    dp = np.zeros(1 << k, dtype=np.uint32)
    dp[0] = 1
    best = [0] * len(adj)
    for size, (layer, per_bit) in enumerate(_layout(k), start=2):
        for x in range(k):
            sel, prev = per_bit[x]
            hit = (dp[prev] & ladj[x + 1]) != 0
            dp[sel[hit]] |= 1 << (x + 1)
        union = int(np.bitwise_or.reduce(dp[layer]))
        if not union:
            break
        if size >= 3 and union & lclose:
            for x in iter_bits(union & lclose):
                best[verts[x]] = size
            if target and size >= target:
                break
    if not keep:
        return best, None

    def trace(size: int, end: int) -> tuple[int, ...]:
        x = local[end]
        layer = _layout(k)[size - 2][0]
        mask = int(layer[np.flatnonzero((dp[layer] >> x) & 1)[0]])
        path = [x]
        while mask:
            prev = mask ^ (1 << (x - 1))
            if prev:
                cands = int(dp[prev]) & ladj[x]
                x = (cands & -cands).bit_length() - 1
            else:
                x = 0
            path.append(x)
            mask = prev
        path.reverse()
        return tuple(verts[i] for i in path)

    return best, trace


def _grow(adj: Sequence[int], root: int, allowed: int, closers: int,
          target: int = 0, keep: bool = False):
    """Grow simple paths from ``root`` inside ``allowed`` one vertex at a time.

    Returns ``(best, trace)``: ``best[x]`` is the largest vertex count of a
    root-``x`` path with at least 3 vertices for ``x`` in ``closers`` (0 if
    none); ``trace(size, x)`` rebuilds one such path when ``keep`` is set.
    A positive ``target`` stops growth at the first closer reached with that
    many vertices.
    """
    if popcount(allowed) >= _NUMPY_FROM:
        return _grow_numpy(adj, root, allowed, closers, target, keep)
    return _grow_dict(adj, root, allowed, closers, target, keep)


def _dp_edge(g: Graph, u: int, v: int, target: int = 0, witness: bool = True) -> CycleReport:
    allowed = reachable(g.adj, u, g.full)
    best, trace = _grow(g.adj, u, allowed, 1 << v, target, keep=witness)
    length = best[v]
    if not witness or not length:
        return CycleReport(length)
    return CycleReport(length, trace(length, v))


def _dp_circumference(g: Graph, witness: bool = True) -> CycleReport:
    adj = g.adj
    best_len, best_cycle = 0, None
    for s in range(g.n - 2):
        allowed = reachable(adj, s, g.full & ~((1 << s) - 1))
        if popcount(allowed) <= max(best_len, 2):
            continue
        best, trace = _grow(adj, s, allowed, adj[s] & allowed, keep=witness)
        top = max(best)
        if top > best_len:
            best_len = top
            if witness:
                best_cycle = trace(top, best.index(top))
    return CycleReport(best_len, best_cycle)


# branch and bound ----------------------------------------------------------

def _bnb(adj: Sequence[int], root: int, allowed: int, closers: int,
         floor: int, budget: int, target: int = 0):
    """Longest root-to-closer path (>= 3 vertices) beating ``floor``.

    Returns ``(length, path, complete)``; ``complete`` is False when the node
    budget ran out.  Prunes on the size of the component still reachable.
    """
    best_len, best_path = floor, None
    path = [root]
    mask = 1 << root
    stack = [adj[root] & allowed & ~mask]
    nodes = 0
    while stack:
        cand = stack[-1]
        if not cand:
            stack.pop()
            mask ^= 1 << path.pop()
            continue
        xb = cand & -cand
        stack[-1] = cand ^ xb
        x = xb.bit_length() - 1
        nodes += 1
        if nodes > budget:
            return best_len, best_path, False
        path.append(x)
        mask |= xb
        size = len(path)
        if size >= 3 and closers & xb and size > best_len:
            best_len, best_path = size, tuple(path)
            if target and best_len >= target:
                return best_len, best_path, True
        free = allowed & ~mask
        room = reachable(adj, x, free | xb)
        if not room & closers & free or size + popcount(room) - 1 <= best_len:
            stack.append(0)
            continue
        stack.append(adj[x] & free)
    return best_len, best_path, True


# public API ----------------------------------------------------------------

def longest_cycle_through_edge(g: Graph, u: int, v: int,
                               budget: int = DEFAULT_NODE_BUDGET) -> CycleReport:
    """c_uv(G) with a witness cycle starting at ``u`` and ending at ``v``."""
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge of the graph")
    if g.n <= EXACT_LIMIT:
        return _dp_edge(g, u, v)
    allowed = reachable(g.adj, u, g.full)
    length, path, complete = _bnb(g.adj, u, allowed, 1 << v, 0, budget)
    return CycleReport(length, path, complete)


def has_cycle_through_edge_at_least(g: Graph, u: int, v: int, k: int,
                                    budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """True iff some cycle of length >= ``k`` uses the edge ``uv``."""
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge of the graph")
    if k < 3:
        raise GraphError(f"cycle length threshold {k} must be at least 3")
    if k > g.n:
        return False
    if g.n <= EXACT_LIMIT:
        return _dp_edge(g, u, v, target=k, witness=False).length >= k
    allowed = reachable(g.adj, u, g.full)
    length, _, complete = _bnb(g.adj, u, allowed, 1 << v, k - 1, budget, target=k)
    if length >= k:
        return True
    if not complete:
        raise RuntimeError(f"node budget {budget} exhausted before deciding c_uv >= {k}")
    return False


def circumference(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> CycleReport:
    if g.n <= EXACT_LIMIT:
        return _dp_circumference(g)
    adj = g.adj
    best_len, best_cycle, exact = 0, None, True
    for s in range(g.n - 2):
        allowed = reachable(adj, s, g.full & ~((1 << s) - 1))
        if popcount(allowed) <= max(best_len, 2):
            continue
        length, path, complete = _bnb(adj, s, allowed, adj[s] & allowed, best_len, budget)
        exact = exact and complete
        if path is not None:
            best_len, best_cycle = length, path
    return CycleReport(best_len, best_cycle, exact)


def circumference_length(g: Graph) -> int:
    """Circumference without witness reconstruction (exact DP only)."""
    return _dp_circumference(g, witness=False).length


def edge_cycle_lengths(g: Graph) -> dict[tuple[int, int], int]:
    """c_e(G) for every edge ``e = (u, v)`` with ``u < v``, by one DP per root."""
    adj = g.adj
    out = {}
    for u in range(g.n):
        later = adj[u] >> (u + 1) << (u + 1)
        if not later:
            continue
        allowed = reachable(adj, u, g.full)
        best, _ = _grow(adj, u, allowed, later)
        for v in iter_bits(later):
            out[(u, v)] = best[v]
    return out


def rooted_cycle_lengths(g: Graph, u: int) -> list[int]:
    """``c_ux(G)`` for every neighbour ``x`` of ``u`` (0 elsewhere)."""
    allowed = reachable(g.adj, u, g.full)
    best, _ = _grow(g.adj, u, allowed, g.adj[u])
    return best


def ell(g: Graph, k: int) -> tuple[int, int]:
    """Largest degree among end-vertices of edges lying on no cycle of length >= k.

    Returns ``(value, vertex)``; the vertex is the smallest index attaining it.
    """
    lengths = edge_cycle_lengths(g)
    ends = 0
    for (u, v), c in lengths.items():
        if c < k:
            ends |= (1 << u) | (1 << v)
    if not ends:
        raise NoQualifyingEdge(f"every edge lies on a cycle of length >= {k}")
    value, vertex = max((g.degree(x), -x) for x in iter_bits(ends))
    return value, -vertex


def longest_path(g: Graph) -> CycleReport:
    """Longest simple path, length in vertices, with a witness."""
    adj = g.adj
    layer = {1 << v: 1 << v for v in range(g.n)}
    layers = [layer]
    while True:
        nxt: dict[int, int] = {}
        get = nxt.get
        for mask, ends in layer.items():
            free = ~mask
            while ends:
                low = ends & -ends
                ends ^= low
                ext = adj[low.bit_length() - 1] & free
                while ext:
                    xb = ext & -ext
                    ext ^= xb
                    m2 = mask | xb
                    nxt[m2] = get(m2, 0) | xb
        if not nxt:
            break
        layers.append(nxt)
        layer = nxt
    mask = min(layer)
    ends = layer[mask]
    end = (ends & -ends).bit_length() - 1
    path = [end]
    for i in range(len(layers) - 1, 0, -1):
        mask ^= 1 << end
        ends = layers[i - 1][mask] & adj[end]
        end = (ends & -ends).bit_length() - 1
        path.append(end)
    return CycleReport(len(layers), tuple(reversed(path)))


def longest_path_length(g: Graph) -> int:
    """Vertex count of a longest path, no witness."""
    adj = g.adj
    layer = {1 << v: 1 << v for v in range(g.n)}
    size = 1
    while True:
        nxt: dict[int, int] = {}
        get = nxt.get
        for mask, ends in layer.items():
            free = ~mask
            while ends:
                low = ends & -ends
                ends ^= low
                ext = adj[low.bit_length() - 1] & free
                while ext:
                    xb = ext & -ext
                    ext ^= xb
                    m2 = mask | xb
                    nxt[m2] = get(m2, 0) | xb
        if not nxt:
            return size
        size += 1
        layer = nxt


def is_valid_cycle(g: Graph, cycle: Sequence[int], edge: Optional[tuple[int, int]] = None) -> bool:
    """Check a witness: distinct vertices, cyclically consecutive pairs adjacent."""
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return False
    cycle = list(cycle)
    pairs = list(zip(cycle, cycle[1:] + cycle[:1]))
    if not all(g.has_edge(a, b) for a, b in pairs):
        return False
    if edge is not None:
        u, v = edge
        return any({a, b} == {u, v} for a, b in pairs)
    return True
