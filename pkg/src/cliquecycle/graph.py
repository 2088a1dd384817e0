"""Immutable simple graphs stored as one adjacency bitmask per vertex.

Vertex ``i`` has neighbourhood ``adj[i]``; bit ``j`` of that integer is set
iff ``ij`` is an edge.  Every transformation returns a new :class:`Graph`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

MAX_VERTICES = 62


class GraphError(ValueError):
    """Invalid graph construction, encoding or operation argument."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        n, adj = self.n, self.adj
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(adj)}")
        full = (1 << n) - 1
        for i, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"row {i} has bits at positions >= {n}")
            if row >> i & 1:
                raise GraphError(f"self-loop at vertex {i}")
            for j in iter_bits(row):
                if not adj[j] >> i & 1:
                    raise GraphError(f"asymmetric adjacency between {i} and {j}")

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(popcount(row) for row in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(i, j)`` with ``i < j``, sorted lexicographically."""
        return [(i, j) for i in range(self.n) for j in iter_bits(self.adj[i] >> (i + 1) << (i + 1))]

    def num_edges(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def induced(self, keep: int) -> tuple["Graph", "VertexMap"]:
        """Subgraph induced by the vertex bitmask ``keep``, compactly relabelled."""
        survivors = list(iter_bits(keep & self.full))
        if not survivors:
            raise GraphError("induced subgraph would be empty")
        new_index = {old: new for new, old in enumerate(survivors)}
        rows = []
        for old in survivors:
            row = 0
            for j in iter_bits(self.adj[old] & keep):
                row |= 1 << new_index[j]
            rows.append(row)
        mapping = tuple(new_index.get(i) for i in range(self.n))
        return Graph(len(survivors), tuple(rows)), VertexMap(mapping)

    def remove_vertices(self, *vertices: int) -> tuple["Graph", "VertexMap"]:
        drop = 0
        for v in vertices:
            drop |= 1 << v
        return self.induced(self.full & ~drop)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class VertexMap:
    """``mapping[old]`` is the new index of vertex ``old``, or ``None`` if removed."""

    mapping: tuple[Optional[int], ...]

    def __getitem__(self, old: int) -> Optional[int]:
        return self.mapping[old]

    def __len__(self) -> int:
        return len(self.mapping)


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    rows = [0] * n
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"edge ({i}, {j}) has an endpoint outside 0..{n - 1}")
        if i == j:
            raise GraphError(f"self-loop ({i}, {i}) requested")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << i) for i in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


# graph6 ---------------------------------------------------------------------

_GRAPH6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    """Short-form graph6: size byte, then the upper triangle column by column."""
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_GRAPH6_HEADER):
        s = s[len(_GRAPH6_HEADER):]
    if not s:
        raise GraphError("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise GraphError(f"graph6 byte outside the printable range 63..126 in {s!r}")
    n = codes[0]
    if n == 63:
        raise GraphError("graph6 long form (more than 62 vertices) is not supported")
    if n == 0:
        raise GraphError("graph6 encodes a graph with no vertices")
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = codes[1:]
    if len(body) < expected:
        raise GraphError(f"graph6 body truncated: {len(body)} bytes, need {expected}")
    if len(body) > expected:
        raise GraphError(f"graph6 body too long: {len(body)} bytes, need {expected}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


# connectivity ---------------------------------------------------------------

def reachable(adj: Sequence[int], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside the vertex set ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    return reachable(g.adj, 0, g.full) == g.full


def components(g: Graph, allowed: Optional[int] = None) -> list[int]:
    """Connected components of the subgraph induced by ``allowed``, as bitmasks."""
    left = g.full if allowed is None else allowed & g.full
    comps = []
    while left:
        low = (left & -left).bit_length() - 1
        comp = reachable(g.adj, low, left)
        comps.append(comp)
        left &= ~comp
    return comps


def is_vertex_cut(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff deleting ``vertices`` leaves at least two components."""
    drop = 0
    for v in vertices:
        drop |= 1 << v
    rest = g.full & ~drop
    if not rest:
        return False
    low = (rest & -rest).bit_length() - 1
    return reachable(g.adj, low, rest) != rest


def cut_vertices(g: Graph) -> set[int]:
    """Articulation vertices, via an iterative lowpoint DFS."""
    adj = g.adj
    disc = [-1] * g.n
    low = [0] * g.n
    cuts: set[int] = set()
    clock = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        # frames: (vertex, parent, remaining neighbour mask)
        stack = [(root, -1, adj[root])]
        while stack:
            v, parent, rest = stack[-1]
            if rest:
                w_bit = rest & -rest
                stack[-1] = (v, parent, rest ^ w_bit)
                w = w_bit.bit_length() - 1
                if disc[w] < 0:
                    disc[w] = low[w] = clock
                    clock += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, adj[w]))
                elif w != parent and disc[w] < low[v]:
                    low[v] = disc[w]
                continue
            stack.pop()
            if parent >= 0:
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if parent != root and low[v] >= disc[parent]:
                    cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    return cuts


def is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and not cut_vertices(g)


def has_adjacent_two_cut(g: Graph) -> Optional[tuple[int, int]]:
    """First edge ``xy`` (lexicographic) whose endpoints together form a vertex cut."""
    if not is_two_connected(g):
        raise GraphError("has_adjacent_two_cut requires a 2-connected graph")
    for x, y in g.edges():
        if is_vertex_cut(g, (x, y)):
            return (x, y)
    return None


# transformations ------------------------------------------------------------

def _require_edge(g: Graph, u: int, v: int) -> None:
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge of the graph")


def contract(g: Graph, u: int, v: int) -> tuple[Graph, VertexMap]:
    """G/uv: ``v`` merges into ``u``; parallel edges collapse."""
    _require_edge(g, u, v)
    if g.n < 2:
        raise GraphError("cannot contract in a graph with fewer than 2 vertices")
    merged = (g.adj[u] | g.adj[v]) & ~((1 << u) | (1 << v))
    rows = list(g.adj)
    rows[u] = merged
    vbit = 1 << v
    for x in iter_bits(g.adj[v]):
        if x != u:
            rows[x] = (rows[x] & ~vbit) | (1 << u)
    rows[v] = 0
    h, vmap = Graph(g.n, tuple(rows)).induced(g.full & ~vbit)
    mapping = list(vmap.mapping)
    mapping[v] = mapping[u]
    return h, VertexMap(tuple(mapping))


def edge_switch(g: Graph, v: int, u: int) -> Graph:
    """G[v -> u]: every edge ``vx`` with ``x`` outside ``N[u]`` becomes ``ux``."""
    _require_edge(g, u, v)
    moved = g.adj[v] & ~g.adj[u] & ~(1 << u)
    if not moved:
        return g
    rows = list(g.adj)
    rows[v] &= ~moved
    rows[u] |= moved
    ubit, vbit = 1 << u, 1 << v
    for x in iter_bits(moved):
        rows[x] = (rows[x] & ~vbit) | ubit
    return Graph(g.n, tuple(rows))
