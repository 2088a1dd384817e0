"""Extremal constructions H, X, Q and the closed-form clique counts they attain.

Vertex numbering in every builder is deterministic: part A first, then the
B blocks one after another, then C.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Optional

from .graph import Graph, build_graph

_LIMIT = 1 << 128


class ParameterError(ValueError):
    """A bound or construction was called outside its parameter range."""


def binom(a: int, b: int) -> int:
    """Binomial coefficient with the zero convention outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    value = comb(a, b)
    assert value < _LIMIT, "binomial coefficient exceeds 128 bits"
    return value


@dataclass(frozen=True)
class Decomposition:
    r: int
    t: int
    modulus: int


def decompose(n: int, k: int, mode: str = "g") -> Decomposition:
    """``n - 2 = r(k - 3) + t`` (mode ``g``) or ``n - 1 = r(k - 2) + t`` (mode ``psi``)."""
    if k < 4:
        raise ParameterError(f"k = {k} must be at least 4")
    if mode == "g":
        if n < 2:
            raise ParameterError(f"n = {n} must be at least 2 for the g decomposition")
        r, t = divmod(n - 2, k - 3)
        return Decomposition(r, t, k - 3)
    if mode == "psi":
        if n < 1:
            raise ParameterError(f"n = {n} must be at least 1 for the psi decomposition")
        r, t = divmod(n - 1, k - 2)
        return Decomposition(r, t, k - 2)
    raise ParameterError(f"unknown decomposition mode {mode!r}")


def _check_s(s: int) -> None:
    if s < 2:
        raise ParameterError(f"s = {s} must be at least 2")


def _check_h(n: int, k: int, a: int) -> None:
    if not n >= k >= 4:
        raise ParameterError(f"H needs n >= k >= 4, got n = {n}, k = {k}")
    if not 1 <= a or not 2 * a < k:
        raise ParameterError(f"H needs 1 <= a < k/2, got a = {a}, k = {k}")


def f_s(n: int, k: int, a: int, s: int) -> int:
    """Clique count of H_{n,k,a}: C(k-a, s) + (n-k+a) C(a, s-1)."""
    _check_h(n, k, a)
    _check_s(s)
    return binom(k - a, s) + (n - k + a) * binom(a, s - 1)


def _check_g(n: int, k: int, s: int) -> None:
    if n < 3:
        raise ParameterError(f"n = {n} must be at least 3")
    if k < 4:
        raise ParameterError(f"k = {k} must be at least 4")
    _check_s(s)


def g_s(n: int, k: int, s: int) -> int:
    """Clique count of X_{n,k}; the s = 2 branch is the sharper edge bound."""
    _check_g(n, k, s)
    d = decompose(n, k, "g")
    if s >= 3:
        value = d.r * binom(k - 1, s) + binom(d.t + 2, s)
    else:
        value = d.r * binom(k - 3, 2) + binom(d.t, 2) + 2 * (n - 2) + 1
    if k > n:
        assert value == binom(n, s), "X_{n,k} with k > n must be a clique"
    return value


def conjecture_bound(n: int, k: int, s: int) -> int:
    """r C(k-1, s) + C(t+2, s) for every s >= 2 (weaker than g_s at s = 2)."""
    _check_g(n, k, s)
    d = decompose(n, k, "g")
    return d.r * binom(k - 1, s) + binom(d.t + 2, s)


def psi_s(n: int, k: int, s: int) -> int:
    """Clique count of Q_{n,k}: r C(k-1, s) + C(t+1, s) with n - 1 = r(k-2) + t."""
    if n < 1:
        raise ParameterError(f"n = {n} must be at least 1")
    if k < 4:
        raise ParameterError(f"k = {k} must be at least 4")
    _check_s(s)
    d = decompose(n, k, "psi")
    value = d.r * binom(k - 1, s) + binom(d.t + 1, s)
    if k > n:
        assert value == binom(n, s), "Q_{n,k} with k > n must be a clique"
    return value


def kopylov_bound(n: int, k: int, s: int = 2) -> int:
    """max(f_s(n,k,2), f_s(n,k,floor((k-1)/2))) for n >= k >= 5."""
    if not n >= k >= 5:
        raise ParameterError(f"needs n >= k >= 5, got n = {n}, k = {k}")
    return max(f_s(n, k, 2, s), f_s(n, k, (k - 1) // 2, s))


# constructions --------------------------------------------------------------

@dataclass(frozen=True)
class ConstructionSpec:
    family: str
    n: int
    k: int
    a: Optional[int] = None
    parts: dict = field(default_factory=dict)
    edge: Optional[tuple[int, int]] = None
    hub: Optional[int] = None

    def to_dict(self) -> dict:
        out = {"family": self.family, "n": self.n, "k": self.k, "parts": self.parts}
        if self.a is not None:
            out["a"] = self.a
        if self.edge is not None:
            out["edge"] = list(self.edge)
        if self.hub is not None:
            out["hub"] = self.hub
        return out


def _clique_edges(vertices) -> list[tuple[int, int]]:
    return list(combinations(vertices, 2))


def build_H(n: int, k: int, a: int) -> tuple[Graph, ConstructionSpec]:
    """A (size a) joined to B (size n-k+a), plus a clique on A and C (size k-2a)."""
    _check_h(n, k, a)
    A = list(range(a))
    B = list(range(a, n - k + 2 * a))
    C = list(range(n - k + 2 * a, n))
    edges = [(x, y) for x in A for y in B] + _clique_edges(A + C)
    spec = ConstructionSpec("H", n, k, a, {"A": A, "B": B, "C": C})
    return build_graph(n, edges), spec


def _blocks(start: int, r: int, size: int) -> list[list[int]]:
    return [list(range(start + i * size, start + (i + 1) * size)) for i in range(r)]


def build_X(n: int, k: int) -> tuple[Graph, ConstructionSpec]:
    """Edge uv joined to r disjoint (k-3)-cliques and one t-clique."""
    if n < 3 or k < 4:
        raise ParameterError(f"X needs n >= 3 and k >= 4, got n = {n}, k = {k}")
    d = decompose(n, k, "g")
    A = [0, 1]
    B = _blocks(2, d.r, k - 3)
    C = list(range(2 + d.r * (k - 3), n))
    edges = [(0, 1)] + [(x, y) for x in A for y in range(2, n)]
    for block in B + [C]:
        edges += _clique_edges(block)
    spec = ConstructionSpec("X", n, k, None, {"A": A, "B": B, "C": C}, edge=(0, 1))
    return build_graph(n, edges), spec


def build_Q(n: int, k: int) -> tuple[Graph, ConstructionSpec]:
    """Hub w joined to r disjoint (k-2)-cliques and one t-clique (X_{n+1,k+1} / uv)."""
    if n < 2 or k < 4:
        raise ParameterError(f"Q needs n >= 2 and k >= 4, got n = {n}, k = {k}")
    d = decompose(n, k, "psi")
    B = _blocks(1, d.r, k - 2)
    C = list(range(1 + d.r * (k - 2), n))
    edges = [(0, y) for y in range(1, n)]
    for block in B + [C]:
        edges += _clique_edges(block)
    spec = ConstructionSpec("Q", n, k, None, {"A": [0], "B": B, "C": C}, hub=0)
    return build_graph(n, edges), spec


def predicted_profile(spec: ConstructionSpec) -> dict[int, int]:
    """Closed-form N_s for s = 2..n of a built construction."""
    n, k = spec.n, spec.k
    if spec.family == "H":
        return {s: f_s(n, k, spec.a, s) for s in range(2, n + 1)}
    if spec.family == "X":
        return {s: g_s(n, k, s) for s in range(2, n + 1)}
    if spec.family == "Q":
        return {s: psi_s(n, k, s) for s in range(2, n + 1)}
    raise ParameterError(f"unknown family {spec.family!r}")


# inequalities ---------------------------------------------------------------

def inequality_1_sides(k: int, s: int, t1: int, t2: int) -> tuple[int, int]:
    """Both sides of C(t1+1, s) + C(t2+1, s) <= (merged psi remainder term)."""
    if k < 5 or s < 2:
        raise ParameterError(f"needs k >= 5 and s >= 2, got k = {k}, s = {s}")
    if not (0 <= t1 <= k - 3 and 0 <= t2 <= k - 3):
        raise ParameterError(f"remainders must lie in 0..{k - 3}, got {t1}, {t2}")
    lhs = binom(t1 + 1, s) + binom(t2 + 1, s)
    if t1 + t2 <= k - 2:
        return lhs, binom(t1 + t2 + 1, s)
    return lhs, binom(k - 1, s) + binom(t1 + t2 - k + 3, s)


def inequality_3_sides(k: int, s: int, t1: int, t2: int) -> tuple[int, int]:
    """Both sides of C(t1+2, s) + C(t2+2, s) <= (merged g remainder term), s >= 3."""
    if k < 5 or s < 3:
        raise ParameterError(f"needs k >= 5 and s >= 3, got k = {k}, s = {s}")
    if not (0 <= t1 <= k - 4 and 0 <= t2 <= k - 4):
        raise ParameterError(f"remainders must lie in 0..{k - 4}, got {t1}, {t2}")
    lhs = binom(t1 + 2, s) + binom(t2 + 2, s)
    if t1 + t2 <= k - 4:
        return lhs, binom(t1 + t2 + 2, s)
    return lhs, binom(k - 1, s) + binom(t1 + t2 - k + 5, s)


def check_inequality_1(k: int, s: int, t1: int, t2: int) -> bool:
    lhs, rhs = inequality_1_sides(k, s, t1, t2)
    return lhs <= rhs


def check_inequality_3(k: int, s: int, t1: int, t2: int) -> bool:
    lhs, rhs = inequality_3_sides(k, s, t1, t2)
    return lhs <= rhs


def check_proposition(n: int, k: int, s: int) -> bool:
    """max(f_s(n,k,2), f_s(n,k,floor((k-1)/2))) <= psi_s(n,k)."""
    if not n >= k >= 5:
        raise ParameterError(f"needs n >= k >= 5, got n = {n}, k = {k}")
    _check_s(s)
    return kopylov_bound(n, k, s) <= psi_s(n, k, s)
