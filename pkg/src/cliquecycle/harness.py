"""Verification campaigns: exhaustive labelled enumeration and seeded sampling.

A campaign is split into fixed work units (counter ranges of the labelled
enumeration, or blocks of sample indices).  Units are independent of the
worker count, and reports merge unit results in unit order, so totals and
records do not depend on how many workers ran them.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, Optional, Sequence

from . import bounds
from .cliques import clique_profile
from .cycles import (
    circumference_length,
    edge_cycle_lengths,
    longest_cycle_through_edge,
    longest_path_length,
    rooted_cycle_lengths,
)
from .graph import (
    Graph,
    GraphError,
    contract,
    cut_vertices,
    edge_switch,
    from_graph6,
    is_two_connected,
    is_vertex_cut,
    iter_bits,
    reachable,
    to_graph6,
)

EXHAUSTIVE_LIMIT = 7
EXHAUSTIVE_OPT_IN_LIMIT = 8
DEFAULT_P_GRID = (0.2, 0.35, 0.5, 0.65, 0.8)
DEFAULT_EQUALITY_CAP = 1000
SKIP_SAMPLE_CAP = 200
UNIT_COUNTERS = 1 << 13
UNIT_SAMPLES = 50
WORKERS_ENV = "CLIQUECYCLE_WORKERS"
SAMPLE_TRIES = 200
SAMPLE_REDRAWS = 50

GRAPH_TARGETS = {
    "theorem-main": "two_connected",
    "theorem-b": "connected",
    "kopylov": "two_connected",
    "luo": "two_connected",
    "fan": "two_connected",
    "erdos-gallai": "none",
    "lemma-A": "connected",
    "lemma-B": "two_connected",
    "lemma-C": "connected",
}
GRID_TARGETS = ("proposition", "inequalities", "sharpness")
TARGETS = tuple(GRAPH_TARGETS) + GRID_TARGETS
FILTERS = ("none", "connected", "two_connected")


class ConfigError(ValueError):
    """Campaign configuration outside the supported ranges."""


class RetryBudgetExceeded(RuntimeError):
    """A filtered random sampler did not hit its predicate within the budget."""


# graph sources --------------------------------------------------------------

def _passes(g: Graph, filter: str) -> bool:
    if filter == "none":
        return True
    if reachable(g.adj, 0, g.full) != g.full:
        return False
    if filter == "connected":
        return True
    return g.n >= 3 and not cut_vertices(g)


def graph_from_counter(n: int, counter: int) -> Graph:
    """Bit ``j(j-1)/2 + i`` of ``counter`` is the edge ``ij`` (``i < j``)."""
    rows = [0] * n
    offset = 0
    for j in range(1, n):
        low = (counter >> offset) & ((1 << j) - 1)
        offset += j
        rows[j] |= low
        bit = 1 << j
        while low:
            b = low & -low
            low ^= b
            rows[b.bit_length() - 1] |= bit
    return Graph(n, tuple(rows))


def enumerate_graphs(n: int, filter: str = "none", start: int = 0,
                     stop: Optional[int] = None, allow_n8: bool = False) -> Iterator[Graph]:
    """All labelled graphs on ``n`` vertices in counter order, optionally filtered."""
    limit = EXHAUSTIVE_OPT_IN_LIMIT if allow_n8 else EXHAUSTIVE_LIMIT
    if not 1 <= n <= limit:
        raise ConfigError(f"exhaustive enumeration supports 1 <= n <= {limit}"
                          + ("" if allow_n8 else " (n = 8 needs the explicit opt-in)"))
    if filter not in FILTERS:
        raise ConfigError(f"unknown filter {filter!r}")
    total = 1 << (n * (n - 1) // 2)
    stop = total if stop is None else min(stop, total)
    for counter in range(start, stop):
        g = graph_from_counter(n, counter)
        if _passes(g, filter):
            yield g


def count_graphs(n: int, filter: str = "none") -> int:
    return sum(1 for _ in enumerate_graphs(n, filter, allow_n8=True))


def _sample(rng: random.Random, n: int, p: float) -> Graph:
    rows = [0] * n
    for j in range(1, n):
        for i in range(j):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def _check_p(n: int, p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ConfigError(f"edge probability {p} outside [0, 1]")
    if not 1 <= n <= 62:
        raise ConfigError(f"vertex count {n} outside 1..62")


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) drawn from ``random.Random(seed)``, pairs in graph6 column order."""
    _check_p(n, p)
    return _sample(random.Random(seed), n, p)


def _random_filtered(n: int, p: float, seed: int, filter: str, max_tries: int) -> Graph:
    _check_p(n, p)
    rng = random.Random(seed)
    for _ in range(max_tries):
        g = _sample(rng, n, p)
        if _passes(g, filter):
            return g
    raise RetryBudgetExceeded(
        f"no {filter.replace('_', '-')} sample of G({n}, {p}) within {max_tries} tries (seed {seed})")


def random_connected(n: int, p: float, seed: int, max_tries: int = 1000) -> Graph:
    return _random_filtered(n, p, seed, "connected", max_tries)


def random_two_connected(n: int, p: float, seed: int, max_tries: int = 1000) -> Graph:
    return _random_filtered(n, p, seed, "two_connected", max_tries)


def sample_rng(seed: int, index: int) -> random.Random:
    """Per-sample generator; depends only on the campaign seed and sample index."""
    return random.Random(f"{seed}/{index}")


# records --------------------------------------------------------------------

def _jsonable(value):
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else float(value)
    return value


@dataclass
class VerificationRecord:
    statement: str
    graph: Optional[str]
    edge: Optional[tuple[int, int]]
    k: Optional[int]
    s: Optional[int]
    bound: object
    observed: object
    verdict: str
    witness: Optional[list] = None
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["edge"] = None if self.edge is None else list(self.edge)
        out["bound"] = _jsonable(self.bound)
        out["observed"] = _jsonable(self.observed)
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationRecord":
        d = dict(d)
        if d.get("edge") is not None:
            d["edge"] = tuple(d["edge"])
        return cls(**d)


@dataclass
class Tally:
    checked: int = 0
    passed: int = 0
    equalities: int = 0
    failures: int = 0
    skipped: int = 0
    graphs: int = 0
    failure_records: list = field(default_factory=list)
    equality_records: list = field(default_factory=list)
    skipped_records: list = field(default_factory=list)
    cap: int = DEFAULT_EQUALITY_CAP

    def bound_check(self, observed, bound, make: Callable[[str], VerificationRecord]) -> None:
        """Upper-bound statement: fail iff observed > bound, equality iff equal."""
        self.checked += 1
        if observed > bound:
            self.failures += 1
            self.failure_records.append(make("fail"))
            return
        self.passed += 1
        if observed == bound:
            self.equalities += 1
            if len(self.equality_records) < self.cap:
                self.equality_records.append(make("equality"))

    def exact_check(self, observed, expected, make: Callable[[str], VerificationRecord]) -> None:
        """Identity statement: pass only on equality."""
        self.checked += 1
        if observed != expected:
            self.failures += 1
            self.failure_records.append(make("fail"))
            return
        self.passed += 1
        self.equalities += 1
        if len(self.equality_records) < self.cap:
            self.equality_records.append(make("equality"))

    def truth_check(self, holds: bool, make: Callable[[str], VerificationRecord]) -> None:
        """Implication whose conclusion either holds or does not."""
        self.checked += 1
        if holds:
            self.passed += 1
        else:
            self.failures += 1
            self.failure_records.append(make("fail"))

    def skip(self, make: Callable[[], dict]) -> None:
        self.skipped += 1
        if len(self.skipped_records) < SKIP_SAMPLE_CAP:
            self.skipped_records.append(make())

    def merge(self, other: "Tally") -> None:
        for name in ("checked", "passed", "equalities", "failures", "skipped", "graphs"):
            setattr(self, name, getattr(self, name) + getattr(other, name))
        self.failure_records.extend(other.failure_records)
        room = self.cap - len(self.equality_records)
        self.equality_records.extend(other.equality_records[:max(room, 0)])
        room = SKIP_SAMPLE_CAP - len(self.skipped_records)
        self.skipped_records.extend(other.skipped_records[:max(room, 0)])

    def totals(self) -> dict:
        return {
            "checked": self.checked,
            "passed": self.passed,
            "equalities": self.equalities,
            "failures": self.failures,
            "skipped": self.skipped,
            "graphs": self.graphs,
        }


# configuration --------------------------------------------------------------

@dataclass(frozen=True)
class CampaignConfig:
    target: str
    mode: str = "exhaustive"
    n_range: tuple[int, int] = (4, 6)
    k_range: Optional[tuple[int, int]] = None
    s_range: Optional[tuple[int, int]] = None
    samples: int = 0
    seed: Optional[int] = None
    workers: int = 1
    equality_cap: int = DEFAULT_EQUALITY_CAP
    allow_n8: bool = False
    p_grid: tuple[float, ...] = DEFAULT_P_GRID

    def validate(self) -> None:
        if self.target not in TARGETS:
            raise ConfigError(f"unknown target {self.target!r}; choose from {', '.join(TARGETS)}")
        if self.mode not in ("exhaustive", "random"):
            raise ConfigError(f"unknown mode {self.mode!r}")
        for name in ("n_range", "k_range", "s_range"):
            rng = getattr(self, name)
            if rng is not None and (len(rng) != 2 or rng[0] > rng[1]):
                raise ConfigError(f"{name} {rng} is not an increasing pair")
        lo, hi = self.n_range
        if lo < 1 or hi > 62:
            raise ConfigError(f"n range {self.n_range} outside 1..62")
        if self.workers < 1:
            raise ConfigError("worker count must be at least 1")
        if self.target in GRAPH_TARGETS:
            if self.mode == "exhaustive":
                limit = EXHAUSTIVE_OPT_IN_LIMIT if self.allow_n8 else EXHAUSTIVE_LIMIT
                if hi > limit:
                    raise ConfigError(
                        f"exhaustive mode requires n <= {limit}"
                        + ("" if self.allow_n8 else " (n = 8 needs --allow-n8)"))
            else:
                if self.samples < 1:
                    raise ConfigError("random mode requires a sample count of at least 1")
                if self.seed is None:
                    raise ConfigError("random mode requires an explicit seed")
                if not self.p_grid or any(not 0 <= p <= 1 for p in self.p_grid):
                    raise ConfigError(f"bad edge-probability grid {self.p_grid}")

    def to_dict(self) -> dict:
        out = asdict(self)
        for name in ("n_range", "k_range", "s_range", "p_grid"):
            if out[name] is not None:
                out[name] = list(out[name])
        return out


def _krange(cfg: CampaignConfig, lo: int, hi: int) -> range:
    if cfg.k_range is not None:
        lo, hi = max(lo, cfg.k_range[0]), min(hi, cfg.k_range[1])
    return range(lo, hi + 1)


def _srange(cfg: CampaignConfig, lo: int, hi: int) -> range:
    if cfg.s_range is not None:
        lo, hi = max(lo, cfg.s_range[0]), min(hi, cfg.s_range[1])
    return range(lo, hi + 1)


def _default_k_hi(cfg: CampaignConfig, n: int) -> int:
    return n if cfg.k_range is None else cfg.k_range[1]


# cached bound tables --------------------------------------------------------

g_bound = lru_cache(maxsize=None)(bounds.g_s)
psi_bound = lru_cache(maxsize=None)(bounds.psi_s)
kopylov_bound = lru_cache(maxsize=None)(bounds.kopylov_bound)


# per-graph checkers ---------------------------------------------------------

def _record(statement, g, edge, k, s, bound, observed, verdict, witness=None, **params):
    return VerificationRecord(statement, to_graph6(g) if g is not None else None,
                              edge, k, s, bound, observed, verdict, witness, params)


def _edge_witness(g: Graph, edge: tuple[int, int]) -> list:
    report = longest_cycle_through_edge(g, *edge)
    return list(report.witness) if report.witness else []


def _check_theorem_main(g: Graph, cfg: CampaignConfig, tally: Tally, edges=None) -> None:
    n = g.n
    profile = clique_profile(g)
    lengths = edge_cycle_lengths(g)
    ks = _krange(cfg, 4, _default_k_hi(cfg, n))
    ss = _srange(cfg, 2, n)
    for edge, c in lengths.items():
        if edges is not None and edge not in edges:
            continue
        for k in ks:
            if c >= k:
                tally.skip(lambda: {"graph": to_graph6(g), "edge": list(edge), "k": k,
                                    "reason": f"c_e = {c} >= k"})
                continue
            for s in ss:
                observed = profile[s]
                bound = g_bound(n, k, s)
                tally.bound_check(observed, bound, lambda v: _record(
                    "theorem-main", g, edge, k, s, bound, observed, v,
                    _edge_witness(g, edge), c_e=c))


def _check_fan(g: Graph, cfg: CampaignConfig, tally: Tally, edges=None) -> None:
    n = g.n
    e = g.num_edges()
    lengths = edge_cycle_lengths(g)
    for edge, c in lengths.items():
        if edges is not None and edge not in edges:
            continue
        for k in _krange(cfg, 4, _default_k_hi(cfg, n)):
            if c >= k:
                tally.skip(lambda: {"graph": to_graph6(g), "edge": list(edge), "k": k,
                                    "reason": f"c_e = {c} >= k"})
                continue
            bound = g_bound(n, k, 2)
            tally.bound_check(e, bound, lambda v: _record(
                "fan", g, edge, k, 2, bound, e, v, _edge_witness(g, edge), c_e=c))


def _check_theorem_b(g: Graph, cfg: CampaignConfig, tally: Tally, edges=None) -> None:
    n = g.n
    if n < 2:
        return
    circ = circumference_length(g)
    profile = None
    for k in _krange(cfg, 4, _default_k_hi(cfg, n)):
        if circ >= k:
            tally.skip(lambda: {"graph": to_graph6(g), "k": k, "reason": f"circumference {circ} >= k"})
            continue
        if profile is None:
            profile = clique_profile(g)
        for s in _srange(cfg, 2, n):
            observed = profile[s]
            bound = psi_bound(n, k, s)
            tally.bound_check(observed, bound, lambda v: _record(
                "theorem-b", g, None, k, s, bound, observed, v, circumference=circ))


def _check_kopylov_luo(g: Graph, cfg: CampaignConfig, tally: Tally, edges=None) -> None:
    n = g.n
    if n < 5:
        return
    circ = circumference_length(g)
    luo = cfg.target == "luo"
    profile = clique_profile(g)
    for k in _krange(cfg, 5, n):
        if circ >= k:
            tally.skip(lambda: {"graph": to_graph6(g), "k": k, "reason": f"circumference {circ} >= k"})
            continue
        for s in (_srange(cfg, 2, n) if luo else (2,)):
            observed = profile[s]
            bound = kopylov_bound(n, k, s)
            tally.bound_check(observed, bound, lambda v: _record(
                cfg.target, g, None, k, s, bound, observed, v, circumference=circ))


def _check_erdos_gallai(g: Graph, cfg: CampaignConfig, tally: Tally, edges=None) -> None:
    n = g.n
    e = g.num_edges()
    circ = circumference_length(g)
    longest = longest_path_length(g)
    hi = _default_k_hi(cfg, n)
    for k in _krange(cfg, 3, min(hi, n)):
        if circ >= k:
            tally.skip(lambda: {"graph": to_graph6(g), "k": k, "reason": f"circumference {circ} >= k"})
        else:
            bound = Fraction((k - 1) * (n - 1), 2)
            tally.bound_check(e, bound, lambda v: _record(
                "erdos-gallai-cycle", g, None, k, 2, bound, e, v, circumference=circ))
    for k in _krange(cfg, 2, hi):
        if longest >= k:
            tally.skip(lambda: {"graph": to_graph6(g), "k": k,
                                "reason": f"path on {longest} >= k vertices"})
        else:
            bound = Fraction(n * (k - 2), 2)
            tally.bound_check(e, bound, lambda v: _record(
                "erdos-gallai-path", g, None, k, 2, bound, e, v, longest_path=longest))


def _ordered_edges(g: Graph, edges=None) -> list[tuple[int, int]]:
    """(v, u) switching pairs: every edge in both orientations unless sampled."""
    if edges is not None:
        return list(edges)
    out = []
    for u, v in g.edges():
        out.append((u, v))
        out.append((v, u))
    return out


def _check_lemma_a(g: Graph, cfg: CampaignConfig, tally: Tally, edges=None) -> None:
    before: dict[int, list[int]] = {}
    for v, u in _ordered_edges(g, edges):
        if u not in before:
            before[u] = rooted_cycle_lengths(g, u)
        switched = edge_switch(g, v, u)
        after = rooted_cycle_lengths(switched, u) if switched is not g else before[u]
        for x in iter_bits(g.adj[u]):
            tally.bound_check(after[x], before[u][x], lambda verdict: _record(
                "lemma-A", g, (u, x), None, None, before[u][x], after[x], verdict,
                switch=[v, u], switched=to_graph6(switched)))


def _check_lemma_b(g: Graph, cfg: CampaignConfig, tally: Tally, edges=None) -> None:
    for v, u in _ordered_edges(g, edges):
        common = g.adj[u] & g.adj[v]
        is_cut = is_vertex_cut(g, (u, v))
        if not common:
            if u < v or edges is not None:
                h, _ = contract(g, u, v)
                ok = is_two_connected(h) or is_cut
                tally.truth_check(ok, lambda verdict: _record(
                    "lemma-B(i)", g, (u, v), None, None, 0, int(not ok), verdict,
                    contracted=to_graph6(h), vertex_cut=is_cut))
            tally.skip(lambda: {"graph": to_graph6(g), "edge": [u, v], "switch": [v, u],
                                "reason": "lemma-B(ii) needs a common neighbour"})
        else:
            h = edge_switch(g, v, u)
            ok = is_two_connected(h) or is_cut
            tally.truth_check(ok, lambda verdict: _record(
                "lemma-B(ii)", g, (u, v), None, None, 0, int(not ok), verdict,
                switch=[v, u], switched=to_graph6(h), vertex_cut=is_cut))
            if u < v or edges is not None:
                tally.skip(lambda: {"graph": to_graph6(g), "edge": [u, v],
                                    "reason": "lemma-B(i) needs disjoint neighbourhoods"})


def _check_lemma_c(g: Graph, cfg: CampaignConfig, tally: Tally, edges=None) -> None:
    n = g.n
    base = clique_profile(g)
    for v, u in _ordered_edges(g, edges):
        if not g.adj[u] & g.adj[v] and (u < v or edges is not None):
            h, _ = contract(g, u, v)
            merged = clique_profile(h)
            for s in _srange(cfg, 3, n):
                tally.bound_check(base[s], merged[s], lambda verdict: _record(
                    "lemma-C(i)", g, (u, v), None, s, merged[s], base[s], verdict,
                    contracted=to_graph6(h)))
        elif g.adj[u] & g.adj[v] and (u < v or edges is not None):
            tally.skip(lambda: {"graph": to_graph6(g), "edge": [u, v],
                                "reason": "lemma-C(i) needs disjoint neighbourhoods"})
        h = edge_switch(g, v, u)
        switched = clique_profile(h) if h is not g else base
        for s in _srange(cfg, 2, n):
            tally.bound_check(base[s], switched[s], lambda verdict: _record(
                "lemma-C(ii)", g, (u, v), None, s, switched[s], base[s], verdict,
                switch=[v, u], switched=to_graph6(h)))


CHECKERS = {
    "theorem-main": _check_theorem_main,
    "theorem-b": _check_theorem_b,
    "kopylov": _check_kopylov_luo,
    "luo": _check_kopylov_luo,
    "fan": _check_fan,
    "erdos-gallai": _check_erdos_gallai,
    "lemma-A": _check_lemma_a,
    "lemma-B": _check_lemma_b,
    "lemma-C": _check_lemma_c,
}
_LEMMAS = ("lemma-A", "lemma-B", "lemma-C")


def check_graph(g: Graph, cfg: CampaignConfig, tally: Optional[Tally] = None,
                edges=None) -> Tally:
    """Run the target's checks on one graph (all edges unless ``edges`` is given).

    The graph must already satisfy the target's connectivity hypothesis.
    """
    tally = tally if tally is not None else Tally(cap=cfg.equality_cap)
    CHECKERS[cfg.target](g, cfg, tally, edges)
    return tally


# grid targets ---------------------------------------------------------------

def _grid_units(cfg: CampaignConfig) -> list:
    if cfg.target == "inequalities":
        lo, hi = cfg.k_range or (5, 40)
        return [("k", k) for k in range(max(lo, 5), hi + 1)]
    lo, hi = cfg.n_range
    return [("n", n) for n in range(lo, hi + 1)]


def _run_grid_unit(cfg: CampaignConfig, unit) -> Tally:
    tally = Tally(cap=cfg.equality_cap)
    _, value = unit
    if cfg.target == "proposition":
        n = value
        for k in _krange(cfg, 5, n):
            for s in _srange(cfg, 2, 20):
                lhs, rhs = kopylov_bound(n, k, s), psi_bound(n, k, s)
                tally.bound_check(lhs, rhs, lambda v: _record(
                    "proposition", None, None, k, s, rhs, lhs, v, n=n))
    elif cfg.target == "inequalities":
        k = value
        for s in _srange(cfg, 2, 12):
            for t1 in range(0, k - 2):
                for t2 in range(0, k - 2):
                    lhs, rhs = bounds.inequality_1_sides(k, s, t1, t2)
                    tally.bound_check(lhs, rhs, lambda v: _record(
                        "inequality-1", None, None, k, s, rhs, lhs, v, t1=t1, t2=t2))
                    if s >= 3 and t1 <= k - 4 and t2 <= k - 4:
                        lhs, rhs = bounds.inequality_3_sides(k, s, t1, t2)
                        tally.bound_check(lhs, rhs, lambda v: _record(
                            "inequality-3", None, None, k, s, rhs, lhs, v, t1=t1, t2=t2))
    else:
        _run_sharpness(cfg, value, tally)
    return tally


SHARPNESS_CYCLE_LIMIT = 12


def _run_sharpness(cfg: CampaignConfig, n: int, tally: Tally) -> None:
    from .cycles import circumference

    for k in _krange(cfg, 4, n):
        builds = [bounds.build_X(n, k), bounds.build_Q(n, k)]
        builds += [bounds.build_H(n, k, a) for a in range(1, (k + 1) // 2)]
        for g, spec in builds:
            profile = clique_profile(g)
            predicted = bounds.predicted_profile(spec)
            label = spec.family if spec.a is None else f"H(a={spec.a})"
            for s in _srange(cfg, 2, n):
                tally.exact_check(profile[s], predicted[s], lambda v: _record(
                    f"sharpness-{label}", g, spec.edge, k, s, predicted[s], profile[s], v))
            if n > SHARPNESS_CYCLE_LIMIT:
                continue
            if spec.family == "X":
                d = bounds.decompose(n, k, "g")
                expected = k - 1 if d.r >= 1 else d.t + 2
                c = longest_cycle_through_edge(g, 0, 1).length
                tally.exact_check(c, expected, lambda v: _record(
                    "extremal-X-c_uv", g, (0, 1), k, None, expected, c, v))
                ok = is_two_connected(g) or n < 4
                tally.truth_check(ok, lambda v: _record(
                    "extremal-X-2-connected", g, None, k, None, 1, int(ok), v))
            else:
                circ = circumference(g).length
                tally.bound_check(circ, k - 1, lambda v: _record(
                    f"extremal-{label}-circumference", g, None, k, None, k - 1, circ, v))


# campaign driver ------------------------------------------------------------

def _units(cfg: CampaignConfig) -> list:
    if cfg.target in GRID_TARGETS:
        return _grid_units(cfg)
    if cfg.mode == "random":
        return [("samples", i, min(i + UNIT_SAMPLES, cfg.samples))
                for i in range(0, cfg.samples, UNIT_SAMPLES)]
    units = []
    lo, hi = cfg.n_range
    for n in range(lo, hi + 1):
        total = 1 << (n * (n - 1) // 2)
        units += [("counter", n, i, min(i + UNIT_COUNTERS, total))
                  for i in range(0, total, UNIT_COUNTERS)]
    return units


def draw_sample(cfg: CampaignConfig, index: int):
    """The graph (and for lemma targets, the switching pair) of one random sample."""
    rng = sample_rng(cfg.seed, index)
    lo, hi = cfg.n_range
    filter = GRAPH_TARGETS[cfg.target]
    lo = max(lo, 3 if filter == "two_connected" else 1)
    for _ in range(SAMPLE_REDRAWS):
        n = rng.randint(lo, hi)
        p = rng.choice(cfg.p_grid)
        sub_seed = rng.getrandbits(64)
        try:
            if filter == "two_connected":
                g = random_two_connected(n, p, sub_seed, SAMPLE_TRIES)
            elif filter == "connected":
                g = random_connected(n, p, sub_seed, SAMPLE_TRIES)
            else:
                g = random_graph(n, p, sub_seed)
            break
        except RetryBudgetExceeded:
            # sparse (n, p) cells rarely meet the filter; redraw the cell
            continue
    else:
        raise RetryBudgetExceeded(f"sample {index}: no admissible (n, p) cell in {SAMPLE_REDRAWS} draws")
    edges = None
    if cfg.target in _LEMMAS:
        all_edges = g.edges()
        if not all_edges:
            return g, []
        u, v = rng.choice(all_edges)
        edges = [(u, v)] if rng.random() < 0.5 else [(v, u)]
    return g, edges


def _run_unit(cfg: CampaignConfig, unit) -> Tally:
    if cfg.target in GRID_TARGETS:
        return _run_grid_unit(cfg, unit)
    tally = Tally(cap=cfg.equality_cap)
    checker = CHECKERS[cfg.target]
    if unit[0] == "samples":
        for index in range(unit[1], unit[2]):
            g, edges = draw_sample(cfg, index)
            tally.graphs += 1
            if edges == []:
                continue
            checker(g, cfg, tally, edges)
        return tally
    _, n, start, stop = unit
    for g in enumerate_graphs(n, GRAPH_TARGETS[cfg.target], start, stop, allow_n8=True):
        tally.graphs += 1
        checker(g, cfg, tally)
    return tally


def _run_partition(cfg: CampaignConfig, units: Sequence) -> list[Tally]:
    return [_run_unit(cfg, unit) for unit in units]


def _digest(tallies: Sequence[Tally]) -> str:
    h = hashlib.sha256()
    for t in tallies:
        h.update(json.dumps(t.totals(), sort_keys=True).encode())
        for rec in t.failure_records + t.equality_records:
            h.update(json.dumps(rec.to_dict(), sort_keys=True).encode())
    return h.hexdigest()


@dataclass
class CampaignReport:
    config: CampaignConfig
    tally: Tally
    wall_time: float
    partitions: list

    @property
    def failures(self) -> int:
        return self.tally.failures

    def records(self) -> list[VerificationRecord]:
        return self.tally.failure_records + self.tally.equality_records

    def to_dict(self, include_time: bool = True) -> dict:
        out = {
            "config": self.config.to_dict(),
            "totals": self.tally.totals(),
            "records": [r.to_dict() for r in self.records()],
            "skipped_sample": self.tally.skipped_records,
            "partitions": self.partitions,
        }
        if include_time:
            out["wall_time"] = round(self.wall_time, 6)
        return out


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def run_campaign(cfg: CampaignConfig) -> CampaignReport:
    cfg.validate()
    began = time.perf_counter()
    units = _units(cfg)
    w = cfg.workers
    slices = [units[i * len(units) // w:(i + 1) * len(units) // w] for i in range(w)]
    if w == 1:
        results = [_run_partition(cfg, slices[0])]
    else:
        with ProcessPoolExecutor(max_workers=w) as pool:
            futures = [pool.submit(_run_partition, cfg, part) for part in slices]
            results = [f.result() for f in futures]
    merged = Tally(cap=cfg.equality_cap)
    partitions = []
    for worker, (part, tallies) in enumerate(zip(slices, results)):
        for t in tallies:
            merged.merge(t)
        partitions.append({
            "worker": worker,
            "units": len(part),
            "first_unit": list(part[0]) if part else None,
            "last_unit": list(part[-1]) if part else None,
            "checked": sum(t.checked for t in tallies),
            "digest": _digest(tallies),
        })
    return CampaignReport(cfg, merged, time.perf_counter() - began, partitions)


def verify_theorem_main(cfg: CampaignConfig) -> CampaignReport:
    _require_target(cfg, ("theorem-main",))
    return run_campaign(cfg)


def verify_theorem_b(cfg: CampaignConfig) -> CampaignReport:
    _require_target(cfg, ("theorem-b",))
    return run_campaign(cfg)


def verify_classical_bounds(cfg: CampaignConfig) -> CampaignReport:
    _require_target(cfg, ("kopylov", "luo", "fan", "erdos-gallai"))
    return run_campaign(cfg)


def verify_lemmas(cfg: CampaignConfig) -> CampaignReport:
    _require_target(cfg, _LEMMAS)
    return run_campaign(cfg)


def _require_target(cfg: CampaignConfig, allowed: Sequence[str]) -> None:
    if cfg.target not in allowed:
        raise ConfigError(f"target {cfg.target!r} not handled here; expected one of {allowed}")


# extremal witnesses ---------------------------------------------------------

def fingerprint(g: Graph, edge: tuple[int, int]) -> tuple[tuple[int, ...], int]:
    """Clique profile plus c_e: a cheap stand-in for labelled-isomorphism to X_{n,k}."""
    return tuple(clique_profile(g).counts), longest_cycle_through_edge(g, *edge).length


def find_extremal_witnesses(n: int, k: int, s: int, mode: str = "exhaustive",
                            samples: int = 0, seed: Optional[int] = None) -> list[VerificationRecord]:
    """Every (graph, edge) meeting the main hypothesis with N_s equal to g_s(n, k)."""
    if mode == "exhaustive" and n > EXHAUSTIVE_LIMIT:
        raise ConfigError(f"exhaustive witness search requires n <= {EXHAUSTIVE_LIMIT}")
    cfg = CampaignConfig("theorem-main", mode, (n, n), (k, k), (s, s), samples, seed,
                         equality_cap=1 << 62)
    report = run_campaign(cfg)
    return list(report.tally.equality_records)


def contains_fingerprint(records: Sequence[VerificationRecord], g: Graph,
                         edge: tuple[int, int]) -> bool:
    target = fingerprint(g, edge)
    return any(fingerprint(from_graph6(r.graph), r.edge) == target for r in records)


# report I/O -----------------------------------------------------------------

CSV_FIELDS = ("statement", "graph", "edge", "k", "s", "bound", "observed", "verdict", "witness", "params")


def records_to_csv(records: Sequence[dict]) -> str:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for rec in records:
        row = []
        for name in CSV_FIELDS:
            value = rec.get(name)
            if isinstance(value, (list, dict)):
                value = json.dumps(value, sort_keys=True)
            row.append("" if value is None else value)
        writer.writerow(row)
    return buf.getvalue()


def merge_reports(reports: Sequence[dict], equality_cap: int = DEFAULT_EQUALITY_CAP) -> dict:
    """Combine JSON reports of one target (e.g. separate n ranges) into one."""
    if not reports:
        raise ConfigError("no reports to merge")
    targets = {r["config"]["target"] for r in reports}
    if len(targets) != 1:
        raise ConfigError(f"cannot merge reports of different targets: {sorted(targets)}")
    totals = {key: 0 for key in reports[0]["totals"]}
    failures, equalities = [], []
    for r in reports:
        for key, value in r["totals"].items():
            totals[key] = totals.get(key, 0) + value
        for rec in r["records"]:
            (failures if rec["verdict"] == "fail" else equalities).append(rec)
    return {
        "config": {"target": targets.pop(), "merged_from": [r["config"] for r in reports]},
        "totals": totals,
        "records": failures + equalities[:equality_cap],
        "partitions": [p for r in reports for p in r.get("partitions", [])],
    }


__all__ = [
    "CampaignConfig", "CampaignReport", "ConfigError", "RetryBudgetExceeded", "Tally",
    "VerificationRecord", "check_graph", "contains_fingerprint", "count_graphs",
    "draw_sample", "enumerate_graphs", "find_extremal_witnesses", "fingerprint",
    "graph_from_counter", "merge_reports", "random_connected", "random_graph",
    "random_two_connected", "records_to_csv", "run_campaign", "verify_classical_bounds",
    "verify_lemmas", "verify_theorem_b", "verify_theorem_main",
]
