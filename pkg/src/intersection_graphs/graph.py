"""Intersection graphs: vertices are non-trivial proper subgroups, edges join
subgroups that share a non-identity element."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .chain import BudgetExceeded, GeneratedGroup, build_chain, intersect_trivial, join
from .lattice import (DEFAULT_GROUP_BUDGET, DEFAULT_LATTICE_BUDGET, SubgroupSet, _is_prime,
                      all_subgroups, prime_order_subgroups)

DISCONNECTED = "disconnected"
INF = -1  # distance-matrix sentinel for unreachable pairs


class IntersectionGraph:
    """Adjacency held as packed bit rows; distances computed on demand."""

    def __init__(self, subgroups: SubgroupSet, adjacency: np.ndarray):
        adjacency = np.asarray(adjacency, dtype=bool)
        if adjacency.shape != (len(subgroups),) * 2:
            raise ValueError("adjacency shape does not match the vertex count")
        if (adjacency != adjacency.T).any() or adjacency.diagonal().any():
            raise ValueError("adjacency must be symmetric without loops")
        self.subgroups = subgroups
        self.adjacency = adjacency
        self._bits = np.packbits(adjacency, axis=1)
        self._dist: np.ndarray | None = None

    @property
    def n_vertices(self) -> int:
        return self.adjacency.shape[0]

    @property
    def n_edges(self) -> int:
        return int(self.adjacency.sum()) // 2

    def neighbors(self, v: int) -> np.ndarray:
        return np.flatnonzero(self.adjacency[v])

    def is_complete(self) -> bool:
        n = self.n_vertices
        return self.n_edges == n * (n - 1) // 2

    def _bfs(self, source: int) -> np.ndarray:
        n = self.n_vertices
        dist = np.full(n, INF, dtype=np.int32)
        dist[source] = 0
        seen = np.zeros(self._bits.shape[1], dtype=np.uint8)
        seen[source // 8] |= np.uint8(0x80 >> (source % 8))
        frontier = np.array([source])
        d = 0
        while frontier.size:
            d += 1
            reach = np.bitwise_or.reduce(self._bits[frontier], axis=0)
            new = reach & ~seen
            if not new.any():
                break
            seen |= new
            frontier = np.flatnonzero(np.unpackbits(new)[:n])
            dist[frontier] = d
        return dist

    def distances(self) -> np.ndarray:
        """All-pairs shortest paths; ``INF`` (-1) marks unreachable pairs."""
        if self._dist is None:
            self._dist = np.stack([self._bfs(s) for s in range(self.n_vertices)]) \
                if self.n_vertices else np.zeros((0, 0), dtype=np.int32)
        return self._dist

    def components(self) -> np.ndarray:
        labels = np.full(self.n_vertices, -1, dtype=np.int64)
        label = 0
        for v in range(self.n_vertices):
            if labels[v] < 0:
                labels[self._bfs(v) >= 0] = label
                label += 1
        return labels

    def is_connected(self) -> bool:
        return self.n_vertices > 0 and (self.components() == 0).all()

    def to_dict(self) -> dict:
        return {
            "group": self.subgroups.ambient.label,
            "order": self.subgroups.order,
            "vertices": [{"id": s.id, "order": s.order,
                          "neighbors": self.neighbors(s.id).tolist()} for s in self.subgroups],
        }

    def export(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_dict(), fh, indent=1)
            fh.write("\n")


def _adjacency_elements(s: SubgroupSet) -> np.ndarray:
    m = s.membership.astype(np.float32)
    m[:, s.table.identity] = 0
    adj = (m @ m.T) > 0.5
    np.fill_diagonal(adj, False)
    return adj


def _adjacency_sift(s: SubgroupSet) -> np.ndarray:
    n = len(s)
    adj = np.zeros((n, n), dtype=bool)
    for a, b in combinations(range(n), 2):
        try:
            rep = intersect_trivial(s[a].chain, s[b].chain)
        except BudgetExceeded as exc:
            raise BudgetExceeded(f"pair ({a}, {b}): {exc}") from exc
        adj[a, b] = adj[b, a] = not rep.trivial
    return adj


def build_graph(s: SubgroupSet, method: str = "elements") -> IntersectionGraph:
    """Build the intersection graph over ``s``.

    ``method="elements"`` intersects element sets through one incidence-matrix
    product; ``method="sift"`` calls :func:`intersect_trivial` on every pair.
    Both give the same graph.
    """
    if method == "elements":
        adj = _adjacency_elements(s)
    elif method == "sift":
        adj = _adjacency_sift(s)
    else:
        raise ValueError(f"unknown method {method!r}")
    return IntersectionGraph(s, adj)


def intersection_graph(g: GeneratedGroup, group_budget: int = DEFAULT_GROUP_BUDGET,
                       lattice_budget: int = DEFAULT_LATTICE_BUDGET) -> IntersectionGraph:
    return build_graph(all_subgroups(g, group_budget, lattice_budget))


def diameter(g: IntersectionGraph) -> int | str:
    """Largest eccentricity, or ``"disconnected"``.

    A graph with no vertices is reported as disconnected; a single vertex has
    diameter 0.
    """
    if g.n_vertices == 0:
        return DISCONNECTED
    d = g.distances()
    if (d == INF).any():
        return DISCONNECTED
    return int(d.max())


def distance(g: IntersectionGraph, u: int, v: int) -> float | int:
    n = g.n_vertices
    for x in (u, v):
        if not 0 <= x < n:
            raise KeyError(f"unknown vertex {x}")
    d = int(g.distances()[u, v]) if g._dist is not None else int(g._bfs(u)[v])
    return math.inf if d == INF else d


def diam2_criterion(g: GeneratedGroup, budget: int | None = None) -> bool:
    """True iff no two prime-order elements generate ``g``."""
    order = build_chain(g).order
    kwargs = {} if budget is None else {"budget": budget}
    reps = prime_order_subgroups(g, **kwargs)
    for a, b in combinations(reps, 2):
        if join(a.to_group(), b.generators).order == order:
            return False
    return True


@dataclass
class ReductionReport:
    group: str | None
    diameter: int | str
    prime_max_distance: int | str | None
    prime_vertices: int
    equal: bool
    degenerate: bool
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def prime_reduction_check(g: GeneratedGroup | IntersectionGraph) -> ReductionReport:
    """Compare the diameter with the largest distance between prime-order cyclic vertices."""
    graph = g if isinstance(g, IntersectionGraph) else intersection_graph(g)
    label = graph.subgroups.ambient.label
    diam = diameter(graph)
    primes = [s.id for s in graph.subgroups if _is_prime(s.order)]
    notes = []
    if diam == DISCONNECTED:
        notes.append("graph is disconnected")
        m = None
        if len(primes) >= 1:
            sub = graph.distances()[np.ix_(primes, primes)]
            m = DISCONNECTED if (sub == INF).any() else int(sub.max())
        return ReductionReport(label, diam, m, len(primes), m == diam, False, notes)
    sub = graph.distances()[np.ix_(primes, primes)] if primes else np.zeros((0, 0))
    m = int(sub.max()) if sub.size else 0
    degenerate = len(primes) < 2
    if degenerate:
        notes.append(f"only {len(primes)} prime-order vertex; no distinct pair A != B exists")
    return ReductionReport(label, diam, m, len(primes), m == diam, degenerate, notes)
