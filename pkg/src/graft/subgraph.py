"""Search for degree-bounded edge subsets.

A ``(p, q)``-subgraph is a set of ``q`` edges in which no vertex is incident
to more than ``p`` of them. The core search computes the largest such set;
an ``(r, t)``-subgraph exists iff that maximum reaches ``t``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .graph import Edge, Graph, NotFound, normalize

# Branch-and-bound is exact up to this many edges; beyond it the greedy answer is returned.
EXHAUSTIVE_EDGE_LIMIT = 24


@dataclass(frozen=True)
class DegreeBoundedSubgraph:
    edges: frozenset[Edge]
    p: int

    @property
    def q(self) -> int:
        return len(self.edges)

    def degrees(self) -> Counter[int]:
        return Counter(x for e in self.edges for x in e)

    def vertices(self) -> list[int]:
        return sorted(self.degrees())

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class BoundedSearch:
    count: int
    witness: tuple[Edge, ...]
    exact: bool


def is_pq_subgraph(g: Graph, edges: Iterable[Edge], p: int, q: int) -> bool:
    """Check both defining conditions directly against ``g``."""
    es = [normalize(*e) for e in edges]
    if len(es) != q or len(set(es)) != q:
        return False
    if not all(e in g.edges for e in es):
        return False
    deg = Counter(x for e in es for x in e)
    return all(d <= p for d in deg.values())


def _greedy(edges: list[Edge], p: int, n: int) -> list[Edge]:
    load = [0] * (n + 1)
    chosen = []
    for u, v in edges:
        if load[u] < p and load[v] < p:
            chosen.append((u, v))
            load[u] += 1
            load[v] += 1
    return chosen


def _branch_and_bound(edges: list[Edge], p: int, n: int, incumbent: list[Edge], target: int | None) -> list[Edge]:
    m = len(edges)
    cap = [p] * (n + 1)
    rem = [0] * (n + 1)
    for u, v in edges:
        rem[u] += 1
        rem[v] += 1
    best = list(incumbent)
    chosen: list[Edge] = []
    stop_at = target

    def optimistic(i: int) -> int:
        # Two upper bounds on edges still addable: half the summed vertex
        # budgets, and the budgets of a vertex cover of the open edges.
        half = sum(min(c, r) for c, r in zip(cap, rem)) // 2
        cover: set[int] = set()
        for u, v in edges[i:]:
            if cap[u] and cap[v] and u not in cover and v not in cover:
                cover.add(u if rem[u] >= rem[v] else v)
        return min(half, sum(min(cap[x], rem[x]) for x in cover))

    def search(i: int) -> bool:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
            if stop_at is not None and len(best) >= stop_at:
                return True
        if i == m or len(chosen) + optimistic(i) <= len(best):
            return False
        u, v = edges[i]
        rem[u] -= 1
        rem[v] -= 1
        if cap[u] and cap[v]:
            cap[u] -= 1
            cap[v] -= 1
            chosen.append((u, v))
            done = search(i + 1)
            chosen.pop()
            cap[u] += 1
            cap[v] += 1
            if done:
                rem[u] += 1
                rem[v] += 1
                return True
        done = search(i + 1)
        rem[u] += 1
        rem[v] += 1
        return done

    search(0)
    return best


def max_degree_bounded_edges(
    g: Graph, p: int, *, target: int | None = None, edge_limit: int = EXHAUSTIVE_EDGE_LIMIT
) -> BoundedSearch:
    """Largest edge set of ``g`` with every vertex incident to at most ``p`` of its edges.

    With ``target`` set, the search stops once ``target`` edges are found, so
    ``count`` is the true maximum only when it comes out below ``target``.
    """
    if p < 1:
        raise ValueError(f"degree cap must be positive, got {p}")
    edges = g.sorted_edges()
    greedy = _greedy(edges, p, g.n)
    if len(edges) > edge_limit:
        return BoundedSearch(len(greedy), tuple(greedy), exact=False)
    ceiling = min(len(edges), sum(min(p, g.degree(v)) for v in g.vertices) // 2)
    if len(greedy) >= ceiling or (target is not None and len(greedy) >= target):
        return BoundedSearch(len(greedy), tuple(greedy), exact=True)
    best = _branch_and_bound(edges, p, g.n, greedy, target)
    return BoundedSearch(len(best), tuple(sorted(best)), exact=True)


def find_rt_subgraph(g: Graph, r: int, t: int, **kwargs) -> DegreeBoundedSubgraph | NotFound:
    """An ``(r, t)``-subgraph of ``g`` made of the lexicographically smallest witness edges."""
    if r < 1 or t < 1:
        raise ValueError(f"r and t must be positive (r={r}, t={t})")
    res = max_degree_bounded_edges(g, r, target=t, **kwargs)
    if res.count < t:
        return NotFound(exact=res.exact)
    return DegreeBoundedSubgraph(frozenset(sorted(res.witness)[:t]), r)
