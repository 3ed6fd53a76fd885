"""Degree-preserving (r, k)-extensions.

An extension of ``G`` on ``{1..n}`` is a graph ``H`` on ``{1..n+r}`` in which
vertex ``i <= n`` keeps its degree from ``G`` and each new vertex ``n+j`` has
degree ``k``. Its cost counts the edits to edges touching ``{1..n}``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations

from .errors import BadWitness, DegreeMismatch, InfeasibleTrivial, ParityViolation, WrongVertexCount
from .graph import Edge, Graph
from .regular import regular_graph
from .subgraph import DegreeBoundedSubgraph, is_pq_subgraph

log = logging.getLogger(__name__)


def rt_size(r: int, k: int) -> int:
    """Edge count ``t = r(k-r+1)/2`` of the witness for an optimal extension."""
    return r * (k - r + 1) // 2


@dataclass(frozen=True)
class ExtensionProblem:
    g: Graph
    r: int
    k: int

    def __post_init__(self) -> None:
        if self.r < 1 or self.k < 1:
            raise ValueError(f"r and k must be at least 1 (r={self.r}, k={self.k})")
        if (self.r * self.k) % 2:
            raise ParityViolation(self.r, self.k)

    @property
    def t(self) -> int:
        return rt_size(self.r, self.k)


@dataclass(frozen=True)
class Extension:
    h: Graph
    base_n: int
    r: int
    k: int
    cross_edges: frozenset[Edge]
    e1: frozenset[Edge]
    removed: frozenset[Edge]
    added: frozenset[Edge]

    @property
    def cost(self) -> int:
        return len(self.removed) + len(self.added)

    @property
    def is_trivial(self) -> bool:
        return not self.cross_edges


@dataclass(frozen=True)
class ConnectionPlan:
    """Endpoint slots of the witness and the new vertex each slot is joined to."""

    v_vector: tuple[int, ...]
    assignment: tuple[int, ...]

    def cross_edges(self) -> list[Edge]:
        return [(z, hub) for z, hub in zip(self.v_vector, self.assignment)]


def validate_extension(g: Graph, h: Graph, r: int, k: int) -> Extension:
    """Check that ``h`` is an (r, k)-extension of ``g`` and decompose its cost."""
    n = g.n
    if h.n != n + r:
        raise WrongVertexCount(n + r, h.n)
    for v in g.vertices:
        if h.degree(v) != g.degree(v):
            raise DegreeMismatch(v, g.degree(v), h.degree(v))
    for v in range(n + 1, n + r + 1):
        if h.degree(v) != k:
            raise DegreeMismatch(v, k, h.degree(v))
    e1 = frozenset(e for e in h.edges if e[0] <= n)
    cross = frozenset(e for e in e1 if e[1] > n)
    return Extension(
        h=h,
        base_n=n,
        r=r,
        k=k,
        cross_edges=cross,
        e1=e1,
        removed=g.edges - e1,
        added=e1 - g.edges,
    )


def edit_cost(g: Graph, ext: Extension) -> int:
    """Size of the symmetric difference between ``E(G)`` and the edges of ``ext.h`` touching ``{1..n}``."""
    e1 = {e for e in ext.h.edges if e[0] <= g.n}
    return len(g.edges - e1) + len(e1 - g.edges)


def trivial_extension(problem: ExtensionProblem) -> Extension:
    """``G`` plus a disjoint k-regular graph on the ``r`` new vertices."""
    g, r, k = problem.g, problem.r, problem.k
    if k > r - 1:
        raise InfeasibleTrivial(f"no k-regular graph on r vertices when k > r-1 (r={r}, k={k})")
    f = regular_graph(r, k)
    shifted = [(u + g.n, v + g.n) for u, v in f.edges]
    h = g.with_edges(add=shifted, n=g.n + r)
    return validate_extension(g, h, r, k)


def _check_witness(w: DegreeBoundedSubgraph, r: int, k: int) -> int:
    t = rt_size(r, k)
    if k < r:
        raise BadWitness(f"optimal construction needs k >= r (r={r}, k={k})")
    if w.q != t:
        raise BadWitness(f"witness has {w.q} edges, expected t={t}")
    worst = max(w.degrees().values(), default=0)
    if worst > r:
        raise BadWitness(f"witness vertex has degree {worst} > r={r}")
    return t


def build_connection_plan(w: DegreeBoundedSubgraph, r: int, k: int, n: int) -> ConnectionPlan:
    """Distribute the ``2t`` witness endpoints over ``n+1..n+r`` round-robin.

    Copies of a vertex sit next to each other and there are at most ``r`` of
    them, so they land on distinct new vertices; each new vertex gets exactly
    ``k-r+1`` slots.
    """
    _check_witness(w, r, k)
    deg = w.degrees()
    v_vector = tuple(v for v in sorted(deg) for _ in range(deg[v]))
    assignment = tuple(n + 1 + j % r for j in range(len(v_vector)))
    return ConnectionPlan(v_vector, assignment)


def optimal_extension(problem: ExtensionProblem, w: DegreeBoundedSubgraph) -> Extension:
    """Extension of cost ``3t`` built from an ``(r, t)``-subgraph ``w`` of ``G``.

    The witness edges are deleted, the new vertices form a clique, and every
    witness endpoint is reconnected to a new vertex per the connection plan.
    """
    g, r, k = problem.g, problem.r, problem.k
    t = _check_witness(w, r, k)
    if not is_pq_subgraph(g, w.edges, r, t):
        raise BadWitness("witness edges are not all edges of G")
    n = g.n
    clique = list(combinations(range(n + 1, n + r + 1), 2))
    h_temp = g.with_edges(add=clique, remove=w.edges, n=n + r)
    log.debug("H_temp: %s", h_temp.sorted_edges())
    plan = build_connection_plan(w, r, k, n)
    h_fin = h_temp.with_edges(add=plan.cross_edges())
    return validate_extension(g, h_fin, r, k)
