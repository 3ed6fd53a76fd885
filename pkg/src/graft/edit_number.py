"""The (r, k)-edit number: closed forms, witnesses, sufficient conditions and an exhaustive oracle."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .errors import ParityViolation, TooLarge
from .extension import Extension, ExtensionProblem, optimal_extension, rt_size, trivial_extension, validate_extension
from .graph import Graph, find_disjoint_matchings
from .subgraph import find_rt_subgraph

INF = math.inf

DEFAULT_ORACLE_LIMIT = 7
ORACLE_LIMIT_ENV = "GRAFT_ORACLE_LIMIT"


class Method(str, Enum):
    TRIVIAL = "theorem-1-case-1"
    EQUALITY = "theorem-1-case-2-equality"
    ORACLE = "oracle"
    BOUND_ONLY = "bound-only"


@dataclass(frozen=True)
class EditNumberResult:
    """Either an exact value (``lo == hi``, possibly infinite) or an interval.

    ``hi`` is infinite whenever extendability itself is undecided.
    """

    lo: int | float
    hi: int | float
    method: Method
    witness: Extension | None = None
    exact_search: bool = True

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> int | float | None:
        return self.lo if self.exact else None


def _check_parity(r: int, k: int) -> None:
    if r < 1 or k < 1:
        raise ValueError(f"r and k must be at least 1 (r={r}, k={k})")
    if (r * k) % 2:
        raise ParityViolation(r, k)


def oracle_vertex_limit() -> int:
    raw = os.environ.get(ORACLE_LIMIT_ENV)
    if raw is None:
        return DEFAULT_ORACLE_LIMIT
    try:
        limit = int(raw)
    except ValueError:
        raise ValueError(f"{ORACLE_LIMIT_ENV} must be an integer, got {raw!r}") from None
    if not 3 <= limit <= 8:
        raise ValueError(f"{ORACLE_LIMIT_ENV} must lie in [3, 8], got {limit}")
    return limit


def lower_bound(r: int, k: int) -> int:
    """0 when ``k < r``, otherwise ``3t``."""
    _check_parity(r, k)
    return 0 if k <= r - 1 else 3 * rt_size(r, k)


def upper_bound_generic(g: Graph, r: int, k: int) -> int:
    """``|E(G)| + |E(H)|`` for any extension ``H``; meaningful only if one exists."""
    return g.m + (g.m + r * k // 2)


def oracle_search(g: Graph, r: int, k: int, limit: int | None = None) -> tuple[int | float, Graph | None]:
    """Minimum-cost extension by depth-first enumeration of every admissible edge set.

    Edges are decided in lexicographic order; a branch is cut when a vertex
    overshoots its target degree, can no longer reach it, or the edits made so
    far already cost at least the best complete extension.
    """
    _check_parity(r, k)
    limit = oracle_vertex_limit() if limit is None else limit
    n = g.n
    total = n + r
    if total > limit:
        raise TooLarge(f"oracle handles at most {limit} vertices, asked for n+r={total}")
    target = [0] + [g.degree(v) for v in g.vertices] + [k] * r
    pairs = list(combinations(range(1, total + 1), 2))
    in_g = [p in g.edges for p in pairs]
    touches_g = [p[0] <= n for p in pairs]
    deg = [0] * (total + 1)
    slack = [total - 1] * (total + 1)  # undecided incident pairs per vertex
    slack[0] = 0
    chosen: list[int] = []
    best_cost: int | float = INF
    best: list[int] | None = None

    def visit(i: int, cost: int) -> None:
        nonlocal best_cost, best
        if cost >= best_cost:
            return
        if i == len(pairs):
            if deg == target:
                best_cost, best = cost, list(chosen)
            return
        u, v = pairs[i]
        slack[u] -= 1
        slack[v] -= 1
        if deg[u] < target[u] and deg[v] < target[v]:
            deg[u] += 1
            deg[v] += 1
            chosen.append(i)
            visit(i + 1, cost + (touches_g[i] and not in_g[i]))
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
        if deg[u] + slack[u] >= target[u] and deg[v] + slack[v] >= target[v]:
            visit(i + 1, cost + in_g[i])
        slack[u] += 1
        slack[v] += 1

    if all(d <= total - 1 for d in target):
        visit(0, 0)
    if best is None:
        return INF, None
    return best_cost, Graph(total, frozenset(pairs[i] for i in best))


def exact_oracle(g: Graph, r: int, k: int, limit: int | None = None) -> int | float:
    """Edit number straight from its definition; ``math.inf`` if ``G`` is not extendable."""
    return oracle_search(g, r, k, limit)[0]


def edit_number(g: Graph, r: int, k: int, allow_oracle: bool = False, oracle_limit: int | None = None) -> EditNumberResult:
    _check_parity(r, k)
    problem = ExtensionProblem(g, r, k)
    if k <= r - 1:
        return EditNumberResult(0, 0, Method.TRIVIAL, trivial_extension(problem))
    t = problem.t
    w = find_rt_subgraph(g, r, t)
    if w:
        ext = optimal_extension(problem, w)
        return EditNumberResult(3 * t, 3 * t, Method.EQUALITY, ext)
    limit = oracle_vertex_limit() if oracle_limit is None else oracle_limit
    if allow_oracle and g.n + r <= limit:
        cost, h = oracle_search(g, r, k, limit)
        witness = validate_extension(g, h, r, k) if h is not None else None
        return EditNumberResult(cost, cost, Method.ORACLE, witness, exact_search=w.exact)
    lo = 3 * t + 1 if w.exact else 3 * t
    return EditNumberResult(lo, INF, Method.BOUND_ONLY, exact_search=w.exact)


def check_corollary(g: Graph, r: int, k: int) -> int | None:
    """First matching-type sufficient condition for optimal extendability that holds.

    Cases are tried cheapest first: 2, 5, 1, 3, 4. ``None`` proves nothing.
    """
    _check_parity(r, k)
    if k == r and k % 2 == 0 and g.m >= k // 2:
        return 2
    if g.n >= 1 and all(g.degree(v) >= k for v in g.vertices) and (r, k % 2) in ((1, 0), (2, 1)):
        return 5
    if r == 1 and k % 2 == 0 and find_disjoint_matchings(g, 1, k // 2):
        return 1
    d = k - r
    if d >= 1 and d % 2 == 1 and find_disjoint_matchings(g, r, (d + 1) // 2):
        return 3
    if d >= 1 and d % 2 == 0 and find_disjoint_matchings(g, r, d // 2 + 1):
        return 4
    return None
