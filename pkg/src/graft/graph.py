"""Simple undirected graphs on the vertex set {1..n} and basic primitives."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import EmptyGraph, InvalidGraph, PathTooShort

Edge = tuple[int, int]
Path = tuple[int, ...]
Matching = tuple[Edge, ...]

# Above this many edges, matching search falls back to a greedy heuristic.
EXHAUSTIVE_MATCHING_EDGE_LIMIT = 16


def normalize(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class NotFound:
    """Negative search outcome.

    ``exact`` is True when the search was exhaustive, i.e. the object really
    does not exist; False means only that a heuristic failed to find one.
    """

    exact: bool

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with vertices ``1..n``.

    ``edges`` accepts any iterable of pairs; they are normalized to ``(min, max)``
    and validated (no loops, no parallel edges, endpoints in range).
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)
    _adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidGraph(f"vertex count must be non-negative, got {self.n}")
        seen: set[Edge] = set()
        adj: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges if isinstance(self.edges, frozenset) else list(self.edges):
            if u == v:
                raise InvalidGraph(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InvalidGraph(f"edge ({u},{v}) has an endpoint outside 1..{self.n}")
            e = normalize(u, v)
            if e in seen:
                raise InvalidGraph(f"parallel edge {e}")
            seen.add(e)
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "edges", frozenset(seen))
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> list[int]:
        """Neighbors of ``v`` in ascending order."""
        return sorted(self._adj[v])

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return normalize(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def with_edges(self, add: Iterable[Edge] = (), remove: Iterable[Edge] = (), n: int | None = None) -> Graph:
        """Return a copy with edges removed, then added, optionally on more vertices."""
        edges = set(self.edges)
        for u, v in remove:
            edges.discard(normalize(u, v))
        added = [normalize(u, v) for u, v in add]
        clash = edges.intersection(added)
        if clash or len(set(added)) != len(added):
            raise InvalidGraph(f"adding an edge that is already present: {sorted(clash) or added}")
        edges.update(added)
        return Graph(self.n if n is None else n, frozenset(edges))

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.sorted_edges())


def complete_graph(m: int) -> Graph:
    return Graph(m, frozenset((u, v) for u in range(1, m + 1) for v in range(u + 1, m + 1)))


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Degrees of vertices 1..n, in vertex order."""
    return tuple(g.degree(v) for v in g.vertices)


def _component(g: Graph, start: int) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(_component(g, 1)) == g.n


def find_min_degree_path(g: Graph) -> Path:
    """Greedily grow a path until neither endpoint has a neighbor off the path.

    At that point the first vertex has all its neighbors on the path, so the
    path has at least ``min degree`` edges. Works on the component of the
    lowest-index non-isolated vertex; ties go to the lowest-index neighbor.
    """
    if not g.edges:
        raise EmptyGraph("graph has no edges")
    start = next(v for v in g.vertices if g.degree(v) > 0)
    path = deque([start])
    on_path = {start}
    while True:
        for end, push in ((path[-1], path.append), (path[0], path.appendleft)):
            nxt = next((w for w in g.neighbors(end) if w not in on_path), None)
            if nxt is not None:
                push(nxt)
                on_path.add(nxt)
                break
        else:
            return tuple(path)


def alternate_disjoint_edges(p: Path, count: int) -> list[Edge]:
    """Edges 1, 3, 5, ... of the path, ``count`` of them."""
    if count < 0 or len(p) - 1 < 2 * count - 1:
        raise PathTooShort(f"path with {max(len(p) - 1, 0)} edges cannot supply {count} alternate edges")
    return [(p[2 * i], p[2 * i + 1]) for i in range(count)]


def is_matching(edges: Iterable[Edge]) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if u in seen or v in seen or u == v:
            return False
        seen.update((u, v))
    return True


def _greedy_matchings(edges: list[Edge], count: int, size: int) -> list[Matching] | None:
    available = list(edges)
    result = []
    for _ in range(count):
        chosen: list[Edge] = []
        covered: set[int] = set()
        for e in available:
            if len(chosen) == size:
                break
            if e[0] not in covered and e[1] not in covered:
                chosen.append(e)
                covered.update(e)
        if len(chosen) < size:
            return None
        result.append(tuple(chosen))
        used = set(chosen)
        available = [e for e in available if e not in used]
    return result


def _exact_matchings(edges: list[Edge], count: int, size: int) -> list[Matching] | None:
    # Matchings are built one at a time; the first edge of each successive
    # matching has a strictly larger index, which removes permutation symmetry.
    m = len(edges)
    used = [False] * m
    found: list[Matching] = []

    def fill(current: list[int], covered: set[int], start: int) -> bool:
        remaining = count - len(found)
        free = sum(1 for i in range(start, m) if not used[i])
        if free < size - len(current):
            return False
        if len(current) == size:
            found.append(tuple(edges[i] for i in current))
            for i in current:
                used[i] = True
            ok = remaining == 1 or fill([], set(), current[0] + 1)
            if not ok:
                for i in current:
                    used[i] = False
                found.pop()
            return ok
        for i in range(start, m):
            if used[i]:
                continue
            u, v = edges[i]
            if u in covered or v in covered:
                continue
            current.append(i)
            covered.update((u, v))
            if fill(current, covered, i + 1):
                return True
            current.pop()
            covered.difference_update((u, v))
        return False

    if count * size > m:
        return None
    return found if fill([], set(), 0) else None


def find_disjoint_matchings(
    g: Graph, count: int, size: int, *, edge_limit: int = EXHAUSTIVE_MATCHING_EDGE_LIMIT
) -> list[Matching] | NotFound:
    """Find ``count`` pairwise edge-disjoint matchings of exactly ``size`` edges.

    Exhaustive when ``g.m <= edge_limit``; otherwise a greedy lowest-index-first
    search whose failure is reported as ``NotFound(exact=False)``.
    """
    if count < 1 or size < 1:
        raise ValueError("count and size must be positive")
    edges = g.sorted_edges()
    if count * size > len(edges):
        return NotFound(exact=True)
    exact = len(edges) <= edge_limit
    result = _exact_matchings(edges, count, size) if exact else _greedy_matchings(edges, count, size)
    if result is None:
        return NotFound(exact=exact)
    return result


def maximum_matching_size(g: Graph) -> int:
    """Exact maximum matching size by exhaustive search (small graphs only)."""
    best = 0
    while best < g.m and find_disjoint_matchings(g, 1, best + 1, edge_limit=g.m):
        best += 1
    return best
