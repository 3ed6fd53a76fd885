"""Deterministic construction of connected k-regular graphs.

Every graph is grown from the complete graph ``K_{k+1}`` by repeatedly
splicing new vertices into a path of length ``k``:

* even ``k``: one new vertex per step (:func:`grow_even`);
* odd ``k``, even ``n``: two new vertices per step (:func:`grow_odd_pair`);
* odd ``k``, odd ``n``: a regular graph on ``n - 1`` vertices plus one vertex
  of degree ``k - 1`` (:func:`attach_nearly`).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InputNotConnected, InputNotRegular, InvalidSpec
from .graph import Edge, Graph, alternate_disjoint_edges, complete_graph, find_min_degree_path, is_connected

__all__ = [
    "Mode",
    "RegularSpec",
    "attach_nearly",
    "complete_graph",
    "generate",
    "grow_even",
    "grow_odd_pair",
    "is_regular",
    "regular_graph",
]


class Mode(str, Enum):
    EXACT = "exactly-regular"
    NEARLY = "nearly-regular"


@dataclass(frozen=True)
class RegularSpec:
    n: int
    k: int
    mode: Mode = Mode.EXACT

    def __post_init__(self) -> None:
        if self.k < 2:
            raise InvalidSpec(f"k must be at least 2, got {self.k}")
        if self.n < self.k + 1:
            raise InvalidSpec(f"n must be at least k+1={self.k + 1}, got n={self.n}")
        if self.mode is Mode.EXACT and (self.n * self.k) % 2:
            raise InvalidSpec(f"a {self.k}-regular graph on {self.n} vertices needs n*k even")
        if self.mode is Mode.NEARLY and not (self.k % 2 and self.n % 2):
            raise InvalidSpec(f"nearly-regular needs odd k and odd n (got n={self.n}, k={self.k})")


def is_regular(g: Graph, k: int) -> bool:
    return all(g.degree(v) == k for v in g.vertices)


def _check_input(g: Graph, k: int) -> None:
    if not is_regular(g, k):
        raise InputNotRegular(f"input graph on {g.n} vertices is not {k}-regular")
    if not is_connected(g):
        raise InputNotConnected(f"input graph on {g.n} vertices is not connected")


def _path_with(g: Graph, k: int) -> tuple[int, ...]:
    path = find_min_degree_path(g)
    # a connected k-regular graph always yields at least k edges here
    assert len(path) - 1 >= k, (path, k)
    return path[: k + 1]


def _splice(g: Graph, hub: int, removed: list[Edge]) -> Graph:
    added = [(hub, x) for e in removed for x in e]
    out = g.with_edges(add=added, remove=removed, n=max(g.n, hub))
    assert is_connected(out)
    return out


def grow_even(g: Graph, k: int) -> Graph:
    """Add vertex ``n+1`` in place of ``k/2`` alternate edges of a ``k``-edge path."""
    if k % 2:
        raise InvalidSpec(f"grow_even needs even k, got {k}")
    _check_input(g, k)
    path = _path_with(g, k)
    return _splice(g, g.n + 1, alternate_disjoint_edges(path, k // 2))


def grow_odd_pair(g: Graph, k: int) -> Graph:
    """Add vertices ``n+1`` and ``n+2`` for odd ``k``.

    The first ``k-1`` edges of a path ``q_1 .. q_{k+1}`` are removed; odd-numbered
    ones are rerouted through ``n+1``, even-numbered through ``n+2``, and the two
    new vertices are joined.
    """
    if k % 2 == 0:
        raise InvalidSpec(f"grow_odd_pair needs odd k, got {k}")
    _check_input(g, k)
    q = _path_with(g, k)
    a, b = g.n + 1, g.n + 2
    removed = [(q[j], q[j + 1]) for j in range(k - 1)]
    added: list[Edge] = []
    # 0-based j here, so j even <=> 1-based j odd
    for j, (x, y) in enumerate(removed):
        hub = a if j % 2 == 0 else b
        added += [(hub, x), (hub, y)]
    added.append((a, b))
    out = g.with_edges(add=added, remove=removed, n=g.n + 2)
    assert is_connected(out)
    return out


def attach_nearly(g: Graph, k: int) -> Graph:
    """Attach vertex ``n`` with degree ``k-1`` to a ``k``-regular graph on ``n-1`` vertices."""
    if k % 2 == 0:
        raise InvalidSpec(f"attach_nearly needs odd k, got {k}")
    _check_input(g, k)
    path = _path_with(g, k)
    return _splice(g, g.n + 1, alternate_disjoint_edges(path, (k - 1) // 2))


def generate(spec: RegularSpec) -> Graph:
    """Connected k-regular (or nearly k-regular) graph on ``{1..spec.n}``."""
    n, k = spec.n, spec.k
    if spec.mode is Mode.NEARLY:
        return attach_nearly(generate(RegularSpec(n - 1, k)), k)
    g = complete_graph(k + 1)
    if k % 2 == 0:
        for _ in range(n - k - 1):
            g = grow_even(g, k)
    else:
        for _ in range((n - k - 1) // 2):
            g = grow_odd_pair(g, k)
    return g


def regular_graph(n: int, k: int) -> Graph:
    """Any k-regular graph on ``n`` vertices with ``n > k``, including k in {0, 1}.

    ``k = 1`` is a perfect matching and ``k = 0`` the empty graph, the two
    degrees the connected construction does not cover.
    """
    if k == 0:
        return Graph(n)
    if k == 1:
        if n % 2:
            raise InvalidSpec(f"a 1-regular graph needs an even vertex count, got {n}")
        return Graph(n, frozenset((i, i + 1) for i in range(1, n, 2)))
    return generate(RegularSpec(n, k))
