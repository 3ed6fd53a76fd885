"""Line-oriented edge-list format.

::

    # comment
    n 4
    1 2
    3 2

The header ``n <N>`` declares the vertex count, so isolated vertices survive
a round trip. Edges may be written either way round; :func:`serialize` always
emits ``u < v`` in lexicographic order.
"""

from __future__ import annotations

from pathlib import Path

from .errors import DuplicateEdge, EdgeListSyntaxError, SelfLoop, VertexOutOfRange
from .graph import Edge, Graph, normalize


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise EdgeListSyntaxError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None


def parse(text: str) -> Graph:
    n: int | None = None
    edges: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise EdgeListSyntaxError(lineno, "first line must be 'n <vertex count>'")
            (n,) = _ints(tokens[1:], lineno)
            if n < 0:
                raise EdgeListSyntaxError(lineno, f"vertex count must be non-negative, got {n}")
            continue
        if len(tokens) != 2:
            raise EdgeListSyntaxError(lineno, f"expected '<u> <v>', got {line!r}")
        u, v = _ints(tokens, lineno)
        if u == v:
            raise SelfLoop(lineno, f"self-loop at vertex {u}")
        for x in (u, v):
            if not 1 <= x <= n:
                raise VertexOutOfRange(lineno, f"vertex {x} outside 1..{n}")
        e = normalize(u, v)
        if e in edges:
            raise DuplicateEdge(lineno, f"edge {e[0]} {e[1]} already listed on line {edges[e]}")
        edges[e] = lineno
    if n is None:
        raise EdgeListSyntaxError(max(1, text.count("\n")), "missing 'n <vertex count>' header")
    return Graph(n, frozenset(edges))


def serialize(g: Graph) -> str:
    return "".join([f"n {g.n}\n"] + [f"{u} {v}\n" for u, v in g.sorted_edges()])


def read_graph(path: str | Path) -> Graph:
    return parse(Path(path).read_text())


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(serialize(g))
