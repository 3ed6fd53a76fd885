from __future__ import annotations

import random
from collections import Counter
from itertools import combinations

from hypothesis import strategies as st

from graft.graph import Graph


@st.composite
def graphs(draw, max_n: int = 8, min_n: int = 1, max_edges: int | None = None) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_edges) if pairs else st.just([]))
    return Graph(n, frozenset(chosen))


def random_graph(rng: random.Random, n: int, density: float) -> Graph:
    return Graph(n, frozenset(p for p in combinations(range(1, n + 1), 2) if rng.random() < density))


def all_graphs(n: int):
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


# Brute-force references. Deliberately naive: they enumerate subsets and never
# share code with the searches they check.


def brute_max_bounded(g: Graph, p: int) -> int:
    edges = sorted(g.edges)
    best = 0
    for mask in range(1 << len(edges)):
        chosen = [e for i, e in enumerate(edges) if mask >> i & 1]
        if len(chosen) <= best:
            continue
        deg = Counter(x for e in chosen for x in e)
        if all(d <= p for d in deg.values()):
            best = len(chosen)
    return best


def brute_matchings(g: Graph, size: int) -> list[frozenset]:
    out = []
    for combo in combinations(sorted(g.edges), size):
        ends = [x for e in combo for x in e]
        if len(set(ends)) == len(ends):
            out.append(frozenset(combo))
    return out


def brute_has_disjoint_matchings(g: Graph, count: int, size: int) -> bool:
    ms = brute_matchings(g, size)
    for group in combinations(ms, count):
        union = frozenset().union(*group)
        if len(union) == count * size:
            return True
    return False


def brute_longest_path_edges(g: Graph) -> int:
    best = 0

    def walk(v, seen, length):
        nonlocal best
        best = max(best, length)
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                walk(w, seen, length + 1)
                seen.discard(w)

    for v in g.vertices:
        walk(v, {v}, 0)
    return best


def min_positive_degree(g: Graph) -> int:
    return min(g.degree(v) for v in g.vertices if g.degree(v) > 0)
