"""Slow reference implementations used as independent oracles in tests."""

from __future__ import annotations

import itertools
import random

from turanlab.graph import Graph


def labeled_graphs(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])


def edge_set(g: Graph) -> frozenset:
    return frozenset(g.edges())


def brute_canonical(g: Graph) -> tuple:
    """Lexicographically smallest sorted edge list over all relabelings."""
    best = None
    for perm in itertools.permutations(range(g.n)):
        edges = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()))
        if best is None or edges < best:
            best = edges
    return (g.n, best)


def isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges() != h.num_edges():
        return False
    target = edge_set(h)
    for perm in itertools.permutations(range(g.n)):
        if frozenset(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()) == target:
            return True
    return False


def count_copies(host: Graph, pattern: Graph) -> int:
    """Distinct (vertex set, edge set) images of the pattern inside host."""
    images = set()
    pedges = pattern.edges()
    for tup in itertools.permutations(range(host.n), pattern.n):
        if all(host.has_edge(tup[u], tup[v]) for u, v in pedges):
            images.add((frozenset(tup), frozenset(frozenset((tup[u], tup[v])) for u, v in pedges)))
    return len(images)


def double_stars_on_edge(g: Graph, u: int, v: int, a: int, b: int) -> int:
    """Copies of S_{a,b} with central edge uv, by listing leaf sets."""
    copies = set()
    for x, y, ca, cb in ((u, v, a, b), (u, v, b, a)):
        nx_ = [w for w in g.neighbors(x) if w != y]
        ny_ = [w for w in g.neighbors(y) if w != x]
        for la in itertools.combinations(nx_, ca):
            for lb in itertools.combinations([w for w in ny_ if w not in la], cb):
                leaves = frozenset((x, w) for w in la) | frozenset((y, w) for w in lb)
                copies.add(leaves)
    return len(copies)


def max_matching(g: Graph) -> int:
    edges = g.edges()
    best = 0
    for k in range(1, g.n // 2 + 1):
        found = False
        for combo in itertools.combinations(edges, k):
            verts = [x for e in combo for x in e]
            if len(set(verts)) == 2 * k:
                found = True
                break
        if not found:
            break
        best = k
    return best


def min_vertex_cover(g: Graph) -> int:
    edges = g.edges()
    for k in range(g.n + 1):
        for cover in itertools.combinations(range(g.n), k):
            s = set(cover)
            if all(u in s or v in s for u, v in edges):
                return k
    return g.n


def chromatic(g: Graph) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for coloring in itertools.product(range(k), repeat=g.n):
            if all(coloring[u] != coloring[v] for u, v in g.edges()):
                return k
    return g.n
