"""Exact matchings, vertex covers, and the star-or-matching bound."""

from __future__ import annotations

from functools import lru_cache
from typing import Literal

import networkx as nx

from .graph import Graph, iter_bits

# Above this order the subset recursion is replaced by Edmonds' blossom algorithm.
SUBSET_DP_LIMIT = 16


def _matching_dp(g: Graph) -> list[tuple[int, int]]:
    adj = g.adj

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if not mask:
            return 0
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        value = best(rest)
        for u in iter_bits(adj[v] & rest):
            value = max(value, 1 + best(rest & ~(1 << u)))
        return value

    edges = []
    mask = (1 << g.n) - 1
    # drop isolated vertices up front; they never match
    for v in range(g.n):
        if not adj[v]:
            mask &= ~(1 << v)
    while mask:
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        target = best(mask)
        if best(rest) == target:
            mask = rest
            continue
        for u in iter_bits(adj[v] & rest):
            if 1 + best(rest & ~(1 << u)) == target:
                edges.append((v, u))
                mask = rest & ~(1 << u)
                break
    return edges


def max_matching(g: Graph) -> list[tuple[int, int]]:
    """A maximum matching as a list of (smaller, larger) vertex pairs."""
    if g.n <= SUBSET_DP_LIMIT:
        edges = _matching_dp(g)
    else:
        nxg = nx.Graph()
        nxg.add_nodes_from(range(g.n))
        nxg.add_edges_from(g.edges())
        edges = list(nx.max_weight_matching(nxg, maxcardinality=True))
    return sorted((min(u, v), max(u, v)) for u, v in edges)


def max_matching_size(g: Graph) -> int:
    return len(max_matching(g))


def max_independent_set_size(g: Graph) -> int:
    adj = g.adj
    memo: dict[int, int] = {}

    def solve(mask: int) -> int:
        if not mask:
            return 0
        hit = memo.get(mask)
        if hit is not None:
            return hit
        best_v, best_d = -1, -1
        low_v, low_d = -1, g.n + 1
        for v in iter_bits(mask):
            d = (adj[v] & mask).bit_count()
            if d > best_d:
                best_v, best_d = v, d
            if d < low_d:
                low_v, low_d = v, d
        if low_d <= 1:
            # a vertex of degree <= 1 is always in some maximum independent set
            value = 1 + solve(mask & ~(adj[low_v] | 1 << low_v))
        else:
            with_v = 1 + solve(mask & ~(adj[best_v] | 1 << best_v))
            value = with_v
            rest = mask & ~(1 << best_v)
            if rest.bit_count() > with_v:
                value = max(value, solve(rest))
        memo[mask] = value
        return value

    return solve((1 << g.n) - 1)


def min_vertex_cover_size(g: Graph) -> int:
    return g.n - max_independent_set_size(g)


def star_or_matching_lower_bound(
    g: Graph,
) -> tuple[Literal["star", "matching"], int, list[tuple[int, int]]]:
    """Larger of the biggest star and the biggest matching, with its edges.

    Ties go to the star. Every graph with ``m > 0`` edges has one of size at
    least ``ceil(sqrt(m))``.
    """
    center = max(range(g.n), key=g.degree, default=None)
    star_size = g.degree(center) if center is not None else 0
    matching = max_matching(g)
    if star_size >= len(matching):
        star = [(min(center, u), max(center, u)) for u in g.neighbors(center)] if star_size else []
        return "star", star_size, star
    return "matching", len(matching), matching
