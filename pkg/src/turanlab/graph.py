"""Dense undirected simple graphs with bitset adjacency rows."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, SpecError

DEFAULT_CAP = 64


def get_cap() -> int:
    """Vertex cap for Graph; the TURANLAB_CAP environment variable overrides it."""
    raw = os.environ.get("TURANLAB_CAP")
    if raw is None or raw == "":
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise SpecError(f"TURANLAB_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise SpecError(f"TURANLAB_CAP must be positive, got {cap}")
    return cap


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple graph on vertices 0..n-1; ``adj[v]`` is the neighbor bitmask of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise SpecError(f"vertex count must be nonnegative, got {self.n}")
        cap = get_cap()
        if self.n > cap:
            raise CapacityError(f"graph has {self.n} vertices, cap is {cap}")
        if len(self.adj) != self.n:
            raise SpecError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise SpecError(f"row {v} references vertices outside 0..{self.n - 1}")
            if row >> v & 1:
                raise SpecError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise SpecError(f"adjacency not symmetric at ({v}, {u})")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # Skips validation; callers guarantee symmetry, no loops and n within cap.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise SpecError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise SpecError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def add_vertex(self, neighbors: int) -> Graph:
        """Append vertex n joined to the vertices in bitmask ``neighbors``."""
        n = self.n
        bit = 1 << n
        adj = tuple(row | bit if neighbors >> v & 1 else row for v, row in enumerate(self.adj))
        return Graph._trusted(n + 1, adj + (neighbors,))

    def with_edge(self, u: int, v: int) -> Graph:
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._trusted(self.n, tuple(adj))

    def without_edge(self, u: int, v: int) -> Graph:
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph._trusted(self.n, tuple(adj))

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph._trusted(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which old vertex v becomes vertex ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            target = 0
            for u in iter_bits(row):
                target |= 1 << perm[u]
            rows[perm[v]] = target
        return Graph._trusted(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> Graph:
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u in iter_bits(self.adj[v]):
                if u in index:
                    row |= 1 << index[u]
            rows.append(row)
        return Graph._trusted(len(vertices), tuple(rows))

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self.n
        return Graph(self.n + other.n, self.adj + tuple(row << shift for row in other.adj))

    def is_triangle_free(self) -> bool:
        adj = self.adj
        for u, row in enumerate(adj):
            for v in iter_bits(row >> (u + 1)):
                if row & adj[u + 1 + v]:
                    return False
        return True

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for u in iter_bits(self.adj[v]):
                    if color[u] < 0:
                        color[u] = 1 - color[v]
                        stack.append(u)
                    elif color[u] == color[v]:
                        return False
        return True

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def common_neighbor_count(g: Graph, u: int, v: int) -> int:
    """Number of common neighbors of u and v (the largest book on edge uv)."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise SpecError(f"vertices ({u}, {v}) out of range for n={g.n}")
    if u == v:
        raise SpecError("common_neighbor_count needs two distinct vertices")
    return (g.adj[u] & g.adj[v]).bit_count()
