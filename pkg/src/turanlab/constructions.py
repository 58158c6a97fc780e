"""Builders for the extremal configurations: complete (multi)partite graphs,
K+ graphs, disjoint cliques, and regular triangle-free graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SpecError
from .graph import Graph

KINDS = ("kbipartite", "kbipartite+", "multipartite", "cliques+rem", "cliques", "regtf")


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    params: tuple[int, ...]

    @classmethod
    def parse(cls, text: str) -> ConstructionSpec:
        """Parse ``kbipartite:m,k``, ``kbipartite+:m,k``, ``multipartite:p1,...``,
        ``cliques+rem:n,s``, ``cliques:n,s`` or ``regtf:n,d``."""
        kind, sep, rest = text.strip().partition(":")
        if kind not in KINDS or not sep:
            raise SpecError(f"unknown construction {text!r}; expected one of {', '.join(KINDS)}")
        try:
            params = tuple(int(x) for x in rest.split(","))
        except ValueError:
            raise SpecError(f"construction {text!r} needs integer parameters") from None
        spec = cls(kind, params)
        spec.validate()
        return spec

    def __str__(self) -> str:
        return f"{self.kind}:" + ",".join(str(x) for x in self.params)

    def validate(self) -> None:
        k, p = self.kind, self.params
        if k == "multipartite":
            if not p:
                raise SpecError("multipartite needs at least one part size")
            if any(x < 0 for x in p):
                raise SpecError(f"part sizes must be >= 0, got {list(p)}")
            return
        if len(p) != 2:
            raise SpecError(f"{k} takes exactly two parameters, got {len(p)}")
        x, y = p
        if k in ("kbipartite", "kbipartite+"):
            if x < 0 or y < 0:
                raise SpecError(f"part sizes must be >= 0, got ({x}, {y})")
            if k == "kbipartite+" and x < 2:
                raise SpecError(f"kbipartite+ needs the first part to have >= 2 vertices, got {x}")
        elif k in ("cliques+rem", "cliques"):
            if x < 0:
                raise SpecError(f"vertex count must be >= 0, got {x}")
            if y < 1:
                raise SpecError(f"clique order must be >= 1, got {y}")
        elif k == "regtf":
            _check_regular_triangle_free(x, y)


def _check_regular_triangle_free(n: int, d: int) -> None:
    if n < 0 or d < 0:
        raise SpecError(f"regtf needs n, d >= 0, got ({n}, {d})")
    if d * n % 2:
        raise SpecError(f"regtf needs d*n even, got d={d}, n={n}")
    if d > n // 2 and not (d == 2 and n >= 5):
        raise SpecError(f"regtf needs d <= floor(n/2) (or d=2, n>=5), got d={d}, n={n}")


def complete_multipartite(parts: list[int] | tuple[int, ...]) -> Graph:
    n = sum(parts)
    rows = [0] * n
    full = (1 << n) - 1
    start = 0
    for size in parts:
        block = ((1 << size) - 1) << start
        for v in range(start, start + size):
            rows[v] = full & ~block
        start += size
    return Graph(n, tuple(rows))


def complete_bipartite_plus(m: int, k: int) -> Graph:
    """K_{m,k} plus the edge between the first two vertices of the size-m part."""
    return complete_multipartite([m, k]).with_edge(0, 1)


def _disjoint_cliques(sizes: list[int]) -> Graph:
    n = sum(sizes)
    rows = [0] * n
    start = 0
    for size in sizes:
        block = ((1 << size) - 1) << start
        for v in range(start, start + size):
            rows[v] = block & ~(1 << v)
        start += size
    return Graph(n, tuple(rows))


def cliques_plus_remainder(n: int, s: int) -> Graph:
    """floor(n/s) copies of K_s plus one K_{n mod s}."""
    sizes = [s] * (n // s)
    if n % s:
        sizes.append(n % s)
    return _disjoint_cliques(sizes)


def disjoint_cliques(n: int, s: int) -> Graph:
    """floor(n/s) copies of K_s; leftover vertices stay isolated."""
    return _disjoint_cliques([s] * (n // s) + [1] * (n % s))


def _bipartite_circulant(n: int, d: int) -> Graph:
    half = n // 2
    edges = [(i, half + (i + s) % half) for i in range(half) for s in range(d)]
    return Graph.from_edges(n, edges)


def regular_triangle_free(n: int, d: int) -> Graph:
    """A triangle-free graph that is d-regular on n vertices, or on n-1 plus one isolated vertex.

    Even n uses the bipartite circulant (left i ~ right i, i+1, ..., i+d-1 mod n/2).
    Odd n uses C_n for d = 2 and otherwise the even construction on n-1 vertices.
    """
    _check_regular_triangle_free(n, d)
    if n % 2 == 0:
        return _bipartite_circulant(n, d)
    if d == 2:
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    return _bipartite_circulant(n - 1, d).disjoint_union(Graph.empty(1))


def build(spec: ConstructionSpec) -> Graph:
    spec.validate()
    k, p = spec.kind, spec.params
    if k == "kbipartite":
        return complete_multipartite(p)
    if k == "kbipartite+":
        return complete_bipartite_plus(*p)
    if k == "multipartite":
        return complete_multipartite(p)
    if k == "cliques+rem":
        return cliques_plus_remainder(*p)
    if k == "cliques":
        return disjoint_cliques(*p)
    return regular_triangle_free(*p)
