"""Pattern descriptors, subgraph counting and containment."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Literal

from .errors import CapacityError, Graph6Error, SpecError
from .graph import Graph, iter_bits
from .graph6 import decode_graph6, encode_graph6

MAX_PATTERN_ORDER = 10

KINDS = ("dstar", "clique", "book", "fan2", "kbip", "g6")


@dataclass(frozen=True)
class Pattern:
    """A small countable/forbiddable graph.

    ``kind`` is one of ``dstar`` (a, b), ``clique`` (k,), ``book`` (t,),
    ``fan2`` (), ``kbip`` (s, t) or ``g6`` (graph,). Use the constructors
    below rather than building instances directly.
    """

    kind: str
    params: tuple

    def __post_init__(self) -> None:
        k, p = self.kind, self.params
        if k == "dstar":
            a, b = p
            if a < 1 or b < 1:
                raise SpecError(f"double star needs a, b >= 1, got ({a}, {b})")
            if a > b:
                raise SpecError(f"double star needs a <= b, got ({a}, {b})")
        elif k == "clique":
            if p[0] < 2:
                raise SpecError(f"clique needs k >= 2, got {p[0]}")
        elif k == "book":
            if p[0] < 1:
                raise SpecError(f"book needs t >= 1, got {p[0]}")
        elif k == "fan2":
            if p:
                raise SpecError("fan2 takes no parameters")
        elif k == "kbip":
            s, t = p
            if s < 1 or s > t:
                raise SpecError(f"complete bipartite needs 1 <= s <= t, got ({s}, {t})")
        elif k == "g6":
            (g,) = p
            if not 1 <= g.n <= MAX_PATTERN_ORDER:
                raise CapacityError(f"generic pattern order must be 1..{MAX_PATTERN_ORDER}, got {g.n}")
        else:
            raise SpecError(f"unknown pattern kind {k!r}")

    @classmethod
    def double_star(cls, a: int, b: int) -> Pattern:
        return cls("dstar", (min(a, b), max(a, b)))

    @classmethod
    def clique(cls, k: int) -> Pattern:
        return cls("clique", (k,))

    @classmethod
    def book(cls, t: int) -> Pattern:
        return cls("book", (t,))

    @classmethod
    def fan2(cls) -> Pattern:
        return cls("fan2", ())

    @classmethod
    def complete_bipartite(cls, s: int, t: int) -> Pattern:
        return cls("kbip", (min(s, t), max(s, t)))

    @classmethod
    def generic(cls, g: Graph) -> Pattern:
        return cls("g6", (g,))

    @classmethod
    def parse(cls, text: str) -> Pattern:
        """Parse ``dstar:a,b``, ``clique:k``, ``book:t``, ``fan2``, ``kbip:s,t`` or ``g6:<graph6>``."""
        kind, _, rest = text.strip().partition(":")
        if kind == "fan2" and not rest:
            return cls.fan2()
        if kind == "g6":
            try:
                return cls.generic(decode_graph6(rest))
            except Graph6Error as exc:
                raise SpecError(f"bad graph6 in pattern {text!r}: {exc}") from None
        arity = {"dstar": 2, "clique": 1, "book": 1, "kbip": 2}.get(kind)
        if arity is None:
            raise SpecError(f"unknown pattern {text!r}; expected one of {', '.join(KINDS)}")
        try:
            nums = tuple(int(x) for x in rest.split(","))
        except ValueError:
            raise SpecError(f"pattern {text!r} needs {arity} integer parameter(s)") from None
        if len(nums) != arity:
            raise SpecError(f"pattern {text!r} needs {arity} integer parameter(s)")
        return {
            "dstar": cls.double_star,
            "clique": cls.clique,
            "book": cls.book,
            "kbip": cls.complete_bipartite,
        }[kind](*nums)

    def __str__(self) -> str:
        if self.kind == "fan2":
            return "fan2"
        if self.kind == "g6":
            return "g6:" + encode_graph6(self.params[0])
        return f"{self.kind}:" + ",".join(str(x) for x in self.params)

    @property
    def order(self) -> int:
        k, p = self.kind, self.params
        if k == "dstar":
            return p[0] + p[1] + 2
        if k == "clique":
            return p[0]
        if k == "book":
            return p[0] + 2
        if k == "fan2":
            return 5
        if k == "kbip":
            return p[0] + p[1]
        return p[0].n

    def graph(self) -> Graph:
        """The pattern realized as a Graph."""
        k, p = self.kind, self.params
        if k == "g6":
            return p[0]
        if k == "clique":
            return Graph.complete(p[0])
        if k == "dstar":
            a, b = p
            edges = [(0, 1)] + [(0, 2 + i) for i in range(a)] + [(1, 2 + a + j) for j in range(b)]
            return Graph.from_edges(a + b + 2, edges)
        if k == "book":
            t = p[0]
            edges = [(0, 1)] + [(x, 2 + i) for i in range(t) for x in (0, 1)]
            return Graph.from_edges(t + 2, edges)
        if k == "fan2":
            return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
        s, t = p
        return Graph.from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)])


# --- generic backtracking ---------------------------------------------------


@lru_cache(maxsize=256)
def _plan(p: Graph) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Placement order for pattern vertices: (degree, earlier neighbor positions) per step."""
    if p.n > MAX_PATTERN_ORDER:
        raise CapacityError(f"pattern order {p.n} exceeds {MAX_PATTERN_ORDER}")
    placed: list[int] = []
    remaining = set(range(p.n))
    while remaining:
        placed_mask = 0
        for v in placed:
            placed_mask |= 1 << v
        v = max(sorted(remaining), key=lambda x: ((p.adj[x] & placed_mask).bit_count(), p.degree(x)))
        placed.append(v)
        remaining.discard(v)
    pos = {v: i for i, v in enumerate(placed)}
    steps = []
    for i, v in enumerate(placed):
        back = tuple(sorted(pos[u] for u in iter_bits(p.adj[v]) if pos[u] < i))
        steps.append((p.degree(v), back))
    return tuple(steps)


def count_embeddings(host: Graph, p: Graph, limit: int = 0) -> int:
    """Injective maps V(p) -> V(host) sending edges to edges; stops early once ``limit`` > 0 is reached."""
    if p.n > host.n:
        return 0
    plan = _plan(p)
    adj = host.adj
    maxdeg = max((step[0] for step in plan), default=0)
    deg_mask = [0] * (maxdeg + 1)
    for v, row in enumerate(adj):
        d = min(row.bit_count(), maxdeg)
        for j in range(d + 1):
            deg_mask[j] |= 1 << v
    k = len(plan)
    mapping = [0] * k

    def rec(i: int, used: int) -> int:
        if i == k:
            return 1
        pdeg, back = plan[i]
        cand = deg_mask[pdeg] & ~used
        for j in back:
            cand &= adj[mapping[j]]
        if i == k - 1:
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            cand ^= low
            mapping[i] = low.bit_length() - 1
            total += rec(i + 1, used | low)
            if limit and total >= limit:
                return total
        return total

    return rec(0, 0)


@lru_cache(maxsize=256)
def automorphism_count(p: Graph) -> int:
    return count_embeddings(p, p)


def count_copies_generic(host: Graph, p: Graph) -> int:
    """Unlabeled subgraph copies of p in host: labeled embeddings over |Aut(p)|."""
    return count_embeddings(host, p) // automorphism_count(p)


# --- specialized counters ----------------------------------------------------


def count_double_star_edge(g: Graph, u: int, v: int, a: int, b: int) -> int:
    """Copies of S_{a,b} in g whose central edge is uv.

    With X = N(u)-v, Y = N(v)-u and t = |X & Y|, the copies giving u the
    ``a`` leaves number sum_j C(t,j) C(|X|-t, a-j) C(|Y|-j, b); for a != b
    the orientation giving u the ``b`` leaves is added.
    """
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v or not g.has_edge(u, v):
        raise SpecError(f"({u}, {v}) is not an edge of the host graph")
    if a < 1 or b < 1:
        raise SpecError(f"double star needs a, b >= 1, got ({a}, {b})")
    if a > b:
        a, b = b, a
    x_mask = g.adj[u] & ~(1 << v)
    y_mask = g.adj[v] & ~(1 << u)
    return _dstar_edge(x_mask.bit_count(), y_mask.bit_count(), (x_mask & y_mask).bit_count(), a, b)


def _dstar_edge(x: int, y: int, t: int, a: int, b: int) -> int:
    def oriented(x: int, y: int, a: int, b: int) -> int:
        return sum(comb(t, j) * comb(x - t, a - j) * comb(y - j, b) for j in range(min(a, t) + 1))

    total = oriented(x, y, a, b)
    if a != b:
        total += oriented(x, y, b, a)
    return total


def count_double_stars(g: Graph, a: int, b: int) -> int:
    adj = g.adj
    total = 0
    for u, row in enumerate(adj):
        for w in iter_bits(row >> (u + 1)):
            v = u + 1 + w
            x_mask = row & ~(1 << v)
            y_mask = adj[v] & ~(1 << u)
            total += _dstar_edge(x_mask.bit_count(), y_mask.bit_count(), (x_mask & y_mask).bit_count(), a, b)
    return total


def count_cliques(g: Graph, k: int) -> int:
    adj = g.adj
    if k == 1:
        return g.n
    if k == 2:
        return g.num_edges()

    def rec(cand: int, depth: int) -> int:
        if depth == 1:
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            # only higher-indexed vertices, so each clique is found once
            total += rec(cand & adj[v], depth - 1)
        return total

    return rec((1 << g.n) - 1, k)


def _has_clique(g: Graph, k: int) -> bool:
    adj = g.adj

    def rec(cand: int, depth: int) -> bool:
        if cand.bit_count() < depth:
            return False
        if depth == 1:
            return True
        while cand:
            low = cand & -cand
            cand ^= low
            if rec(cand & adj[low.bit_length() - 1], depth - 1):
                return True
        return False

    return rec((1 << g.n) - 1, k)


def _has_two_disjoint_edges(adj: tuple[int, ...], mask: int) -> bool:
    for x in iter_bits(mask):
        for y in iter_bits(adj[x] & mask & ~((2 << x) - 1)):
            rest = mask & ~(1 << x) & ~(1 << y)
            for z in iter_bits(rest):
                if adj[z] & rest:
                    return True
    return False


def count_pattern(g: Graph, p: Pattern, method: Literal["auto", "generic"] = "auto") -> int:
    """Number of (not necessarily induced) subgraph copies of p in g."""
    if method == "auto":
        if p.kind == "dstar":
            return count_double_stars(g, *p.params)
        if p.kind == "clique":
            return count_cliques(g, p.params[0])
    if p.order > MAX_PATTERN_ORDER:
        raise CapacityError(f"pattern {p} has order {p.order} > {MAX_PATTERN_ORDER}")
    return count_copies_generic(g, p.graph())


def contains_pattern(g: Graph, p: Pattern, method: Literal["auto", "generic"] = "auto") -> bool:
    if p.order > g.n:
        return False
    if method == "auto":
        if p.kind == "dstar":
            c, d = p.params
            adj = g.adj
            for u, row in enumerate(adj):
                du = row.bit_count() - 1
                if du < c:
                    continue
                for w in iter_bits(row >> (u + 1)):
                    v = u + 1 + w
                    dv = adj[v].bit_count() - 1
                    if dv < c or (du < d and dv < d):
                        continue
                    union = ((row | adj[v]) & ~(1 << u) & ~(1 << v)).bit_count()
                    if union >= c + d:
                        return True
            return False
        if p.kind == "clique":
            return _has_clique(g, p.params[0])
        if p.kind == "book":
            t = p.params[0]
            adj = g.adj
            return any((adj[u] & adj[v]).bit_count() >= t for u, v in g.edges())
        if p.kind == "fan2":
            adj = g.adj
            return any(_has_two_disjoint_edges(adj, adj[w]) for w in range(g.n))
    if p.order > MAX_PATTERN_ORDER:
        raise CapacityError(f"pattern {p} has order {p.order} > {MAX_PATTERN_ORDER}")
    return count_embeddings(g, p.graph(), limit=1) > 0


def contains_pattern_through(g: Graph, p: Pattern, v: int) -> bool:
    """Whether some copy of p in g uses vertex v (g minus v is assumed p-free)."""
    if p.order > g.n:
        return False
    adj = g.adj
    if p.kind == "clique":
        k = p.params[0]
        sub = g.induced(list(iter_bits(adj[v])))
        return _has_clique(sub, k - 1)
    if p.kind == "fan2":
        # v as the center, or v in one of the two triangles at another center w
        if _has_two_disjoint_edges(adj, adj[v]):
            return True
        return any(_has_two_disjoint_edges(adj, adj[w]) for w in iter_bits(adj[v]))
    if p.kind == "book":
        t = p.params[0]
        for w in iter_bits(adj[v]):
            if (adj[v] & adj[w]).bit_count() >= t:
                return True
            for x in iter_bits(adj[v] & adj[w]):
                if (adj[w] & adj[x]).bit_count() >= t:
                    return True
        return False
    return contains_pattern(g, p)


# --- coloring ----------------------------------------------------------------


def _colorable(g: Graph, k: int) -> bool:
    order = sorted(range(g.n), key=lambda v: -g.degree(v))
    colors = [-1] * g.n
    adj = g.adj

    def rec(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {colors[u] for u in iter_bits(adj[v]) if colors[u] >= 0}
        # a fresh color is interchangeable with any other unused one
        for c in range(min(k, used + 1)):
            if c in taken:
                continue
            colors[v] = c
            if rec(i + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    return rec(0, 0)


def chromatic_number(h: Graph) -> int:
    if h.n > MAX_PATTERN_ORDER:
        raise CapacityError(f"chromatic number limited to order {MAX_PATTERN_ORDER}, got {h.n}")
    if h.n == 0:
        return 0
    k = 1
    while not _colorable(h, k):
        k += 1
    return k


def color_critical_edges(h: Graph) -> list[tuple[int, int]]:
    """Edges whose deletion lowers the chromatic number."""
    chi = chromatic_number(h)
    return [(u, v) for u, v in h.edges() if chromatic_number(h.without_edge(u, v)) < chi]
