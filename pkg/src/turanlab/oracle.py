"""Ground-truth ex(n, H, F): isomorph-free exhaustive enumeration and seeded hill climbing.

Enumeration grows F-free graphs one vertex at a time. A child of an (n-1)-vertex
parent is kept only if the new vertex has minimum degree in the child (every
graph has such a vertex, and deleting it leaves an F-free parent), and children
are deduplicated by canonical key. Class representatives are the canonical
forms, so the output does not depend on how work was split between processes.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Literal

from .canon import canonical_key, graph_from_key
from .constructions import (
    complete_bipartite_plus,
    complete_multipartite,
    cliques_plus_remainder,
    disjoint_cliques,
    regular_triangle_free,
)
from .errors import CapacityError, SpecError
from .graph import Graph, get_cap
from .graph6 import MAX_N as GRAPH6_MAX_N
from .graph6 import encode_graph6
from .patterns import Pattern, contains_pattern, contains_pattern_through, count_pattern

DEFAULT_MAX_N = 10
DEFAULT_WITNESS_LIMIT = 16

_LEVELS: dict[Pattern | None, list[list[bytes]]] = {}


@dataclass
class ExtremalRecord:
    n: int
    H: Pattern
    F: Pattern | None
    value: int
    witnesses: list[str]
    method: Literal["exhaustive", "stochastic"]
    graphs_enumerated: int
    elapsed: float = field(default=0.0, compare=False)

    @property
    def exact(self) -> bool:
        return self.method == "exhaustive"

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {
            "n": self.n,
            "H": str(self.H),
            "F": str(self.F) if self.F is not None else None,
            "value": str(self.value),
            "method": self.method,
            "exact": self.exact,
            "witnesses": list(self.witnesses),
            "graphs_enumerated": self.graphs_enumerated,
        }
        if not self.exact:
            out["note"] = "lower bound only"
        if include_timing:
            out["elapsed_seconds"] = round(self.elapsed, 6)
        return out


def _check_forbidden(F: Pattern | None) -> None:
    if F is not None and F.graph().num_edges() == 0:
        raise SpecError(f"forbidden pattern {F} has no edges; no graph on >= {F.order} vertices avoids it")


def _children(args: tuple[bytes, Pattern | None]) -> set[bytes]:
    key, F = args
    parent = graph_from_key(key)
    m = parent.n
    degs = parent.degrees()
    # below[d]: parent vertices of degree < d
    below = [0] * (m + 2)
    for d in range(m + 2):
        for v, dv in enumerate(degs):
            if dv < d:
                below[d] |= 1 << v
    out = set()
    for nbrs in range(1 << m):
        d = nbrs.bit_count()
        if below[d] & ~nbrs or (d and below[d - 1] & nbrs):
            continue
        child = parent.add_vertex(nbrs)
        if F is not None and contains_pattern_through(child, F, m):
            continue
        out.add(canonical_key(child))
    return out


def _extend(level: list[bytes], F: Pattern | None, threads: int) -> list[bytes]:
    keys: set[bytes] = set()
    jobs = [(k, F) for k in level]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_children, jobs, chunksize=max(1, len(jobs) // (4 * threads))):
                keys |= part
    else:
        for job in jobs:
            keys |= _children(job)
    return sorted(keys)


def _level(n: int, F: Pattern | None, threads: int) -> list[bytes]:
    levels = _LEVELS.setdefault(F, [[canonical_key(Graph.empty(0))]])
    while len(levels) <= n:
        levels.append(_extend(levels[-1], F, threads))
    return levels[n]


def clear_cache() -> None:
    _LEVELS.clear()


def enumerate_forbidden_free(
    n: int,
    F: Pattern | None,
    *,
    threads: int = 1,
    max_n: int = DEFAULT_MAX_N,
    verify: bool = False,
    dump: str | None = None,
) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of F-free graphs on n vertices.

    ``F=None`` enumerates all graphs. With ``verify`` every yielded graph is
    re-checked for F-freeness; with ``dump`` the graphs are also written to that
    path as graph6 lines.
    """
    if n < 0:
        raise SpecError(f"vertex count must be >= 0, got {n}")
    if n > max_n or n > get_cap():
        raise CapacityError(f"exhaustive enumeration limited to n <= {min(max_n, get_cap())}, got {n}")
    _check_forbidden(F)
    keys = _level(n, F, threads)
    sink = open(dump, "w", encoding="utf-8", newline="\n") if dump else None
    try:
        for key in keys:
            g = graph_from_key(key)
            if verify and F is not None and contains_pattern(g, F):
                raise AssertionError(f"enumerated graph {encode_graph6(g)} contains {F}")
            if sink is not None:
                sink.write(encode_graph6(g) + "\n")
            yield g
    finally:
        if sink is not None:
            sink.close()


def ex_exhaustive(
    n: int,
    H: Pattern,
    F: Pattern | None,
    *,
    witness_limit: int = DEFAULT_WITNESS_LIMIT,
    threads: int = 1,
    max_n: int = DEFAULT_MAX_N,
) -> ExtremalRecord:
    """Exact ex(n, H, F) with the optimal graphs (up to ``witness_limit``) as graph6."""
    start = time.perf_counter()
    best = -1
    witnesses: list[str] = []
    seen = 0
    for g in enumerate_forbidden_free(n, F, threads=threads, max_n=max_n):
        seen += 1
        value = count_pattern(g, H)
        if value > best:
            best = value
            witnesses = [encode_graph6(g)]
        elif value == best and len(witnesses) < witness_limit:
            witnesses.append(encode_graph6(g))
    return ExtremalRecord(
        n=n,
        H=H,
        F=F,
        value=max(best, 0),
        witnesses=witnesses,
        method="exhaustive",
        graphs_enumerated=seen,
        elapsed=time.perf_counter() - start,
    )


def construction_candidates(n: int) -> list[Graph]:
    """Every named extremal construction on n vertices, in a fixed order."""
    out = [Graph.empty(n)]
    out += [complete_multipartite([m, n - m]) for m in range(1, n // 2 + 1)]
    out += [complete_bipartite_plus(m, n - m) for m in range(2, n - 1)]
    for s in range(2, n + 1):
        out.append(cliques_plus_remainder(n, s))
        if n % s:
            out.append(disjoint_cliques(n, s))
    for d in range(1, n // 2 + 1):
        if d * n % 2 == 0:
            out.append(regular_triangle_free(n, d))
    if n >= 5 and n % 2:
        out.append(regular_triangle_free(n, 2))
    return out


def _random_free_graph(n: int, F: Pattern | None, rng: random.Random, density: float) -> Graph:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    g = Graph.empty(n)
    for u, v in pairs:
        if rng.random() >= density:
            continue
        cand = g.with_edge(u, v)
        if F is None or not contains_pattern(cand, F):
            g = cand
    return g


def ex_stochastic(
    n: int,
    H: Pattern,
    F: Pattern | None,
    seed: int,
    budget: int,
    *,
    witness_limit: int = DEFAULT_WITNESS_LIMIT,
) -> ExtremalRecord:
    """Lower bound for ex(n, H, F) by seeded edge-flip hill climbing.

    The chain starts from the best F-free construction; once the current graph
    stalls it restarts, alternating between the remaining constructions and
    random F-free graphs. Deterministic in (seed, budget).
    """
    if n < 2:
        raise SpecError(f"stochastic search needs n >= 2, got {n}")
    if n > GRAPH6_MAX_N:
        raise CapacityError(f"stochastic witnesses are graph6-encoded; n <= {GRAPH6_MAX_N}, got {n}")
    if budget < 0:
        raise SpecError(f"budget must be >= 0, got {budget}")
    _check_forbidden(F)
    start_time = time.perf_counter()
    rng = random.Random(seed)

    starts = []
    for g in construction_candidates(n):
        if F is None or not contains_pattern(g, F):
            starts.append((count_pattern(g, H), g))
    evaluated = len(starts)
    best_val, best_g = max(starts, key=lambda item: item[0])
    best_keys = {canonical_key(best_g): best_g}

    def note(value: int, g: Graph) -> None:
        nonlocal best_val, best_keys
        if value > best_val:
            best_val = value
            best_keys = {canonical_key(g): g}
        elif value == best_val and len(best_keys) < witness_limit:
            best_keys.setdefault(canonical_key(g), g)

    restart_cycle = [g for _, g in sorted(starts, key=lambda item: -item[0])]
    restart_index = 0
    cur_val, cur = best_val, best_g
    patience = max(200, budget // 20)
    stall = 0
    for _ in range(budget):
        if stall >= patience:
            stall = 0
            restart_index += 1
            if restart_index % 2 and restart_cycle:
                cur = restart_cycle[(restart_index // 2) % len(restart_cycle)]
            else:
                cur = _random_free_graph(n, F, rng, rng.choice((0.2, 0.5, 0.8)))
            cur_val = count_pattern(cur, H)
            evaluated += 1
            note(cur_val, cur)
        edges = cur.edges()
        move = rng.random()
        if move < 1 / 3 and edges and len(edges) < n * (n - 1) // 2:
            u, v = edges[rng.randrange(len(edges))]
            cand = cur.without_edge(u, v)
            while True:
                x, y = sorted(rng.sample(range(n), 2))
                if not cand.has_edge(x, y) and (x, y) != (u, v):
                    break
            cand = cand.with_edge(x, y)
            added = True
        else:
            x, y = sorted(rng.sample(range(n), 2))
            added = not cur.has_edge(x, y)
            cand = cur.with_edge(x, y) if added else cur.without_edge(x, y)
        if added and F is not None and contains_pattern(cand, F):
            stall += 1
            continue
        value = count_pattern(cand, H)
        evaluated += 1
        if value > cur_val:
            stall = 0
        else:
            stall += 1
        if value >= cur_val:
            cur, cur_val = cand, value
            note(value, cand)

    witnesses = [encode_graph6(best_keys[k]) for k in sorted(best_keys)]
    return ExtremalRecord(
        n=n,
        H=H,
        F=F,
        value=best_val,
        witnesses=witnesses,
        method="stochastic",
        graphs_enumerated=evaluated,
        elapsed=time.perf_counter() - start_time,
    )
