"""Canonical labeling by partition refinement and individualization.

The canonical form is the relabeling whose upper-triangle adjacency bit-string
(graph6 column order) is lexicographically smallest among all leaves of the
individualize-refine search tree. Automorphisms found at equal leaves prune
sibling branches that lie in the same orbit of the current prefix stabilizer.
"""

from __future__ import annotations

from .errors import CapacityError
from .graph import Graph, get_cap


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                sig = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                split = True
                out.extend(groups[sig] for sig in sorted(groups))
        cells = out
        if not split:
            return cells


def _certificate(adj: tuple[int, ...], order: list[int]) -> int:
    cert = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            cert = cert << 1 | (row >> order[i] & 1)
    return cert


class _Search:
    def __init__(self, g: Graph):
        self.adj = g.adj
        self.n = g.n
        self.best_cert: int | None = None
        self.best_order: list[int] = []
        self.first_cert: int | None = None
        self.first_order: list[int] = []
        self.generators: list[list[int]] = []

    def _record_automorphism(self, src: list[int], dst: list[int]) -> None:
        perm = [0] * self.n
        for a, b in zip(src, dst):
            perm[a] = b
        if any(perm[v] != v for v in range(self.n)):
            self.generators.append(perm)

    def _leaf(self, order: list[int]) -> None:
        cert = _certificate(self.adj, order)
        if self.first_cert is None:
            self.first_cert, self.first_order = cert, order
        elif cert == self.first_cert:
            self._record_automorphism(self.first_order, order)
        if self.best_cert is None or cert < self.best_cert:
            self.best_cert, self.best_order = cert, order
        elif cert == self.best_cert and self.best_order is not self.first_order:
            self._record_automorphism(self.best_order, order)

    def _same_orbit_as_explored(self, v: int, explored: list[int], prefix: list[int]) -> bool:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gen in self.generators:
            if any(gen[p] != p for p in prefix):
                continue
            for x in range(self.n):
                rx, ry = find(x), find(gen[x])
                if rx != ry:
                    parent[rx] = ry
        root = find(v)
        return any(find(w) == root for w in explored)

    def run(self, cells: list[list[int]], prefix: list[int]) -> None:
        cells = _refine(self.adj, cells)
        if len(cells) == self.n:
            self._leaf([c[0] for c in cells])
            return
        size = min(len(c) for c in cells if len(c) > 1)
        idx = next(i for i, c in enumerate(cells) if len(c) == size)
        cell = cells[idx]
        explored: list[int] = []
        for v in cell:
            if explored and self.generators and self._same_orbit_as_explored(v, explored, prefix):
                continue
            rest = [w for w in cell if w != v]
            self.run(cells[:idx] + [[v], rest] + cells[idx + 1:], prefix + [v])
            explored.append(v)


def canonical_order(g: Graph) -> list[int]:
    """Vertices listed in canonical position order."""
    cap = get_cap()
    if g.n > cap:
        raise CapacityError(f"graph has {g.n} vertices, cap is {cap}")
    if g.n == 0:
        return []
    search = _Search(g)
    search.run([list(range(g.n))], [])
    return search.best_order


def canonical_key(g: Graph) -> bytes:
    """Isomorphism-complete fingerprint: vertex count byte plus minimal adjacency bits."""
    order = canonical_order(g)
    nbits = g.n * (g.n - 1) // 2
    cert = _certificate(g.adj, order) if g.n else 0
    return bytes([g.n]) + cert.to_bytes((nbits + 7) // 8, "big")


def canonical_form(g: Graph) -> Graph:
    order = canonical_order(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def graph_from_key(key: bytes) -> Graph:
    """Inverse of canonical_key: the canonical representative of the class."""
    n = key[0]
    nbits = n * (n - 1) // 2
    cert = int.from_bytes(key[1:], "big") if nbits else 0
    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if cert >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph._trusted(n, tuple(rows))
