"""graph6 encoding for graphs with at most 62 vertices."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import CapacityError, Graph6Error
from .graph import Graph

MAX_N = 62
_HEADER = ">>graph6<<"


def _bits(g: Graph) -> Iterator[int]:
    # column order: x(0,1), x(0,2), x(1,2), x(0,3), ...
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            yield row >> i & 1


def encode_graph6(g: Graph) -> str:
    if g.n > MAX_N:
        raise CapacityError(f"graph6 encoding supports n <= {MAX_N}, got {g.n}")
    out = [chr(g.n + 63)]
    chunk = 0
    filled = 0
    for bit in _bits(g):
        chunk = chunk << 1 | bit
        filled += 1
        if filled == 6:
            out.append(chr(chunk + 63))
            chunk = filled = 0
    if filled:
        out.append(chr((chunk << (6 - filled)) + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    s = text.rstrip("\r\n")
    base = 0
    if s.startswith(_HEADER):
        base = len(_HEADER)
        s = s[base:]
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside graph6 range 63..126", base + i)
    if s[0] == "~":
        raise Graph6Error(f"graphs with more than {MAX_N} vertices are not supported", base)
    n = ord(s[0]) - 63
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(s) < expected:
        raise Graph6Error(f"truncated: n={n} needs {expected} bytes, got {len(s)}", base + len(s))
    if len(s) > expected:
        raise Graph6Error(f"trailing garbage after {expected} bytes", base + expected)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[1 + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6:
        pad = (ord(s[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error("nonzero padding bits", base + len(s) - 1)
    return Graph(n, tuple(rows))


def read_graph6_lines(stream: TextIO) -> Iterator[Graph]:
    for line in stream:
        line = line.strip()
        if line:
            yield decode_graph6(line)


def write_graph6_lines(graphs: Iterable[Graph], stream: TextIO) -> int:
    count = 0
    for g in graphs:
        stream.write(encode_graph6(g) + "\n")
        count += 1
    return count
