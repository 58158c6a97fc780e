"""Closed-form double star counts, evaluated in exact integer/rational arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .constructions import complete_bipartite_plus
from .errors import HypothesisError, SpecError
from .patterns import count_double_stars


@dataclass(frozen=True)
class DoubleStarParams:
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.b < 1:
            raise SpecError(f"double star needs a, b >= 1, got ({self.a}, {self.b})")
        if self.a > self.b:
            raise SpecError(f"double star needs a <= b, got ({self.a}, {self.b})")

    @classmethod
    def of(cls, a: int, b: int) -> DoubleStarParams:
        return cls(min(a, b), max(a, b))


@dataclass(frozen=True)
class RValue:
    r: Fraction
    nice: bool
    clique_term: Fraction
    regular_term: Fraction


def f_value(x: int, y: int, p: DoubleStarParams) -> int:
    """Copies of S_{a,b} on a central edge with endpoint degrees x, y in a triangle-free host."""
    if x < 1 or y < 1:
        raise SpecError(f"degrees must be >= 1, got ({x}, {y})")
    a, b = p.a, p.b
    value = comb(x - 1, a) * comb(y - 1, b)
    if a != b:
        value += comb(y - 1, a) * comb(x - 1, b)
    return value


def count_in_complete_bipartite(m: int, n: int, p: DoubleStarParams) -> int:
    if not 1 <= m <= n - 1:
        raise SpecError(f"need 1 <= m <= n-1, got m={m}, n={n}")
    return m * (n - m) * f_value(m, n - m, p)


def best_complete_bipartite(n: int, p: DoubleStarParams) -> tuple[int, int]:
    """(m, count) maximizing count over K_{m,n-m}, 1 <= m <= n/2; smallest m wins ties."""
    if n < 2:
        raise SpecError(f"need n >= 2, got {n}")
    best_m, best = 1, count_in_complete_bipartite(1, n, p)
    for m in range(2, n // 2 + 1):
        value = count_in_complete_bipartite(m, n, p)
        if value > best:
            best_m, best = m, value
    return best_m, best


def best_complete_bipartite_plus(n: int, p: DoubleStarParams) -> tuple[int, int]:
    """(m, count) maximizing the count in K+_{m,n-m}, scanning 2 <= m <= n-2.

    The extra edge sits in the part of size m, so the full range covers both sides.
    """
    if n < 4:
        raise SpecError(f"need n >= 4, got {n}")
    best_m, best = 0, -1
    for m in range(2, n - 1):
        value = count_double_stars(complete_bipartite_plus(m, n - m), p.a, p.b)
        if value > best:
            best_m, best = m, value
    return best_m, best


def klikks_value(n: int, k: int, p: DoubleStarParams) -> int:
    """Maximum number of K_k in an n-vertex S_{a,b}-free graph: p C(a+b+1,k) + C(q,k)."""
    if k < 3:
        raise SpecError(f"need k >= 3, got {k}")
    if n < 0:
        raise SpecError(f"need n >= 0, got {n}")
    s = p.a + p.b + 1
    copies, rem = divmod(n, s)
    return copies * comb(s, k) + comb(rem, k)


def r_value(a: int, b: int, c: int, d: int) -> RValue:
    """Per-vertex rate for counting S_{a,b} in S_{c,d}-free graphs, for c <= a <= b < d."""
    if not (1 <= c <= a <= b < d):
        raise SpecError(f"need 1 <= c <= a <= b < d, got a={a}, b={b}, c={c}, d={d}")
    s = c + d
    clique = Fraction(s * comb(s - 1, a) * comb(s - 1 - a, b))
    regular = Fraction(d * comb(d - 1, a) * comb(d - 1, b))
    if a == b:
        clique /= 2
        regular /= 2
    r = max(clique, regular)
    return RValue(r=r, nice=r == regular, clique_term=clique, regular_term=regular)


def cnc_value(n: int, p: DoubleStarParams, c: int) -> int:
    """Count of S_{a,b} in K_{c,n-c}."""
    if not p.a < c:
        raise HypothesisError(f"need a < c, got a={p.a}, c={c}")
    if not n > c:
        raise HypothesisError(f"need n > c, got n={n}, c={c}")
    return count_in_complete_bipartite(c, n, p)
