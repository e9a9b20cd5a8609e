"""Stirling-family triangles.

All tables are grown by their recurrences; the explicit sums live in the
test suite as oracles.  Indices outside ``0 <= i <= n`` give 0.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .exactnum import RationalLike, ZeroParameter, rational

Rule = Callable[["Triangle", int, int], Fraction]


class Triangle:
    """Lazily grown memo of ``Fraction`` entries keyed by ``(n, i)``.

    ``rule(tri, n, i)`` computes an entry and may read ``tri[n', i']`` for
    ``n' < n``.  Rows below the requested one are warmed first so that deep
    requests do not recurse ``n`` levels.
    """

    def __init__(self, rule: Rule, *, name: str = "", band: Callable[[int], range] | None = None):
        self._rule = rule
        self._memo: dict[tuple[int, int], Fraction] = {}
        self._lock = threading.RLock()
        self._band = band
        self._warm = 0
        self.name = name

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        try:
            return self._memo[key]
        except KeyError:
            pass
        n, i = key
        with self._lock:
            if self._band is not None:
                while self._warm < n:
                    for j in self._band(self._warm):
                        self._get(self._warm, j)
                    self._warm += 1
            return self._get(n, i)

    def _get(self, n: int, i: int) -> Fraction:
        key = (n, i)
        if key not in self._memo:
            self._memo[key] = Fraction(self._rule(self, n, i))
        return self._memo[key]

    def row(self, n: int, width: int | None = None) -> list[Fraction]:
        width = n + 1 if width is None else width
        return [self[n, i] for i in range(width)]

    def __len__(self) -> int:
        return len(self._memo)

    def __repr__(self) -> str:
        return f"Triangle({self.name!r}, {len(self._memo)} entries)"


def _triangular(n: int) -> range:
    return range(n + 1)


def _s1_rule(t: Triangle, n: int, i: int) -> Fraction:
    if i < 0 or i > n:
        return Fraction(0)
    if n == 0:
        return Fraction(1)
    return t[n - 1, i - 1] - (n - 1) * t[n - 1, i]


def _s2_rule(t: Triangle, n: int, i: int) -> Fraction:
    if i < 0 or i > n:
        return Fraction(0)
    if n == 0:
        return Fraction(1)
    return i * t[n - 1, i] + t[n - 1, i - 1]


_S1 = Triangle(_s1_rule, name="stirling1", band=_triangular)
_S2 = Triangle(_s2_rule, name="stirling2", band=_triangular)


def stirling1(n: int, i: int) -> Fraction:
    """Signed Stirling number of the first kind, ``s(n+1,i) = s(n,i-1) - n s(n,i)``."""
    if n < 0 or i < 0 or i > n:
        return Fraction(0)
    return _S1[n, i]


def stirling2(n: int, i: int) -> Fraction:
    if n < 0 or i < 0 or i > n:
        return Fraction(0)
    return _S2[n, i]


def _shifted_rule(x: Fraction) -> Rule:
    # S_{n+1}^i(x) = (x + i) S_n^i(x) + S_n^{i-1}(x)
    def rule(t: Triangle, n: int, i: int) -> Fraction:
        if i < 0 or i > n:
            return Fraction(0)
        if n == 0:
            return Fraction(1)
        return (x + i) * t[n - 1, i] + t[n - 1, i - 1]

    return rule


def _weighted_first_rule(x: Fraction) -> Rule:
    # T_{n+1}^i(x) = T_n^{i-1}(x) - (n + x) T_n^i(x)
    def rule(t: Triangle, n: int, i: int) -> Fraction:
        if i < 0 or i > n:
            return Fraction(0)
        if n == 0:
            return Fraction(1)
        return t[n - 1, i - 1] - (n - 1 + x) * t[n - 1, i]

    return rule


@lru_cache(maxsize=None)
def _r_table(r: int) -> Triangle:
    return Triangle(_shifted_rule(Fraction(r)), name=f"r-stirling2[r={r}]", band=_triangular)


@lru_cache(maxsize=256)
def _s_table(x: Fraction) -> Triangle:
    return Triangle(_shifted_rule(x), name=f"S[x={x}]", band=_triangular)


@lru_cache(maxsize=256)
def _t_table(x: Fraction) -> Triangle:
    return Triangle(_weighted_first_rule(x), name=f"T[x={x}]", band=_triangular)


def r_stirling2(n: int, i: int, r: int) -> Fraction:
    """Broder's r-Stirling number ``{n+r, i+r}_r``: ``n! [z^n] e^{rz}(e^z-1)^i / i!``."""
    if r < 0:
        raise ValueError("r must be a nonnegative integer")
    if n < 0 or i < 0 or i > n:
        return Fraction(0)
    return _r_table(int(r))[n, i]


def weighted_S(n: int, i: int, x: RationalLike) -> Fraction:
    """Weighted Stirling number of the second kind ``S_n^i(x)``."""
    if n < 0 or i < 0 or i > n:
        return Fraction(0)
    return _s_table(rational(x))[n, i]


def weighted_T(n: int, i: int, x: RationalLike) -> Fraction:
    """Weighted Stirling number of the first kind ``T_n^i(x)``, EGF ``(ln(1+z))^i / (i! (1+z)^x)``."""
    if n < 0 or i < 0 or i > n:
        return Fraction(0)
    return _t_table(rational(x))[n, i]


def r_whitney2(n: int, i: int, h: RationalLike, r: RationalLike) -> Fraction:
    """r-Whitney number of the second kind, ``h^(n-i) S_n^i(r/h)``."""
    h, r = rational(h), rational(r)
    if h == 0:
        raise ZeroParameter("h must be nonzero")
    if n < 0 or i < 0 or i > n:
        return Fraction(0)
    return h ** (n - i) * weighted_S(n, i, r / h)
