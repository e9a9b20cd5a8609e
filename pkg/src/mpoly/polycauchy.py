"""Generalized m-poly-Cauchy numbers of the first and second kind."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exactnum import (
    Params,
    PoleError,
    UnsupportedParameter,
    classic,
    inv_pow,
    require_pole_free,
)
from .stirling import Triangle, r_stirling2, stirling1


class CauchyKind(enum.Enum):
    FIRST = "first"
    SECOND = "second"

    @property
    def sign(self) -> int:
        return 1 if self is CauchyKind.FIRST else -1

    @property
    def other(self) -> "CauchyKind":
        return CauchyKind.SECOND if self is CauchyKind.FIRST else CauchyKind.FIRST

    @classmethod
    def parse(cls, value) -> "CauchyKind":
        if isinstance(value, cls):
            return value
        v = str(value).lower()
        if v in ("1", "first", "cauchy1"):
            return cls.FIRST
        if v in ("2", "second", "cauchy2"):
            return cls.SECOND
        raise ValueError(f"unknown Cauchy kind {value!r}")


FIRST, SECOND = CauchyKind.FIRST, CauchyKind.SECOND


def weight(p: Params, i: int) -> Fraction:
    """``l^(a+i) / (a+i+m)^k``, the common summand of the explicit formulas."""
    base = p.a + i + p.m
    if base == 0 and p.k > 0:
        raise PoleError(f"pole at a + i + m = 0 (i={i})", i)
    return p.l ** (p.a + i) * inv_pow(base, p.k)


@lru_cache(maxsize=None)
def pc_number_explicit(kind: CauchyKind, n: int, p: Params) -> Fraction:
    """Unshifted ``c_n^(k)(a,q,L)`` (or its hat variant); ``p.m`` is ignored."""
    return mpc_number_explicit(kind, n, p.with_shift(0))


@lru_cache(maxsize=None)
def mpc_number_explicit(kind: CauchyKind, n: int, p: Params) -> Fraction:
    kind = CauchyKind.parse(kind)
    require_pole_free(p, n)
    total = Fraction(0)
    for i in range(n + 1):
        s = stirling1(n, i)
        if s:
            total += s * kind.sign**i * p.q ** (n - i) * weight(p, i)
    return p.prefactor * total


def mpc_number_via_rstirling(kind: CauchyKind, n: int, p: Params) -> Fraction:
    """Resum the unshifted numbers ``c_{n+j}`` with r-Stirling weights ``{m+n, j+n}_n``."""
    kind = CauchyKind.parse(kind)
    m = p.m
    require_pole_free(p, n)
    base = p.with_shift(0)
    total = Fraction(0)
    for j in range(m + 1):
        total += r_stirling2(m, j, n) * p.q ** (m - j) * pc_number_explicit(kind, n + j, base)
    factor = p.prefactor / p.l**m
    if kind is SECOND:
        factor *= (-1) ** m
    return factor * total


@dataclass
class CauchyTable:
    """Entries ``C_{n,m}`` for ``n <= N``, ``m <= M`` grown by the diagonal recurrence.

    Columns are the absolute shift ``m``; the shift stored in ``params`` is
    not used.
    """

    kind: CauchyKind
    params: Params
    N: int
    M: int
    values: Triangle

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        n, m = key
        if not (0 <= n <= self.N and 0 <= m <= self.M + self.N - n):
            raise IndexError(key)
        return self.values[n, m]

    def matrix(self) -> list[list[Fraction]]:
        return [[self.values[n, m] for m in range(self.M + 1)] for n in range(self.N + 1)]

    def column(self, m: int) -> list[Fraction]:
        return [self.values[n, m] for n in range(self.N + 1)]


def _diagonal_factor(p: Params, m: int) -> Fraction:
    a, k = p.a, p.k
    if k > 0:
        # (1 - 1/(a+m+1))^k
        if a + m + 1 == 0:
            raise PoleError(f"pole at a + m + 1 = 0 (m={m})", m)
        return (1 - Fraction(1, a + m + 1)) ** k
    if a + m == 0:
        raise PoleError(f"pole at a + m = 0 (m={m})", m)
    # (1 + 1/(a+m))^|k|
    return (1 + Fraction(1, a + m)) ** (-k)


def build_cauchy_table(kind: CauchyKind, p: Params, N: int, M: int) -> CauchyTable:
    kind = CauchyKind.parse(kind)
    width = M + N
    for m in range(width + 1):
        if p.a + m == 0:
            raise PoleError(f"pole at a + m = 0 (m={m})", m)
    factors = [_diagonal_factor(p, m) for m in range(width)]
    seed = p.seed
    lq = kind.sign * p.l

    def rule(t: Triangle, n: int, m: int) -> Fraction:
        if n == 0:
            return seed
        return lq * factors[m] * t[n - 1, m + 1] - (n - 1) * p.q * t[n - 1, m]

    values = Triangle(rule, name=f"cauchy-{kind.value}", band=lambda n: range(width - n + 1))
    return CauchyTable(kind, p, N, M, values)


def dual_side(kind: CauchyKind, n: int, p: Params) -> Fraction:
    """``sum_{i=1}^n q^(n-i) C(n-1,i-1) X_{i,m} / i!`` with ``X`` the opposite kind.

    Equals ``(-1)^n`` times the own-kind number over ``n!``.
    """
    kind = CauchyKind.parse(kind)
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(
        (
            p.q ** (n - i) * comb(n - 1, i - 1) * mpc_number_explicit(kind.other, i, p) / factorial(i)
            for i in range(1, n + 1)
        ),
        Fraction(0),
    )


def dual_target(kind: CauchyKind, n: int, p: Params) -> Fraction:
    return Fraction((-1) ** n) * mpc_number_explicit(CauchyKind.parse(kind), n, p) / factorial(n)


def dual_transform(seq: list[Fraction], q: Fraction) -> list[Fraction]:
    """Signed binomial transform behind the duality: ``b_n = (-1)^n sum C(n-1,i-1) q^(n-i) a_i``.

    Index 0 is carried through unchanged.  The map is an involution.
    """
    out = [seq[0]]
    for n in range(1, len(seq)):
        acc = sum((comb(n - 1, i - 1) * q ** (n - i) * seq[i] for i in range(1, n + 1)), Fraction(0))
        out.append((-1) ** n * acc)
    return out


def m_cauchy(n: int, m: int) -> Fraction:
    """``C_{n,m}`` at ``a = l = q = k = 1``."""
    return mpc_number_explicit(FIRST, n, classic(1, m))


def gregory_table(N: int, M: int) -> Triangle:
    """``G_{n,m}`` with ``G_{0,m} = 1``; column 0 holds the Gregory coefficients."""
    width = M + N

    def rule(t: Triangle, n: int, m: int) -> Fraction:
        if n == 0:
            return Fraction(1)
        j = n - 1
        return ((1 + m) * t[j, m + 1] - j * (2 + m) * t[j, m]) / ((1 + j) * (2 + m))

    return Triangle(rule, name="gregory", band=lambda n: range(width - n + 1))


def _poly_mul(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] += a * b
    return out


def pc_integral_oracle(kind: CauchyKind, n: int, p: Params, m: int | None = None) -> Fraction:
    """Evaluate the k-fold box integral directly.

    The integrand depends on ``t = x_1 ... x_k`` only: it is
    ``t^(a+m-1) * prod_{j<n} (t - jq)`` (first kind) or
    ``t^(a+m-1) * prod_{j<n} (-t - jq)`` (second kind).  Each monomial
    ``t^e`` integrates to ``prod_i l_i^(e+1) / (e+1)`` over the box.
    ``L`` shorter than ``k`` is padded with sides of length 1.

    The shifted integrand carries ``t^(a+m-1)``, which scales every term by an
    extra ``l^m`` relative to the explicit sum; the result is divided by it.
    """
    kind = CauchyKind.parse(kind)
    m = p.m if m is None else m
    if p.a < 1:
        raise UnsupportedParameter("integral oracle needs integer a >= 1")
    if p.k < 1:
        raise UnsupportedParameter("integral oracle needs a positive order k")
    if len(p.L) > p.k:
        raise UnsupportedParameter("L has more sides than the order k")
    sides = list(p.L) + [Fraction(1)] * (p.k - len(p.L))
    sgn = kind.sign
    poly = [Fraction(1)]
    for j in range(n):
        poly = _poly_mul(poly, [-j * p.q, Fraction(sgn)])
    shift = p.a + m - 1
    total = Fraction(0)
    for d, c in enumerate(poly):
        if not c:
            continue
        e = d + shift
        box = Fraction(1)
        for side in sides:
            box *= side ** (e + 1) / (e + 1)
        total += c * box
    return Fraction(p.a + m) ** p.k / Fraction(p.a) ** p.k * total / p.l**m
