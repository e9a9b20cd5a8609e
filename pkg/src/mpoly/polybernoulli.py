"""Generalized m-poly-Bernoulli numbers and their H-triangle algorithm."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .egfseries import egf_coefficients
from .exactnum import Params, PoleError, classic, require_pole_free
from .polycauchy import FIRST, SECOND, mpc_number_explicit, weight
from .report import Report
from .stirling import Triangle, stirling1, stirling2


@lru_cache(maxsize=None)
def mpb_explicit(n: int, p: Params) -> Fraction:
    """``((a+m)^k/a^k) sum_i i! (-q)^(n-i) l^(i+a) {n,i} / (a+m+i)^k``."""
    require_pole_free(p, n)
    total = Fraction(0)
    for i in range(n + 1):
        s = stirling2(n, i)
        if s:
            total += factorial(i) * (-p.q) ** (n - i) * s * weight(p, i)
    return p.prefactor * total


def inverse_stirling_check(n: int, p: Params) -> Fraction:
    """``sum_i s(n,i) (-q)^(n-i) B_{i,m}``; see :func:`inverse_stirling_closed`."""
    return sum(
        (stirling1(n, i) * (-p.q) ** (n - i) * mpb_explicit(i, p) for i in range(n + 1)),
        Fraction(0),
    )


def inverse_stirling_closed(n: int, p: Params) -> Fraction:
    return p.prefactor * factorial(n) * weight(p, n)


def _h_prefactor(p: Params, pcol: int) -> Fraction:
    base = p.a + p.m
    top = base + pcol
    if base == 0 or (top == 0 and p.k < 0):
        raise PoleError(f"pole in ((p+a+m)/(a+m))^k at p={pcol}", pcol)
    return Fraction(top, base) ** p.k


def h_explicit(n: int, p: Params, pcol: int) -> Fraction:
    """``H_{n,p}(m)`` from its defining Stirling-first-kind sum over ``B_{n+i,m}``."""
    total = sum(
        (stirling1(pcol, i) * (-p.q) ** (pcol - i) * mpb_explicit(n + i, p) for i in range(pcol + 1)),
        Fraction(0),
    )
    return _h_prefactor(p, pcol) * total / (factorial(pcol) * p.l**pcol)


@dataclass
class HTable:
    """H-triangle for fixed ``(a, q, L, k, m)``; column 0 is ``B_{n,m}``."""

    params: Params
    N: int
    P: int
    values: Triangle
    x_offset: Fraction = Fraction(0)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        n, c = key
        if not (0 <= n <= self.N and 0 <= c <= self.P + self.N - n):
            raise IndexError(key)
        return self.values[n, c]

    def column(self, c: int = 0) -> list[Fraction]:
        return [self.values[n, c] for n in range(self.N + 1)]

    def matrix(self) -> list[list[Fraction]]:
        return [[self.values[n, c] for c in range(self.P + 1)] for n in range(self.N + 1)]


def _h_factor(p: Params, c: int) -> Fraction:
    """Coefficient of ``H_{n,c+1}`` in the step to ``H_{n+1,c}``."""
    s = c + p.a + p.m
    if p.k > 0:
        if s + 1 == 0:
            raise PoleError(f"pole at p + a + m + 1 = 0 (p={c})", c)
        return p.l * (c + 1) * Fraction(s) ** p.k / Fraction(s + 1) ** p.k
    # negative order: p-advancing form, factor (p+a+m+1)^|k| / (p+a+m)^|k|
    if s == 0:
        raise PoleError(f"pole at p + a + m = 0 (p={c})", c)
    j = -p.k
    return p.l * (c + 1) * Fraction(s + 1) ** j / Fraction(s) ** j


def build_h_table(p: Params, N: int, P: int) -> HTable:
    width = P + N
    if p.a + p.m == 0:
        raise PoleError("pole at a + m = 0", 0)
    factors = [_h_factor(p, c) for c in range(width)]
    seed = p.seed

    def rule(t: Triangle, n: int, c: int) -> Fraction:
        if n == 0:
            return seed
        return factors[c] * t[n - 1, c + 1] - c * p.q * t[n - 1, c]

    values = Triangle(rule, name="H", band=lambda n: range(width - n + 1))
    return HTable(p, N, P, values)


def bernoulli_classic(N: int) -> list[Fraction]:
    """``B_0 .. B_N`` with ``B_1 = +1/2``, read from column 0 of the H-triangle."""
    return build_h_table(classic(), N, 0).column(0)


CONVERSIONS = ("B_from_C1", "B_from_C2", "C1_from_B", "C2_from_B")


def convert(relation: str, n: int, p: Params) -> Fraction:
    """Evaluate one of the four double-sum conversions between B and C numbers."""
    if n < 1:
        raise ValueError("conversions are stated for n >= 1")
    q = p.q
    total = Fraction(0)
    if relation == "B_from_C1":
        for j in range(1, n + 1):
            inner = sum(
                (factorial(i) * stirling2(n, i) * stirling2(i - 1, j - 1) for i in range(1, n + 1)),
                Fraction(0),
            )
            if inner:
                total += q ** (n - j) * inner * mpc_number_explicit(FIRST, j, p)
        return total
    if relation == "B_from_C2":
        for j in range(1, n + 1):
            inner = sum(
                (factorial(i) * stirling2(n, i) * stirling2(i, j) for i in range(1, n + 1)),
                Fraction(0),
            )
            if inner:
                total += q ** (n - j) * inner * mpc_number_explicit(SECOND, j, p)
        return (-1) ** n * total
    if relation in ("C1_from_B", "C2_from_B"):
        first = relation == "C1_from_B"
        for j in range(1, n + 1):
            for i in range(1, n + 1):
                s = stirling1(n, i) * stirling1(i, j)
                if not s:
                    continue
                sign = (-1) ** (i - j) if first else (-1) ** j
                total += q ** (n - j) * Fraction(sign, factorial(i)) * s * mpb_explicit(j, p)
        return total
    raise ValueError(f"unknown conversion {relation!r}")


def convert_target(relation: str, n: int, p: Params) -> Fraction:
    if relation.startswith("B_"):
        return mpb_explicit(n, p)
    kind = FIRST if relation == "C1_from_B" else SECOND
    return mpc_number_explicit(kind, n, p)


DOUBLE_GF = {
    "cauchy1": "dgf_cauchy1",
    "cauchy2": "dgf_cauchy2",
    "bernoulli": "dgf_bernoulli",
    "bernoulli_poly": "dgf_bernoulli_poly",
}


def double_egf_check(family: str, p: Params, N: int, K: int, x0: Fraction | None = None) -> Report:
    """Compare the bivariate closed form with directly computed negative-order values.

    The ``y^0`` column (order 0) is not compared.
    """
    from .polyfamilies import mpb_polynomial

    grid = egf_coefficients(DOUBLE_GF[family], p, N, x0=x0, K=K)
    report = Report(f"DGF-{family}", ranges={"n_max": N, "k_max": K}, sample=[p.describe()])
    for k in range(1, K + 1):
        pk = p.with_order(-k)
        for n in range(N + 1):
            if family == "cauchy1":
                direct = mpc_number_explicit(FIRST, n, pk)
            elif family == "cauchy2":
                direct = mpc_number_explicit(SECOND, n, pk)
            elif family == "bernoulli":
                direct = mpb_explicit(n, pk)
            else:
                direct = mpb_polynomial(n, pk)(x0)
            report.compare({"n": n, "k": -k}, grid[n][k], direct)
    return report

