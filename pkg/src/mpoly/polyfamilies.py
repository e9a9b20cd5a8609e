"""Polynomial-valued families and their cross-relations."""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable

from .exactnum import Params, RationalLike, fmt, inv_pow, rational, require_pole_free
from .polybernoulli import build_h_table, h_explicit, mpb_explicit, _h_prefactor
from .polycauchy import CauchyKind, mpc_number_explicit, weight
from .report import Report
from .stirling import r_stirling2, r_whitney2, weighted_S, weighted_T


class Polynomial:
    """Dense polynomial in ``x`` with exact coefficients, degree-ascending."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def constant(cls, c: RationalLike) -> "Polynomial":
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, d: int) -> Fraction:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else Fraction(0)

    def __call__(self, x0: RationalLike) -> Fraction:
        x0 = rational(x0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "Polynomial":
        o = other if isinstance(other, Polynomial) else Polynomial([other])
        n = max(len(self.coeffs), len(o.coeffs))
        return Polynomial(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "Polynomial":
        o = other if isinstance(other, Polynomial) else Polynomial([other])
        return self + (-o)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = rational(other)
            return Polynomial(c * a for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def to_json(self) -> list[str]:
        return [fmt(c) for c in self.coeffs] or ["0"]

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Polynomial(0)"
        terms = []
        for d, c in enumerate(self.coeffs):
            if c:
                terms.append(fmt(c) + ("" if d == 0 else "*x" if d == 1 else f"*x^{d}"))
        return "Polynomial(" + " + ".join(terms) + ")"


@lru_cache(maxsize=None)
def rising_factorial(q: Fraction, n: int) -> Polynomial:
    """``(x)_{q,n} = x (x+q) ... (x+q(n-1))``."""
    q = rational(q)
    out = Polynomial([1])
    for j in range(n):
        out = out * Polynomial([j * q, 1])
    return out


@lru_cache(maxsize=None)
def mpc_polynomial(kind: CauchyKind, n: int, p: Params) -> Polynomial:
    """``sum_j (-1)^(n-j) C(n,j) X_{j,m} (x)_{q,n-j}`` for the numbers ``X`` of ``kind``."""
    kind = CauchyKind.parse(kind)
    out = Polynomial()
    for j in range(n + 1):
        c = (-1) ** (n - j) * comb(n, j) * mpc_number_explicit(kind, j, p)
        out = out + rising_factorial(p.q, n - j) * c
    return out


def mpc_poly_weighted_eval(kind: CauchyKind, n: int, p: Params, x0: RationalLike) -> Fraction:
    """Evaluate the Cauchy polynomial through weighted Stirling numbers ``T_n^i(x0/q)``."""
    kind = CauchyKind.parse(kind)
    x0 = rational(x0)
    require_pole_free(p, n)
    y = x0 / p.q
    total = Fraction(0)
    for i in range(n + 1):
        total += weighted_T(n, i, y) * p.q ** (n - i) * kind.sign**i * weight(p, i)
    return p.prefactor * total


def mpc_poly_inverse_check(n: int, p: Params, x0: RationalLike) -> Fraction:
    """``sum_i q^(n-i) S_n^i(x0/q) C_{i,m}(x0)``; equals :func:`cauchy_inverse_closed`."""
    x0 = rational(x0)
    return sum(
        (
            p.q ** (n - i) * weighted_S(n, i, x0 / p.q) * mpc_polynomial(CauchyKind.FIRST, i, p)(x0)
            for i in range(n + 1)
        ),
        Fraction(0),
    )


def cauchy_inverse_closed(n: int, p: Params) -> Fraction:
    return p.prefactor * weight(p, n)


def mpc_poly_dual(kind: CauchyKind, n: int, p: Params, x0: RationalLike) -> Fraction:
    kind = CauchyKind.parse(kind)
    if n < 1:
        raise ValueError("n must be >= 1")
    x0 = rational(x0)
    return sum(
        (
            comb(n - 1, i - 1) * p.q ** (n - i) * mpc_polynomial(kind.other, i, p)(x0) / factorial(i)
            for i in range(1, n + 1)
        ),
        Fraction(0),
    )


def mpc_poly_dual_target(kind: CauchyKind, n: int, p: Params, x0: RationalLike) -> Fraction:
    kind = CauchyKind.parse(kind)
    return Fraction((-1) ** n) * mpc_polynomial(kind, n, p)(-rational(x0)) / factorial(n)


@lru_cache(maxsize=None)
def mpb_polynomial(n: int, p: Params) -> Polynomial:
    """``sum_i C(n,i) (-q)^(n-i) B_{i,m} x^(n-i)``."""
    cs = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        cs[n - i] = comb(n, i) * (-p.q) ** (n - i) * mpb_explicit(i, p)
    return Polynomial(cs)


def _bernoulli_weighted(n: int, p: Params, stirling) -> Fraction:
    require_pole_free(p, n)
    total = Fraction(0)
    for i in range(n + 1):
        total += factorial(i) * (-p.q) ** (n - i) * weight(p, i) * stirling(i)
    return p.prefactor * total


def mpb_poly_weighted_eval(n: int, p: Params, x0: RationalLike) -> Fraction:
    x0 = rational(x0)
    return _bernoulli_weighted(n, p, lambda i: weighted_S(n, i, x0))


def mpb_poly_rstirling_eval(n: int, p: Params, r: int) -> Fraction:
    """Bernoulli polynomial at an integer point ``r >= 0`` through r-Stirling numbers."""
    return _bernoulli_weighted(n, p, lambda i: r_stirling2(n, i, r))


def mpb_poly_whitney_eval(n: int, p: Params, h: RationalLike, r: RationalLike) -> Fraction:
    """Bernoulli polynomial at ``r/h`` through r-Whitney numbers."""
    h = rational(h)
    return _bernoulli_weighted(n, p, lambda i: r_whitney2(n, i, h, r) / h ** (n - i))


def mpb_poly_weighted_inverse_check(n: int, p: Params, x0: RationalLike) -> Fraction:
    """``sum_i T_n^i(x0) (-q)^(n-i) B_{i,m}(x0)``; equals :func:`bernoulli_inverse_closed`."""
    x0 = rational(x0)
    return sum(
        (weighted_T(n, i, x0) * (-p.q) ** (n - i) * mpb_polynomial(i, p)(x0) for i in range(n + 1)),
        Fraction(0),
    )


def bernoulli_inverse_closed(n: int, p: Params) -> Fraction:
    return p.prefactor * factorial(n) * weight(p, n)


THM200 = ("For9", "For10", "For11", "For12")


def thm200_sum(relation: str, n: int, p: Params, x0: RationalLike) -> Fraction:
    """Double sums linking Bernoulli and Cauchy polynomials, evaluated at ``x0``."""
    x = rational(x0)
    y = x / p.q
    q = p.q
    total = Fraction(0)
    if relation in ("For9", "For10"):
        kind = CauchyKind.FIRST if relation == "For9" else CauchyKind.SECOND
        cvals = [mpc_polynomial(kind, j, p)(x) for j in range(n + 1)]
        for i in range(n + 1):
            outer = factorial(i) * weighted_S(n, i, x)
            if not outer:
                continue
            for j in range(i + 1):
                inner = weighted_S(i, j, y) * cvals[j]
                if relation == "For9":
                    total += outer * (-q) ** (n - i) * q ** (i - j) * inner
                else:
                    total += outer * q ** (n - j) * inner
        return total if relation == "For9" else (-1) ** n * total
    if relation in ("For11", "For12"):
        bvals = [mpb_polynomial(j, p)(x) for j in range(n + 1)]
        for i in range(n + 1):
            outer = weighted_T(n, i, y) / factorial(i)
            if not outer:
                continue
            for j in range(i + 1):
                sign = (-1) ** (i - j) if relation == "For11" else (-1) ** j
                total += q ** (n - j) * sign * outer * weighted_T(i, j, x) * bvals[j]
        return total
    raise ValueError(f"unknown relation {relation!r}")


def thm200_target(relation: str, n: int, p: Params, x0: RationalLike) -> Fraction:
    if relation in ("For9", "For10"):
        return mpb_polynomial(n, p)(x0)
    kind = CauchyKind.FIRST if relation == "For11" else CauchyKind.SECOND
    return mpc_polynomial(kind, n, p)(x0)


def thm200_check(relation: str, n: int, p: Params, x0: RationalLike) -> Report:
    report = Report(f"thm200:{relation}", ranges={"n": n, "x0": fmt(rational(x0))}, sample=[p.describe()])
    report.compare({"n": n}, thm200_sum(relation, n, p, x0), thm200_target(relation, n, p, x0))
    return report


def h_polynomial(n: int, pcol: int, p: Params) -> Polynomial:
    """``sum_i C(n,i) (-q)^(n-i) H_{i,p}(m) x^(n-i)`` with ``H`` from the recurrence table."""
    table = build_h_table(p, n, pcol)
    cs = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        cs[n - i] = comb(n, i) * (-p.q) ** (n - i) * table[i, pcol]
    return Polynomial(cs)


def h_polynomial_explicit(n: int, pcol: int, p: Params) -> Polynomial:
    """Same polynomial with ``H_{i,p}`` taken from its defining sum."""
    cs = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        cs[n - i] = comb(n, i) * (-p.q) ** (n - i) * h_explicit(i, p, pcol)
    return Polynomial(cs)


def h_poly_alt_eval(n: int, pcol: int, p: Params, x0: RationalLike) -> Fraction:
    """Closed form through ``S_n^i(x0 + p)``."""
    x0 = rational(x0)
    require_pole_free(p, n + pcol)
    total = Fraction(0)
    for i in range(n + 1):
        total += (
            factorial(i + pcol)
            * (-p.q) ** (n - i)
            * p.l ** (i + p.a)
            * inv_pow(p.a + p.m + i + pcol, p.k)
            * weighted_S(n, i, x0 + pcol)
        )
    return _h_prefactor(p, pcol) * p.prefactor / factorial(pcol) * total


def h_poly_step_factor(p: Params, pcol: int) -> Fraction:
    return p.l * (pcol + 1) * _h_prefactor(p, pcol) / _h_prefactor(p, pcol + 1)


def h_poly_recurrence_residual(n: int, pcol: int, p: Params) -> Polynomial:
    """``H_{n+1,p} - F H_{n,p+1} + q (x+p) H_{n,p}``; zero in the proof-consistent orientation."""
    lhs = h_polynomial(n + 1, pcol, p)
    factor = h_poly_step_factor(p, pcol)
    shift = Polynomial([p.q * pcol, p.q])
    return lhs - h_polynomial(n, pcol + 1, p) * factor + shift * h_polynomial(n, pcol, p)
