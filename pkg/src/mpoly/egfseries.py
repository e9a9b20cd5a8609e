"""Exact truncated power series, univariate and bivariate.

Series hold ordinary coefficients; factorial normalisation is applied only
in :func:`egf_coefficients`.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .exactnum import Params, PoleError, RationalLike, rational, require_pole_free


class SeriesError(ArithmeticError):
    pass


class DivisionValuation(SeriesError):
    pass


class NonzeroConstant(SeriesError):
    pass


class MissingEvaluationPoint(ValueError):
    pass


class TruncatedSeries:
    """Coefficients ``a_0 .. a_N`` of a power series known modulo ``x^(N+1)``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike], order: int | None = None):
        cs = [rational(c) for c in coeffs]
        if order is not None:
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        if not cs:
            raise SeriesError("a series needs at least one coefficient")
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order)

    @classmethod
    def constant(cls, c: RationalLike, order: int) -> "TruncatedSeries":
        return cls([c], order)

    @classmethod
    def variable(cls, order: int, scale: RationalLike = 1) -> "TruncatedSeries":
        return cls([0, scale], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TruncatedSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other.order != self.order:
                n = min(self.order, other.order)
                return TruncatedSeries(other.coeffs[: n + 1])
            return other
        return TruncatedSeries.constant(other, self.order)

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def __add__(self, other) -> "TruncatedSeries":
        g = self._coerce(other)
        n = min(self.order, g.order)
        return TruncatedSeries(a + b for a, b in zip(self.coeffs[: n + 1], g.coeffs[: n + 1]))

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-c for c in self.coeffs)

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            c = rational(other)
            return TruncatedSeries(c * a for a in self.coeffs)
        n = min(self.order, other.order)
        f, g = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            if not f[i]:
                continue
            fi = f[i]
            for j in range(n + 1 - i):
                if g[j]:
                    out[i + j] += fi * g[j]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return series_div(self, other)
        return self * (1 / rational(other))

    def __pow__(self, e: int) -> "TruncatedSeries":
        if e < 0:
            return series_div(TruncatedSeries.constant(1, self.order), self ** (-e))
        result = TruncatedSeries.constant(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def egf(self) -> list[Fraction]:
        """``n! a_n`` for every stored index."""
        return [factorial(n) * c for n, c in enumerate(self.coeffs)]


def series_add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return f + g


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    return f * g


def series_div(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Quotient ``f / g``; both are shifted down by ``g``'s valuation.

    The result is exact to order ``N - valuation(g)`` and zero-padded back
    to ``N`` only when no information is lost, i.e. when the valuation is 0.
    """
    vg = g.valuation()
    if vg is None:
        raise DivisionValuation("division by the zero series")
    vf = f.valuation()
    if vf is not None and vf < vg:
        raise DivisionValuation(f"valuation of numerator ({vf}) below denominator ({vg})")
    n = min(f.order, g.order) - vg
    if n < 0:
        raise DivisionValuation("no coefficients survive the division")
    num = list(f.coeffs[vg : vg + n + 1])
    den = g.coeffs[vg : vg + n + 1]
    inv0 = 1 / den[0]
    out: list[Fraction] = []
    for i in range(n + 1):
        acc = num[i]
        for j in range(1, i + 1):
            acc -= den[j] * out[i - j]
        out.append(acc * inv0)
    return TruncatedSeries(out)


def series_log1p(q: RationalLike, N: int) -> TruncatedSeries:
    """``ln(1 + q x)`` to order ``N``."""
    q = rational(q)
    cs = [Fraction(0)] + [Fraction((-1) ** (n + 1)) * q**n / n for n in range(1, N + 1)]
    return TruncatedSeries(cs, N)


def series_exp(f: TruncatedSeries) -> TruncatedSeries:
    """``exp(f)`` for ``f`` without constant term (``n g_n = sum j f_j g_{n-j}``)."""
    if f[0]:
        raise NonzeroConstant("exp needs a series with zero constant term")
    N = f.order
    g = [Fraction(1)] + [Fraction(0)] * N
    for n in range(1, N + 1):
        acc = Fraction(0)
        for j in range(1, n + 1):
            if f[j]:
                acc += j * f[j] * g[n - j]
        g[n] = acc / n
    return TruncatedSeries(g)


def expm1_scaled(c: RationalLike, N: int) -> TruncatedSeries:
    """``e^{c x} - 1`` to order ``N``."""
    return series_exp(TruncatedSeries.variable(N, c)) - 1


def _powers(u: TruncatedSeries):
    p = TruncatedSeries.constant(1, u.order)
    for _ in range(u.order + 1):
        yield p
        p = p * u


def lif_apply(k: int, a_shift: RationalLike, u: TruncatedSeries) -> TruncatedSeries:
    """``Lif_k(u; a) = sum_p u^p / ((p + a)^k p!)`` truncated at ``u``'s order."""
    if u[0]:
        raise NonzeroConstant("Lif argument must have zero constant term")
    a = rational(a_shift)
    out = TruncatedSeries.zero(u.order)
    for p, up in enumerate(_powers(u)):
        base = p + a
        if base == 0:
            if k > 0:
                raise PoleError(f"Lif pole at p={p}", p)
            continue
        out = out + up * (Fraction(1) / (base**k * factorial(p)))
    return out


def li_apply(k: int, a_shift: RationalLike, u: TruncatedSeries) -> TruncatedSeries:
    """``Li_k(u; a) = sum_{p>=1} u^p / (p + a)^k`` truncated at ``u``'s order."""
    if u[0]:
        raise NonzeroConstant("Li argument must have zero constant term")
    a = rational(a_shift)
    out = TruncatedSeries.zero(u.order)
    for p, up in enumerate(_powers(u)):
        if p == 0:
            continue
        base = p + a
        if base == 0:
            if k > 0:
                raise PoleError(f"Li pole at p={p}", p)
            continue
        out = out + up * (Fraction(1) / base**k)
    return out


class BiSeries:
    """Series in ``(x, y)`` truncated at orders ``(N, K)``.

    Stored as ``N + 1`` y-series: row ``n`` is the coefficient of ``x^n``.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[TruncatedSeries]):
        self.rows = tuple(rows)

    @classmethod
    def from_grid(cls, grid: Sequence[Sequence[RationalLike]]) -> "BiSeries":
        return cls([TruncatedSeries(r) for r in grid])

    @classmethod
    def constant(cls, c: RationalLike, N: int, K: int) -> "BiSeries":
        return cls([TruncatedSeries.constant(c if n == 0 else 0, K) for n in range(N + 1)])

    @classmethod
    def in_x(cls, f: TruncatedSeries, K: int) -> "BiSeries":
        return cls([TruncatedSeries.constant(c, K) for c in f])

    @classmethod
    def in_y(cls, g: TruncatedSeries, N: int) -> "BiSeries":
        zero = TruncatedSeries.zero(g.order)
        return cls([g] + [zero] * N)

    @property
    def orders(self) -> tuple[int, int]:
        return len(self.rows) - 1, self.rows[0].order

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        n, k = key
        return self.rows[n][k]

    def grid(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]

    def __add__(self, other: "BiSeries") -> "BiSeries":
        return BiSeries([a + b for a, b in zip(self.rows, other.rows)])

    def __neg__(self) -> "BiSeries":
        return BiSeries([-r for r in self.rows])

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self + (-other)

    def __mul__(self, other) -> "BiSeries":
        if not isinstance(other, BiSeries):
            return BiSeries([r * other for r in self.rows])
        N = min(len(self.rows), len(other.rows)) - 1
        out = []
        for n in range(N + 1):
            acc = self.rows[0] * other.rows[n]
            for j in range(1, n + 1):
                acc = acc + self.rows[j] * other.rows[n - j]
            out.append(acc)
        return BiSeries(out)

    __rmul__ = __mul__

    def exp(self) -> "BiSeries":
        f = self.rows
        if f[0][0]:
            raise NonzeroConstant("exp needs a series with zero constant term")
        g = [series_exp(f[0])]
        for n in range(1, len(f)):
            acc = f[1] * g[n - 1]
            for j in range(2, n + 1):
                acc = acc + f[j] * g[n - j] * j
            g.append(acc * Fraction(1, n))
        return BiSeries(g)

    def inverse(self) -> "BiSeries":
        f = self.rows
        if not f[0][0]:
            raise DivisionValuation("inverse needs a nonzero constant term")
        K = f[0].order
        g0 = series_div(TruncatedSeries.constant(1, K), f[0])
        g = [g0]
        for n in range(1, len(f)):
            acc = f[1] * g[n - 1]
            for j in range(2, n + 1):
                acc = acc + f[j] * g[n - j]
            g.append(-(acc * g0))
        return BiSeries(g)

    def egf(self) -> list[list[Fraction]]:
        """``n! k! [x^n y^k]`` grid."""
        return [[factorial(n) * factorial(k) * c for k, c in enumerate(r)] for n, r in enumerate(self.rows)]


# --- generating functions of the families --------------------------------

UNIVARIATE = (
    "cauchy1",
    "cauchy2",
    "cauchy1_poly",
    "cauchy2_poly",
    "bernoulli",
    "bernoulli_poly",
)
BIVARIATE = ("dgf_cauchy1", "dgf_cauchy2", "dgf_bernoulli", "dgf_bernoulli_poly")


def _cauchy_gf(p: Params, N: int, sign: int, x0: Fraction | None) -> TruncatedSeries:
    require_pole_free(p, N)
    log = series_log1p(p.q, N)
    u = log * (sign * p.l / p.q)
    gf = lif_apply(p.k, p.a + p.m, u) * (p.l**p.a * p.prefactor)
    if x0 is not None:
        gf = gf * series_exp(log * (-x0 / p.q))
    return gf


def _bernoulli_gf(p: Params, N: int, x0: Fraction | None) -> TruncatedSeries:
    require_pole_free(p, N)
    # one extra order: dividing by 1 - e^{-qz} consumes one coefficient
    w = -expm1_scaled(-p.q, N + 1)
    li = li_apply(p.k, p.a + p.m - 1, w * (p.l / p.q))
    gf = series_div(li, w) * (p.q * p.l ** (p.a - 1) * p.prefactor)
    if x0 is not None:
        gf = gf * series_exp(TruncatedSeries.variable(N, -p.q * x0))
    return gf.truncate(N)


def _dgf_cauchy(p: Params, N: int, K: int, sign: int) -> BiSeries:
    if p.a + p.m == 0:
        raise PoleError("a + m = 0", 0)
    a, am = Fraction(p.a), Fraction(p.a + p.m)
    e_ay = series_exp(TruncatedSeries.variable(K, a))
    c_y = series_exp(TruncatedSeries.variable(K, a / am)) * (sign * p.l / p.q)
    body = (BiSeries.in_x(series_log1p(p.q, N), K) * BiSeries.in_y(c_y, N)).exp()
    return body * BiSeries.in_y(e_ay * p.l**p.a, N)


def _dgf_bernoulli(p: Params, N: int, K: int, x0: Fraction | None) -> BiSeries:
    if p.a + p.m == 0:
        raise PoleError("a + m = 0", 0)
    a, am = Fraction(p.a), Fraction(p.a + p.m)
    e_ay = series_exp(TruncatedSeries.variable(K, a))
    w = -expm1_scaled(-p.q, N) * (p.l / p.q)
    u = BiSeries.in_x(w, K) * BiSeries.in_y(series_exp(TruncatedSeries.variable(K, a / am)), N)
    out = (BiSeries.constant(1, N, K) - u).inverse() * BiSeries.in_y(e_ay * p.l**p.a, N)
    if x0 is not None:
        out = out * BiSeries.in_x(series_exp(TruncatedSeries.variable(N, -p.q * x0)), K)
    return out


def egf_coefficients(
    family: str,
    p: Params,
    N: int,
    x0: RationalLike | None = None,
    K: int | None = None,
):
    """``n! [z^n]`` of a family's closed-form generating function.

    Bivariate families (``dgf_*``) return the grid ``n! k! [x^n y^k]``; their
    ``y`` exponent is the magnitude of a negative order, so ``p.k`` is ignored.
    """
    x = None if x0 is None else rational(x0)
    if family.endswith("_poly") and x is None:
        raise MissingEvaluationPoint(f"family {family!r} needs x0")
    if family in ("cauchy1", "cauchy1_poly"):
        return _cauchy_gf(p, N, 1, x).egf()
    if family in ("cauchy2", "cauchy2_poly"):
        return _cauchy_gf(p, N, -1, x).egf()
    if family in ("bernoulli", "bernoulli_poly"):
        return _bernoulli_gf(p, N, x).egf()
    if K is None:
        K = N
    if family == "dgf_cauchy1":
        return _dgf_cauchy(p, N, K, 1).egf()
    if family == "dgf_cauchy2":
        return _dgf_cauchy(p, N, K, -1).egf()
    if family in ("dgf_bernoulli", "dgf_bernoulli_poly"):
        return _dgf_bernoulli(p, N, K, x).egf()
    raise ValueError(f"unknown generating-function family {family!r}")
