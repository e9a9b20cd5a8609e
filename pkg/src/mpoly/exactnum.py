"""Exact rational scalars and the validated parameter bundle.

Every sequence value in the package is a :class:`fractions.Fraction`; it is
already canonical (positive denominator, reduced) and immutable, so it is
used directly as the ``Rational`` value type.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Iterable, Union

RationalLike = Union[int, str, Fraction]


class ParameterError(ValueError):
    """Base class for invalid parameter bundles."""


class ZeroParameter(ParameterError):
    pass


class ZeroOrder(ParameterError):
    pass


class ShiftNegative(ParameterError):
    pass


class UnsupportedParameter(ParameterError):
    pass


class PoleError(ZeroDivisionError):
    """An evaluation would divide by ``(a + i + m)**k`` with a zero base."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


def rational(value: RationalLike) -> Fraction:
    """Parse ints, Fractions and strings such as ``"-3/7"``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {value!r} to an exact rational")


def fmt(value: Fraction) -> str:
    """Canonical "num/den" rendering, denominator omitted when it is 1."""
    value = rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Params:
    """Parameters ``a, q, L`` of the generalized numbers, the signed order ``k``
    and the shift ``m``.

    ``l`` is always recomputed from ``L``.
    """

    a: int
    q: Fraction
    L: tuple[Fraction, ...]
    k: int
    m: int = 0
    l: Fraction = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "l", prod(self.L, start=Fraction(1)))

    def with_shift(self, m: int) -> "Params":
        return make_params(self.a, self.q, self.L, self.k, m)

    def with_order(self, k: int) -> "Params":
        return make_params(self.a, self.q, self.L, k, self.m)

    @property
    def prefactor(self) -> Fraction:
        """``(a+m)^k / a^k``; a pole when ``a + m == 0`` and ``k < 0``."""
        base = self.a + self.m
        if base == 0:
            if self.k > 0:
                return Fraction(0)
            raise PoleError(f"a + m = 0 with negative order k={self.k}", 0)
        return Fraction(base) ** self.k / Fraction(self.a) ** self.k

    @property
    def seed(self) -> Fraction:
        """Row-zero value ``l^a / a^k`` (``a^|k| l^a`` for negative order)."""
        return self.l ** self.a / Fraction(self.a) ** self.k

    def describe(self) -> dict:
        return {
            "a": self.a,
            "q": fmt(self.q),
            "L": [fmt(x) for x in self.L],
            "l": fmt(self.l),
            "k": self.k,
            "m": self.m,
        }


def make_params(
    a: int,
    q: RationalLike,
    L: Iterable[RationalLike] | RationalLike,
    k: int,
    m: int = 0,
) -> Params:
    if isinstance(L, (int, str, Fraction)):
        L = [L]
    Ls = tuple(rational(x) for x in L)
    if isinstance(a, Fraction):
        if a.denominator != 1:
            raise UnsupportedParameter("a must be an integer in exact mode")
        a = a.numerator
    qq = rational(q)
    if a == 0 or qq == 0 or not Ls or any(x == 0 for x in Ls):
        raise ZeroParameter("a, q and every l_i must be nonzero (and L nonempty)")
    if k == 0:
        raise ZeroOrder("order k must be nonzero")
    if m < 0:
        raise ShiftNegative("shift m must be nonnegative")
    return Params(int(a), qq, Ls, int(k), int(m))


def classic(k: int = 1, m: int = 0) -> Params:
    """``a = q = l = 1``."""
    return make_params(1, 1, [1], k, m)


def pole_check(p: Params, i: int) -> bool:
    """True iff the term ``1/(a+i+m)^k`` is singular."""
    return p.k > 0 and p.a + i + p.m == 0


def require_pole_free(p: Params, n: int, *, offset: int = 0) -> None:
    """Raise :class:`PoleError` if any ``0 <= i <= n`` hits a pole."""
    if p.k < 0 and p.a + p.m == 0:
        raise PoleError(f"a + m = 0 with negative order k={p.k}", 0)
    for i in range(offset, n + 1):
        if pole_check(p, i):
            raise PoleError(f"pole at a + i + m = 0 (i={i}, a={p.a}, m={p.m})", i)


def inv_pow(base: RationalLike, k: int) -> Fraction:
    """``1 / base**k`` with signed ``k``; a zero base with ``k < 0`` gives 0."""
    base = Fraction(base)
    if k < 0:
        return base ** (-k)
    if base == 0:
        raise PoleError("zero base raised to a positive order in a denominator", 0)
    return 1 / base**k
