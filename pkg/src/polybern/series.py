"""Exact truncated formal power series.

A series of order N stores the coefficients c_0..c_N of
``sum_j c_j t^j + O(t^(N+1))`` over one of two coefficient rings:
``Fraction`` (ring tag ``"rational"``) or :class:`~polybern.polynomial.Polynomial`
(ring tag ``"polynomial"``). Everything is exact; no operation ever reads or
produces a coefficient beyond index N, and binary operations demand that both
operands share the same order and ring — mismatches raise instead of silently
re-truncating.

Coefficients can be read in two conventions: ``coeffs[n]`` is the raw t^n
coefficient, while :meth:`TruncatedSeries.egf_coefficient` returns n!*c_n,
the value attached to t^n/n! in an exponential generating function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .polynomial import Polynomial

Coeff = Union[Fraction, Polynomial]

RATIONAL = "rational"
POLYNOMIAL = "polynomial"


def _normalize(coeffs: Iterable[object]) -> tuple[tuple[Coeff, ...], str]:
    values = list(coeffs)
    if not values:
        raise ValueError("a truncated series needs at least the constant coefficient")
    if any(isinstance(c, Polynomial) for c in values):
        lifted = tuple(
            c if isinstance(c, Polynomial) else Polynomial.constant(Fraction(c))
            for c in values
        )
        return lifted, POLYNOMIAL
    return tuple(Fraction(c) for c in values), RATIONAL


@dataclass(frozen=True)
class TruncatedSeries:
    """Immutable fixed-order power series over an exact coefficient ring."""

    coeffs: tuple[Coeff, ...]
    ring: str = field(init=False)

    def __post_init__(self) -> None:
        coeffs, ring = _normalize(self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "ring", ring)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[object], order: int) -> "TruncatedSeries":
        if len(coeffs) != order + 1:
            raise ValueError("coefficient count must equal order+1")
        return cls(tuple(coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    # -- ring plumbing -------------------------------------------------

    def _zero(self) -> Coeff:
        return Polynomial(()) if self.ring == POLYNOMIAL else Fraction(0)

    def _embed(self, value: object) -> Coeff:
        if self.ring == POLYNOMIAL and not isinstance(value, Polynomial):
            return Polynomial.constant(Fraction(value))
        return value  # type: ignore[return-value]

    def _check_compatible(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                f"series order mismatch: {self.order} vs {other.order}"
            )
        if self.ring != other.ring:
            raise ValueError(
                f"series coefficient ring mismatch: {self.ring} vs {other.ring}"
            )

    def to_polynomial_ring(self) -> "TruncatedSeries":
        """The same series with every coefficient lifted to a ``Polynomial``."""
        if self.ring == POLYNOMIAL:
            return self
        return TruncatedSeries(tuple(Polynomial.constant(c) for c in self.coeffs))

    def truncate(self, order: int) -> "TruncatedSeries":
        """Drop coefficients above ``order`` (which must not exceed self.order)."""
        if order < 0 or order > self.order:
            raise ValueError("truncation order out of range")
        return TruncatedSeries(self.coeffs[: order + 1])

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_compatible(other)
        return TruncatedSeries(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_compatible(other)
        return TruncatedSeries(
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other: object) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(tuple(c * Fraction(other) for c in self.coeffs))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_compatible(other)
        n = self.order
        out = [self._zero() for _ in range(n + 1)]
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b == 0:
                    continue
                out[i + j] = out[i + j] + a * b
        return TruncatedSeries(tuple(out))

    def __rmul__(self, other: object) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series exponent must be a non-negative integer")
        result = constant_series(self._embed(1), self.order)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _unit_inverse_factor(self) -> Coeff:
        """Multiplicative inverse of the constant term, for forward substitution."""
        c0 = self.coeffs[0]
        if self.ring == RATIONAL:
            if c0 == 0:
                raise ValueError("denominator not a unit; use div_valuation")
            return Fraction(1) / c0
        assert isinstance(c0, Polynomial)
        if c0.is_zero:
            raise ValueError("denominator not a unit; use div_valuation")
        if c0.degree > 0:
            raise ValueError(
                "denominator constant term is not invertible in the polynomial ring"
            )
        return Polynomial.constant(Fraction(1) / c0.constant_term)

    def div_unit(self, den: "TruncatedSeries") -> "TruncatedSeries":
        """Quotient by a series with invertible constant term.

        Forward substitution: q_j = (num_j - sum_{i<j} q_i den_{j-i}) / den_0.
        """
        if not isinstance(den, TruncatedSeries):
            raise TypeError("denominator must be a TruncatedSeries")
        self._check_compatible(den)
        inv = den._unit_inverse_factor()
        n = self.order
        q: list[Coeff] = []
        for j in range(n + 1):
            acc = self.coeffs[j]
            for i in range(j):
                acc = acc - q[i] * den.coeffs[j - i]
            q.append(acc * inv)
        return TruncatedSeries(tuple(q))

    def div_valuation(self, den: "TruncatedSeries", v: int) -> "TruncatedSeries":
        """Quotient of two series that both vanish to order ``v``.

        Both operands must have c_0 = ... = c_{v-1} = 0 and the denominator
        must have a nonzero coefficient at index v. The result has order
        ``self.order - v``.
        """
        if not isinstance(den, TruncatedSeries):
            raise TypeError("denominator must be a TruncatedSeries")
        self._check_compatible(den)
        if v < 0:
            raise ValueError("valuation must be non-negative")
        if v > self.order:
            raise ValueError(
                f"valuation {v} exceeds series order {self.order}"
            )
        for i in range(v):
            if self.coeffs[i] != 0:
                raise ValueError(
                    f"numerator has nonzero coefficient at index {i}, "
                    f"expected valuation {v}"
                )
            if den.coeffs[i] != 0:
                raise ValueError(
                    f"denominator has nonzero coefficient at index {i}, "
                    f"expected valuation {v}"
                )
        if den.coeffs[v] == 0:
            raise ValueError(
                f"denominator coefficient at index {v} is zero; not a unit after shift"
            )
        num = TruncatedSeries(self.coeffs[v:])
        return num.div_unit(TruncatedSeries(den.coeffs[v:]))

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Coefficients of self(inner(t)), truncated at the common order.

        ``inner`` must have zero constant term; evaluation is Horner's rule
        over truncated series.
        """
        if not isinstance(inner, TruncatedSeries):
            raise TypeError("inner must be a TruncatedSeries")
        self._check_compatible(inner)
        if inner.coeffs[0] != 0:
            raise ValueError("composition requires inner series with zero constant term")
        acc = constant_series(self.coeffs[-1], self.order)
        for j in range(self.order - 1, -1, -1):
            acc = acc * inner + constant_series(self.coeffs[j], self.order)
        return acc

    # -- coefficient access ---------------------------------------------

    def egf_coefficient(self, n: int) -> Coeff:
        """n! * c_n, the coefficient attached to t^n/n!."""
        if n < 0 or n > self.order:
            raise ValueError(f"coefficient index {n} out of range 0..{self.order}")
        return math.factorial(n) * self.coeffs[n]

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if all vanish."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None


# -- stock series -------------------------------------------------------


def constant_series(value: object, order: int) -> TruncatedSeries:
    """The constant ``value`` as a series of the given order."""
    if order < 0:
        raise ValueError("order must be non-negative")
    return TruncatedSeries((value,) + (Fraction(0),) * order)


def t_series(order: int) -> TruncatedSeries:
    """The identity series t (just [0, 1, 0, ...] at the given order)."""
    if order < 0:
        raise ValueError("order must be non-negative")
    coeffs = [Fraction(0)] * (order + 1)
    if order >= 1:
        coeffs[1] = Fraction(1)
    return TruncatedSeries(tuple(coeffs))


def exp_series(a: object, order: int) -> TruncatedSeries:
    """e^(a*t): coefficients a^j / j!.

    ``a`` may be a rational or a :class:`Polynomial` (giving e.g. e^(x*t)
    over the polynomial coefficient ring).
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    if not isinstance(a, Polynomial):
        a = Fraction(a)
    coeffs: list[object] = [Polynomial((Fraction(1),)) if isinstance(a, Polynomial) else Fraction(1)]
    for j in range(1, order + 1):
        coeffs.append(coeffs[-1] * a / j)
    return TruncatedSeries(tuple(coeffs))


def log1p_series(order: int) -> TruncatedSeries:
    """log(1+t): coefficients [0, 1, -1/2, 1/3, -1/4, ...]."""
    if order < 0:
        raise ValueError("order must be non-negative")
    coeffs = [Fraction(0)]
    for j in range(1, order + 1):
        coeffs.append(Fraction((-1) ** (j + 1), j))
    return TruncatedSeries(tuple(coeffs))


def pow1p_series(x: object, order: int) -> TruncatedSeries:
    """(1+t)^x: coefficients (x)_j / j! with (x)_j the falling factorial.

    A rational ``x`` yields a rational-ring series; a :class:`Polynomial`
    ``x`` (typically the indeterminate) yields a polynomial-ring series.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    if not isinstance(x, Polynomial):
        x = Fraction(x)
    coeffs: list[object] = [Polynomial((Fraction(1),)) if isinstance(x, Polynomial) else Fraction(1)]
    for j in range(1, order + 1):
        # (x)_j / j! = (x)_{j-1}/(j-1)! * (x - (j-1)) / j
        coeffs.append(coeffs[-1] * (x - (j - 1)) / j)
    return TruncatedSeries(tuple(coeffs))
