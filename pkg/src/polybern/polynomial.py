"""Univariate polynomials over exact rationals.

Deliberately minimal: just enough ring structure (addition, multiplication,
scalar division, exact evaluation) for polynomials to serve as the
coefficient ring of a truncated series. There is no polynomial division.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Polynomial in x with ``Fraction`` coefficients, lowest power first.

    Canonical form: no trailing zero coefficients are stored; the zero
    polynomial stores an empty tuple. Instances are immutable, hashable,
    and compare equal to plain numbers when they are constant.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        cleaned = [Fraction(c) for c in self.coeffs]
        while cleaned and cleaned[-1] == 0:
            cleaned.pop()
        object.__setattr__(self, "coeffs", tuple(cleaned))

    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        return cls((Fraction(value),))

    @property
    def degree(self) -> int:
        """Degree, with the convention that the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of x^i (zero beyond the stored degree)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    @staticmethod
    def _coerce(value: object) -> "Polynomial | None":
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, (int, Fraction)):
            return Polynomial((Fraction(value),))
        return None

    def __add__(self, other: "Polynomial | Scalar") -> "Polynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Polynomial(
            tuple(self.coefficient(i) + o.coefficient(i) for i in range(n))
        )

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial | Scalar") -> "Polynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Scalar) -> "Polynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return Polynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "Polynomial":
        """Division by a nonzero scalar (or constant polynomial) only."""
        if isinstance(other, Polynomial):
            if other.degree > 0:
                raise ValueError("polynomial division is not supported")
            other = other.constant_term
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division of polynomial by zero")
        inv = Fraction(1, 1) / Fraction(other)
        return Polynomial(tuple(c * inv for c in self.coeffs))

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a non-negative integer")
        result = Polynomial((Fraction(1),))
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, point: "Polynomial | Scalar") -> "Polynomial | Fraction":
        """Evaluate exactly by Horner's rule.

        ``point`` may itself be a polynomial, in which case the result is the
        substituted polynomial (e.g. ``p(X + 1)`` shifts the argument).
        """
        result: Polynomial | Fraction = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * point + c
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return len(self.coeffs) <= 1 and self.constant_term == other
        return NotImplemented

    def __hash__(self) -> int:
        # Constant polynomials hash like their value so that x == y implies
        # hash(x) == hash(y) across Polynomial/Fraction/int.
        if len(self.coeffs) <= 1:
            return hash(self.constant_term)
        return hash(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i in reversed(range(len(self.coeffs))):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                base = "x" if i == 1 else f"x^{i}"
                term = base if mag == 1 else f"{mag}*{base}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


ZERO = Polynomial(())
ONE = Polynomial((Fraction(1),))
#: The indeterminate x, the usual entry point for symbolic computations.
X = Polynomial((Fraction(0), Fraction(1)))
