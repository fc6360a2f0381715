"""Poly-Bernoulli numbers and polynomials of the second kind.

The central family b_n^(k)(x) is read off the exponential generating function

    Li_k(1 - e^(-t)) / log(1+t) * (1+t)^x,

where Li_k is the polylogarithm series sum_{m>=1} u^m / m^k for any integer
k (non-positive k just means positive integer weights m^|k|). Three routes
compute the family:

* ``poly_b2nd_gf`` — the truncated-series route, used as the oracle;
* ``poly_b2nd_theorem1`` — a closed sum over classical Bernoulli numbers,
  valid at k = 2;
* ``poly_b2nd_theorem2`` — a closed sum with Stirling-number weights, valid
  for every integer k.

``theorem3_rhs`` and ``theorem4_rhs`` provide the right-hand sides of the
forward-difference and argument-addition identities. ``verify_identity``
checks any of the built-in identities point by point with exact comparison
and returns a report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Union

from .bernoulli import (
    bernoulli2nd_poly,
    bernoulli_numbers,
    higher_order_bernoulli_poly,
)
from .combinatorics import binomial, falling_factorial_at, stirling1, stirling2
from .polynomial import Polynomial, X
from .series import (
    TruncatedSeries,
    constant_series,
    exp_series,
    log1p_series,
    pow1p_series,
    t_series,
)

Scalar = Union[int, Fraction]
Value = Union[Fraction, Polynomial]

GF_ROUTE = "gf-oracle"
THEOREM1_ROUTE = "theorem1"
THEOREM2_ROUTE = "theorem2"


@dataclass(frozen=True)
class PolyBernoulliResult:
    """One computed value b_n^(k)(x) together with the route that produced it."""

    n: int
    k: int
    value: Value
    route: str


def polylog_series(k: int, inner: TruncatedSeries) -> TruncatedSeries:
    """Li_k applied to a series with zero constant term.

    Returns sum_{m=1}^{N} inner^m / m^k truncated at N = inner.order; terms
    with m > N cannot contribute because inner has positive valuation.
    """
    n = inner.order
    weights: list[object] = [Fraction(0)]
    for m in range(1, n + 1):
        weights.append(Fraction(m) ** (-k))
    outer = TruncatedSeries.from_coeffs(weights, n)
    if inner.ring != outer.ring:
        outer = outer.to_polynomial_ring()
    return outer.compose(inner)


@lru_cache(maxsize=None)
def _one_minus_exp_neg(order: int) -> TruncatedSeries:
    return constant_series(Fraction(1), order) - exp_series(Fraction(-1), order)


@lru_cache(maxsize=None)
def _gf_values(n_max: int, k: int, x: Value) -> tuple[Value, ...]:
    order = n_max + 1
    li = polylog_series(k, _one_minus_exp_neg(order))
    quotient = li.div_valuation(log1p_series(order), 1)  # order n_max
    if isinstance(x, Polynomial):
        series = quotient.to_polynomial_ring() * pow1p_series(x, n_max)
    elif x != 0:
        series = quotient * pow1p_series(x, n_max)
    else:
        series = quotient
    return tuple(series.egf_coefficient(n) for n in range(n_max + 1))


def poly_b2nd_values(n_max: int, k: int, x: Scalar | Polynomial = 0) -> tuple[Value, ...]:
    """b_0^(k)(x)..b_{n_max}^(k)(x) via the generating-function route."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if not isinstance(x, Polynomial):
        x = Fraction(x)
    return _gf_values(n_max, k, x)


def poly_b2nd_gf(
    n_max: int,
    k: int,
    x: Scalar | Polynomial = 0,
    verify: bool = False,
) -> list[PolyBernoulliResult]:
    """Generating-function table of b_n^(k)(x) for n = 0..n_max.

    With ``verify=True`` every entry is recomputed through the closed
    all-k formula and a mismatch raises — the two routes must agree exactly.
    """
    values = poly_b2nd_values(n_max, k, x)
    if verify:
        for n, value in enumerate(values):
            alt = poly_b2nd_theorem2(n, k, x).value
            if alt != value:
                raise ArithmeticError(
                    f"route disagreement at n={n}, k={k}: gf={value}, closed={alt}"
                )
    return [PolyBernoulliResult(n, k, v, GF_ROUTE) for n, v in enumerate(values)]


@lru_cache(maxsize=None)
def _b2nd_at(m: int, x: Value) -> Value:
    return bernoulli2nd_poly(m)(x)


def _normalize_point(x: Scalar | Polynomial) -> Value:
    return x if isinstance(x, Polynomial) else Fraction(x)


def poly_b2nd_theorem1(n: int, x: Scalar | Polynomial = 0) -> PolyBernoulliResult:
    """The k = 2 closed sum: sum_l C(n, l) B_l b_{n-l}(x) / (l+1)."""
    if n < 0:
        raise ValueError("index must be >= 0")
    x = _normalize_point(x)
    classical = bernoulli_numbers(n)
    total: Value = Fraction(0)
    for l in range(n + 1):
        total = total + binomial(n, l) * classical[l] * _b2nd_at(n - l, x) / (l + 1)
    return PolyBernoulliResult(n, 2, total, THEOREM1_ROUTE)


@lru_cache(maxsize=None)
def _stirling_weight(l: int, k: int) -> Fraction:
    """sum_{p=1}^{l+1} (-1)^(p+l+1) p! S2(l+1, p) / (p^k (l+1))."""
    total = Fraction(0)
    for p in range(1, l + 2):
        term = (
            Fraction(math.factorial(p))
            * stirling2(l + 1, p)
            * Fraction(p) ** (-k)
            / (l + 1)
        )
        if (p + l + 1) % 2:
            term = -term
        total += term
    return total


def poly_b2nd_theorem2(n: int, k: int, x: Scalar | Polynomial = 0) -> PolyBernoulliResult:
    """The all-k closed sum with Stirling weights applied to b_{n-l}(x)."""
    if n < 0:
        raise ValueError("index must be >= 0")
    x = _normalize_point(x)
    total: Value = Fraction(0)
    for l in range(n + 1):
        total = total + binomial(n, l) * _stirling_weight(l, k) * _b2nd_at(n - l, x)
    return PolyBernoulliResult(n, k, total, THEOREM2_ROUTE)


def theorem3_rhs(n: int, k: int, x: Scalar | Polynomial = 0) -> Value:
    """Double sum equal to the forward difference b_n^(k)(x+1) - b_n^(k)(x).

    The identity's domain is n >= 1; n = 0 raises rather than silently
    extending it.
    """
    if n < 1:
        raise ValueError("thm3 requires n >= 1")
    x = _normalize_point(x)
    total: Value = Fraction(0)
    for p in range(1, n + 1):
        inner = Fraction(0)
        for m in range(1, p + 1):
            term = Fraction(math.factorial(m)) * stirling2(p, m) * Fraction(m) ** (-k)
            if (m + p) % 2:
                term = -term
            inner += term
        total = total + binomial(n, p) * inner * _b2nd_at(n - p, x)
    return total


def _addition_sum(table_x: tuple[Value, ...], n: int, y: Scalar) -> Value:
    total: Value = Fraction(0)
    for l in range(n + 1):
        total = total + binomial(n, l) * table_x[n - l] * falling_factorial_at(y, l)
    return total


def theorem4_rhs(n: int, k: int, x: Scalar, y: Scalar) -> Value:
    """sum_l C(n, l) b_{n-l}^(k)(x) (y)_l — equals b_n^(k)(x+y)."""
    if n < 0:
        raise ValueError("index must be >= 0")
    return _addition_sum(poly_b2nd_values(n, k, x), n, y)


# -- identity verification -----------------------------------------------


@dataclass
class VerificationReport:
    """Outcome of checking one identity over a finite parameter range."""

    identity: str
    range_spec: dict[str, str]
    checked: list[dict] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.checked)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    @property
    def first_counterexample(self) -> dict | None:
        return self.failures[0] if self.failures else None


Point = tuple[dict, object, object]
Checker = Callable[[int, "tuple[int, ...] | None", "tuple[Value, ...] | None"], Iterator[Point]]


@dataclass(frozen=True)
class IdentitySpec:
    name: str
    summary: str
    checker: Checker
    takes_k: bool = False
    takes_x: bool = False
    default_ks: tuple[int, ...] | None = None
    default_xs: tuple[Value, ...] | None = None


_DEFAULT_POINTS: tuple[Value, ...] = (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2))


def _point_label(x: Value) -> str:
    return "x" if isinstance(x, Polynomial) and x == X else str(x)


def _sorted_points(xs: Iterable[Value]) -> list[Value]:
    numeric = sorted(x for x in xs if not isinstance(x, Polynomial))
    symbolic = [x for x in xs if isinstance(x, Polynomial)]
    return numeric + symbolic


def _check_thm1(n_max, ks, xs):
    points = _sorted_points(xs if xs is not None else _DEFAULT_POINTS + (X,))
    for n in range(n_max + 1):
        for x in points:
            lhs = poly_b2nd_theorem1(n, x).value
            rhs = poly_b2nd_values(n_max, 2, x)[n]
            yield {"n": n, "x": _point_label(x)}, lhs, rhs


def _check_thm2(n_max, ks, xs):
    ks = ks if ks is not None else tuple(range(-5, 6))
    points = _sorted_points(xs if xs is not None else _DEFAULT_POINTS + (X,))
    for n in range(n_max + 1):
        for k in sorted(ks):
            for x in points:
                lhs = poly_b2nd_theorem2(n, k, x).value
                rhs = poly_b2nd_values(n_max, k, x)[n]
                yield {"n": n, "k": k, "x": _point_label(x)}, lhs, rhs


def _check_thm3(n_max, ks, xs):
    ks = ks if ks is not None else tuple(range(-3, 4))
    points = _sorted_points(
        xs if xs is not None else (Fraction(0), Fraction(1, 2), Fraction(-2))
    )
    for n in range(1, n_max + 1):
        for k in sorted(ks):
            for x in points:
                shifted = x + 1
                lhs = (
                    poly_b2nd_values(n_max, k, shifted)[n]
                    - poly_b2nd_values(n_max, k, x)[n]
                )
                rhs = theorem3_rhs(n, k, x)
                yield {"n": n, "k": k, "x": _point_label(x)}, lhs, rhs


def _check_thm4(n_max, ks, xs):
    # Equality on an (n+1) x (n+1) grid of distinct rational points pins the
    # two-variable polynomial identity (degree <= n in each variable).
    ks = ks if ks is not None else tuple(range(-2, 4))
    for n in range(n_max + 1):
        for k in sorted(ks):
            for i in range(n + 1):
                x = Fraction(i, 3)
                table_x = poly_b2nd_values(n_max, k, x)
                for j in range(n + 1):
                    y = Fraction(j, 5)
                    lhs = poly_b2nd_values(n_max, k, x + y)[n]
                    rhs = _addition_sum(table_x, n, y)
                    yield {"n": n, "k": k, "x": str(x), "y": str(y)}, lhs, rhs


def _check_eq9(n_max, ks, xs):
    for n in range(n_max + 1):
        lhs = poly_b2nd_values(n_max, 1, X)[n]
        rhs = bernoulli2nd_poly(n)
        yield {"n": n, "x": "x"}, lhs, rhs


def _check_eq2(n_max, ks, xs):
    # Independent route: build t/log(1+t) * (1+t)^x directly over the
    # polynomial coefficient ring, without going through the polylog.
    order = n_max + 1
    quotient = t_series(order).div_valuation(log1p_series(order), 1)
    series = quotient.to_polynomial_ring() * pow1p_series(X, n_max)
    for n in range(n_max + 1):
        yield {"n": n, "x": "x"}, bernoulli2nd_poly(n), series.egf_coefficient(n)


def _check_b_equals_higher_order(n_max, ks, xs):
    for n in range(n_max + 1):
        lhs = bernoulli2nd_poly(n)
        rhs = higher_order_bernoulli_poly(n, n, X + 1)
        yield {"n": n}, lhs, rhs


def _check_stirling_inversion(n_max, ks, xs):
    for n in range(n_max + 1):
        for m in range(n + 1):
            total = Fraction(0)
            for l in range(m, n + 1):
                total += stirling2(n, l) * stirling1(l, m)
            yield {"n": n, "m": m}, total, Fraction(1 if n == m else 0)


IDENTITIES: dict[str, IdentitySpec] = {
    spec.name: spec
    for spec in (
        IdentitySpec(
            "thm1",
            "k=2 closed formula (classical Bernoulli weights) vs generating function",
            _check_thm1,
            takes_x=True,
        ),
        IdentitySpec(
            "thm2",
            "all-k closed formula (Stirling weights) vs generating function",
            _check_thm2,
            takes_k=True,
            takes_x=True,
            default_ks=tuple(range(-5, 6)),
        ),
        IdentitySpec(
            "thm3",
            "forward difference b(x+1)-b(x) vs its double-sum expansion",
            _check_thm3,
            takes_k=True,
            takes_x=True,
            default_ks=tuple(range(-3, 4)),
            default_xs=(Fraction(0), Fraction(1, 2), Fraction(-2)),
        ),
        IdentitySpec(
            "thm4",
            "argument-addition formula on a distinct-rational evaluation grid",
            _check_thm4,
            takes_k=True,
            default_ks=tuple(range(-2, 4)),
        ),
        IdentitySpec(
            "eq9",
            "k=1 table reduces to the Bernoulli polynomials of the second kind",
            _check_eq9,
        ),
        IdentitySpec(
            "eq2",
            "basis expansion of b_n(x) vs the generating function, symbolically",
            _check_eq2,
        ),
        IdentitySpec(
            "b-equals-higher-order",
            "b_n(x) equals the order-n higher-order Bernoulli polynomial at x+1",
            _check_b_equals_higher_order,
        ),
        IdentitySpec(
            "stirling-inversion",
            "composition of the two Stirling triangles is the identity",
            _check_stirling_inversion,
        ),
    )
}


def _describe_range(
    spec: IdentitySpec,
    n_max: int,
    ks: tuple[int, ...] | None,
    xs: tuple[Value, ...] | None,
) -> dict[str, str]:
    desc = {"n_max": str(n_max)}
    if spec.takes_k or spec.default_ks is not None:
        used = ks if ks is not None else spec.default_ks
        if used is not None:
            desc["k"] = ",".join(str(k) for k in sorted(used))
    if spec.takes_x:
        if xs is not None:
            desc["x"] = ",".join(_point_label(x) for x in _sorted_points(xs))
        elif spec.default_xs is not None:
            desc["x"] = ",".join(_point_label(x) for x in _sorted_points(spec.default_xs))
        else:
            desc["x"] = ",".join(
                _point_label(x) for x in _sorted_points(_DEFAULT_POINTS + (X,))
            )
    if spec.name == "thm4":
        desc["grid"] = "(n+1)x(n+1) distinct rationals per n"
    return desc


def verify_identity(
    name: str,
    n_max: int,
    ks: Iterable[int] | None = None,
    xs: Iterable[Scalar | Polynomial] | None = None,
) -> VerificationReport:
    """Check one built-in identity exactly over a finite range.

    ``ks``/``xs`` restrict the default parameter sets where the identity
    accepts them; passing them for an identity that has no such parameter is
    an error. Points are reported in lexicographic (n, k, x, y) order.
    """
    spec = IDENTITIES.get(name)
    if spec is None:
        raise ValueError(f"unknown identity name {name!r}")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    ks_t = tuple(ks) if ks is not None else None
    xs_t = tuple(_normalize_point(x) for x in xs) if xs is not None else None
    if ks_t is not None and not spec.takes_k:
        raise ValueError(f"identity {name!r} does not take a k range")
    if xs_t is not None and not spec.takes_x:
        raise ValueError(f"identity {name!r} does not take x points")
    report = VerificationReport(name, _describe_range(spec, n_max, ks_t, xs_t))
    for params, lhs, rhs in spec.checker(n_max, ks_t, xs_t):
        ok = lhs == rhs
        report.checked.append({"params": params, "ok": ok})
        if not ok:
            report.failures.append(
                {"params": params, "lhs": str(lhs), "rhs": str(rhs)}
            )
    return report
