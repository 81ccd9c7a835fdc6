"""Poly-Bernoulli numbers and polynomials via exact truncated series.

The EGF Li_p(1-e^{-t})/(1-e^{-t}) e^{xt} is expanded once per (p, x) pair
and cached; the coefficient list only ever grows.
"""

from __future__ import annotations

from fractions import Fraction

from . import fps
from .seqcore import factorial, stirling2

_CACHE: dict[tuple[int, Fraction], list[Fraction]] = {}


def _series_coeffs(p: int, x: Fraction, order: int) -> list[Fraction]:
    key = (p, x)
    have = _CACHE.get(key)
    if have is None or len(have) <= order:
        series = fps.named_series("polybern", max(order, 1), p=p, x=x)
        _CACHE[key] = [series.egf(n) for n in range(series.order + 1)]
    return _CACHE[key]


def poly_bernoulli(n: int, p: int, x=0) -> Fraction:
    """n-th EGF coefficient of Li_p(1-e^{-t})/(1-e^{-t}) e^{xt}."""
    if n < 0 or p < 1:
        raise ValueError("poly_bernoulli requires n >= 0 and p >= 1")
    return _series_coeffs(p, Fraction(x), n)[n]


def dibernoulli(n: int) -> Fraction:
    """Di-Bernoulli number (polylog order 2, x = 0)."""
    return poly_bernoulli(n, 2, 0)


def dibernoulli_at_one(n: int) -> Fraction:
    return poly_bernoulli(n, 2, 1)


def stirling_sum_oracle(n: int, p: int) -> Fraction:
    """Cross-check route for the x = 0 numbers:
    sum_m (-1)^(m+n) m! {n,m} / (m+1)^p.

    Kept as a test oracle only; the series route above is the primary
    computation.
    """
    if n < 0 or p < 1:
        raise ValueError("oracle requires n >= 0 and p >= 1")
    return sum(
        (Fraction((-1) ** (m + n) * factorial(m) * stirling2(n, m),
                  (m + 1) ** p)
         for m in range(n + 1)),
        Fraction(0),
    )
