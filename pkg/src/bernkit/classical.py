"""Bernoulli and Euler numbers/polynomials, Cauchy numbers of the first
kind, and the harmonic-weighted Stirling transform.

Bernoulli convention is fixed at B_1 = -1/2 throughout.
"""

from __future__ import annotations

from fractions import Fraction

from .seqcore import binom, binom_int, factorial, harmonic, stirling1, stirling2


class Poly:
    """Dense polynomial over exact rationals; index i is the x^i coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [Fraction(0)]
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if i <= self.degree else Fraction(0)

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Poly") -> "Poly":
        n = max(self.degree, other.degree)
        return Poly([self.coeff(i) + other.coeff(i) for i in range(n + 1)])

    def __sub__(self, other: "Poly") -> "Poly":
        n = max(self.degree, other.degree)
        return Poly([self.coeff(i) - other.coeff(i) for i in range(n + 1)])

    def __mul__(self, other: "Poly") -> "Poly":
        out = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        return Poly([a * c for a in self.coeffs])

    def integral_01(self) -> Fraction:
        """Definite integral over [0, 1]."""
        return sum((c / (i + 1) for i, c in enumerate(self.coeffs)), Fraction(0))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"


_BERN: list[Fraction] = [Fraction(1)]
_EULER_POLYS: list[Poly] = [Poly([1])]


def bernoulli(n: int) -> Fraction:
    """B_n via the defining recurrence sum_j C(n+1,j) B_j = 0; B_1 = -1/2."""
    if n < 0:
        raise ValueError("bernoulli requires n >= 0")
    while len(_BERN) <= n:
        m = len(_BERN)
        s = sum(binom_int(m + 1, j) * _BERN[j] for j in range(m))
        _BERN.append(-s / (m + 1))
    return _BERN[n]


def worpitzky_bernoulli(n: int) -> Fraction:
    """B_n from the alternating Stirling sum sum_k (-1)^k {n,k} k!/(k+1)."""
    if n < 1:
        raise ValueError("worpitzky_bernoulli requires n >= 1")
    return sum(
        ((-1) ** k * stirling2(n, k) * Fraction(factorial(k), k + 1)
         for k in range(1, n + 1)),
        Fraction(0),
    )


def bernoulli_poly(n: int) -> Poly:
    """B_n(x) = sum_j C(n,j) B_j x^(n-j)."""
    if n < 0:
        raise ValueError("bernoulli_poly requires n >= 0")
    coeffs = [Fraction(0)] * (n + 1)
    for j in range(n + 1):
        coeffs[n - j] = binom_int(n, j) * bernoulli(j)
    return Poly(coeffs)


def bernoulli_poly_at(n: int, x) -> Fraction:
    return bernoulli_poly(n)(x)


def euler_poly(n: int) -> Poly:
    """E_n(x) by the recurrence E_n(x) = x^n - (1/2) sum_{j<n} C(n,j) E_j(x)."""
    if n < 0:
        raise ValueError("euler_poly requires n >= 0")
    while len(_EULER_POLYS) <= n:
        m = len(_EULER_POLYS)
        xn = Poly([Fraction(0)] * m + [Fraction(1)])
        acc = Poly([0])
        for j in range(m):
            acc = acc + _EULER_POLYS[j].scale(binom_int(m, j))
        _EULER_POLYS.append(xn - acc.scale(Fraction(1, 2)))
    return _EULER_POLYS[n]


def euler_number(n: int) -> Fraction:
    """E_n = E_n(0)."""
    return euler_poly(n)(0)


def euler_at_one(n: int) -> Fraction:
    return euler_poly(n)(1)


def cauchy1(k: int) -> Fraction:
    """Cauchy number of the first kind via the signed Stirling sum."""
    if k < 0:
        raise ValueError("cauchy1 requires k >= 0")
    if k == 0:
        return Fraction(1)
    return sum(
        (stirling1(k, j) * Fraction((-1) ** (k - j), j + 1)
         for j in range(1, k + 1)),
        Fraction(0),
    )


def cauchy1_integral(k: int) -> Fraction:
    """Oracle route: k! times the integral of binom(x,k) over [0,1]."""
    if k < 0:
        raise ValueError("cauchy1_integral requires k >= 0")
    poly = Poly([1])
    for i in range(k):
        poly = poly * Poly([-i, 1])
    return poly.integral_01()


def hw(n: int, x) -> Fraction:
    """Harmonic-weighted Stirling transform sum_k {n,k} binom(x,k) k! H_k."""
    if n < 1:
        raise ValueError("hw requires n >= 1")
    x = Fraction(x)
    return sum(
        (stirling2(n, k) * binom(x, k) * factorial(k) * harmonic(k)
         for k in range(1, n + 1)),
        Fraction(0),
    )


def hw_closed_integer(n: int, m: int) -> Fraction:
    """Closed form of hw(n, m) at positive integer m."""
    if n < 1 or m < 1:
        raise ValueError("hw_closed_integer requires n, m >= 1")
    return harmonic(m) * Fraction(m) ** n - sum(
        (Fraction((m - j) ** n, j) for j in range(1, m + 1)), Fraction(0)
    )
