"""Truncated formal power series over exact rationals.

Coefficients are stored as ordinary (OGF) coefficients; `egf(n)` multiplies
by n! for the exponential view. Series are immutable and all operations are
pure, so values can be shared freely.
"""

from __future__ import annotations

from fractions import Fraction

from .seqcore import binom, factorial

RatLike = Fraction | int


class Egf:
    """A power series truncated at a fixed order, exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: list[RatLike] | tuple[RatLike, ...]):
        if not coeffs:
            raise ValueError("series needs at least the constant term")
        self.coeffs: tuple[Fraction, ...] = tuple(Fraction(c) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> Fraction:
        """Ordinary coefficient of t^n."""
        return self.coeffs[n]

    def egf(self, n: int) -> Fraction:
        """Exponential coefficient: n! times the ordinary coefficient."""
        return self.coeffs[n] * factorial(n)

    def truncate(self, order: int) -> "Egf":
        if order >= self.order:
            return self
        return Egf(self.coeffs[: order + 1])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Egf) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Egf({[str(c) for c in self.coeffs]})"

    @staticmethod
    def zero(order: int) -> "Egf":
        return Egf([Fraction(0)] * (order + 1))

    @staticmethod
    def one(order: int) -> "Egf":
        return Egf([Fraction(1)] + [Fraction(0)] * order)

    @staticmethod
    def identity(order: int) -> "Egf":
        """The series t."""
        c = [Fraction(0)] * (order + 1)
        if order >= 1:
            c[1] = Fraction(1)
        return Egf(c)


def _common_order(a: Egf, b: Egf) -> int:
    return min(a.order, b.order)


def add(a: Egf, b: Egf) -> Egf:
    n = _common_order(a, b)
    return Egf([a.coeffs[i] + b.coeffs[i] for i in range(n + 1)])


def sub(a: Egf, b: Egf) -> Egf:
    n = _common_order(a, b)
    return Egf([a.coeffs[i] - b.coeffs[i] for i in range(n + 1)])


def scale(a: Egf, c: RatLike) -> Egf:
    c = Fraction(c)
    return Egf([x * c for x in a.coeffs])


def mul(a: Egf, b: Egf) -> Egf:
    n = _common_order(a, b)
    out = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a.coeffs[: n + 1]):
        if ai == 0:
            continue
        for j in range(n + 1 - i):
            bj = b.coeffs[j]
            if bj:
                out[i + j] += ai * bj
    return Egf(out)


def inv(a: Egf) -> Egf:
    """Multiplicative inverse; requires a nonzero constant term."""
    if a.coeffs[0] == 0:
        raise ValueError("cannot invert a series with zero constant term")
    n = a.order
    out = [Fraction(0)] * (n + 1)
    out[0] = 1 / a.coeffs[0]
    for k in range(1, n + 1):
        s = Fraction(0)
        for i in range(1, k + 1):
            s += a.coeffs[i] * out[k - i]
        out[k] = -s / a.coeffs[0]
    return Egf(out)


def div(a: Egf, b: Egf) -> Egf:
    return mul(a, inv(b.truncate(_common_order(a, b))))


def exp_series(f: Egf) -> Egf:
    """exp(f) for f with zero constant term, via f' g = g' relation."""
    if f.coeffs[0] != 0:
        raise ValueError("exp_series requires zero constant term")
    n = f.order
    out = [Fraction(0)] * (n + 1)
    out[0] = Fraction(1)
    # (exp f)' = f' exp f  =>  k*out[k] = sum_{i=1..k} i*f_i*out[k-i]
    for k in range(1, n + 1):
        s = Fraction(0)
        for i in range(1, k + 1):
            if f.coeffs[i]:
                s += i * f.coeffs[i] * out[k - i]
        out[k] = s / k
    return Egf(out)


def log1p_series(f: Egf) -> Egf:
    """log(1 + f) for f with zero constant term."""
    if f.coeffs[0] != 0:
        raise ValueError("log1p_series requires zero constant term")
    n = f.order
    one_plus = Egf([Fraction(1)] + list(f.coeffs[1:]))
    # log(1+f)' = f'/(1+f); integrate coefficientwise.
    deriv = mul(Egf([(i + 1) * f.coeffs[i + 1] for i in range(n)] + [Fraction(0)]),
                inv(one_plus))
    out = [Fraction(0)] * (n + 1)
    for k in range(1, n + 1):
        out[k] = deriv.coeffs[k - 1] / k
    return Egf(out)


def compose(g: Egf, f: Egf) -> Egf:
    """g(f(t)) for inner series f with zero constant term (Horner)."""
    if f.coeffs[0] != 0:
        raise ValueError("compose requires inner series with zero constant term")
    n = _common_order(g, f)
    acc = Egf([g.coeffs[n]] + [Fraction(0)] * n)
    ftrunc = f.truncate(n)
    for k in range(n - 1, -1, -1):
        acc = mul(acc, ftrunc)
        acc = Egf([acc.coeffs[0] + g.coeffs[k]] + list(acc.coeffs[1:]))
    return acc


def polylog_series(p: int, f: Egf) -> Egf:
    """Li_p(f) = sum_{k>=1} f^k / k^p for f with zero constant term."""
    if p < 1:
        raise ValueError("polylog_series requires p >= 1")
    if f.coeffs[0] != 0:
        raise ValueError("polylog_series requires zero constant term")
    n = f.order
    out = Egf.zero(n)
    power = Egf.one(n)
    for k in range(1, n + 1):
        power = mul(power, f)
        out = add(out, scale(power, Fraction(1, k**p)))
    return out


def sqrt_one_minus_4t(order: int) -> Egf:
    """Binomial series for (1-4t)^(1/2)."""
    return Egf([binom(Fraction(1, 2), k) * (-4) ** k for k in range(order + 1)])


def exp_t(order: int, rate: RatLike = 1) -> Egf:
    """e^(rate*t)."""
    rate = Fraction(rate)
    return Egf([rate**n / factorial(n) for n in range(order + 1)])


def _stirling2_egf(order: int, k: int) -> Egf:
    em1 = sub(exp_t(order), Egf.one(order))
    power = Egf.one(order)
    for _ in range(k):
        power = mul(power, em1)
    return scale(power, Fraction(1, factorial(k)))


def _harmonic_ogf(order: int) -> Egf:
    t = Egf.identity(order)
    geom = inv(sub(Egf.one(order), t))
    return mul(scale(log1p_series(scale(t, -1)), -1), geom)


def _harmonic_sq_ogf(order: int) -> Egf:
    t = Egf.identity(order)
    geom = inv(sub(Egf.one(order), t))
    ln = log1p_series(scale(t, -1))
    return mul(add(polylog_series(2, t), mul(ln, ln)), geom)


def _central_binomial_harmonic_ogf(order: int) -> Egf:
    g = sqrt_one_minus_4t(order)
    # 2/g * ln((1+g)/(2g)); the argument has constant term 1.
    arg = mul(add(Egf.one(order), g), inv(scale(g, 2)))
    ln = log1p_series(sub(arg, Egf.one(order)))
    return mul(scale(inv(g), 2), ln)


def _euler_poly_egf(order: int, x: RatLike) -> Egf:
    denom = add(exp_t(order), Egf.one(order))
    return mul(scale(exp_t(order, x), 2), inv(denom))


def _poly_bernoulli_egf(order: int, p: int, x: RatLike) -> Egf:
    # Li_p(u)/u with u = 1-e^{-t}: sum_{k>=0} u^k/(k+1)^p, times e^{xt}.
    u = sub(Egf.one(order), exp_t(order, -1))
    out = Egf.zero(order)
    power = Egf.one(order)
    out = add(out, power)
    for k in range(1, order + 1):
        power = mul(power, u)
        out = add(out, scale(power, Fraction(1, (k + 1) ** p)))
    return mul(out, exp_t(order, x))


SERIES_NAMES = (
    "stirling2-egf",
    "harmonic-ogf",
    "harmonic-squared-ogf",
    "central-binomial-harmonic-ogf",
    "euler-poly-egf",
    "polybern",
)


def named_series(name: str, order: int, *, k: int = 1, p: int = 2,
                 x: RatLike = 0) -> Egf:
    """Catalog of the generating functions used by the identity suite.

    stirling2-egf            (e^t-1)^k / k!
    harmonic-ogf             -ln(1-t)/(1-t), coefficients H_n
    harmonic-squared-ogf     Li_2(t)/(1-t) + ln^2(1-t)/(1-t), coefficients H_n^2
    central-binomial-harmonic-ogf   coefficients C(2n,n) H_n
    euler-poly-egf           2 e^{xt}/(e^t+1), EGF coefficients E_n(x)
    polybern                 Li_p(1-e^{-t})/(1-e^{-t}) e^{xt}
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if name == "stirling2-egf":
        return _stirling2_egf(order, k)
    if name == "harmonic-ogf":
        return _harmonic_ogf(order)
    if name == "harmonic-squared-ogf":
        return _harmonic_sq_ogf(order)
    if name == "central-binomial-harmonic-ogf":
        return _central_binomial_harmonic_ogf(order)
    if name == "euler-poly-egf":
        return _euler_poly_egf(order, x)
    if name == "polybern":
        return _poly_bernoulli_egf(order, p, x)
    raise KeyError(f"unknown series {name!r}")
