"""Catalog of the verified identities and the range-sweep harness.

Each catalog entry carries an explicit case generator (the domain predicate
made concrete), a left side computed by direct summation over the base
sequences, and a right side computed through the cached closed forms. The
two sides share only seqcore primitives, so a transcription slip on either
side surfaces as a sweep failure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .classical import (bernoulli, bernoulli_poly_at, cauchy1, euler_number,
                        euler_poly, hw)
from .polybern import dibernoulli, dibernoulli_at_one
from .seqcore import (binom, binom_int, factorial, harmonic, harmonic_gen,
                      stirling1, stirling2)

Params = dict[str, int | Fraction]


class IndeterminateRHS(ArithmeticError):
    """Raised when a right side is of the form 0 * B_0/0 (MAIN at j = n)."""


@dataclass(frozen=True)
class IdentityCase:
    id: str
    params: Params


@dataclass
class IdentityReport:
    id: str
    domain: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class SweepBounds:
    """Parameter ranges for a verification sweep."""
    n_max: int = 40
    m_max: int = 20
    j_min: int = 0
    j_max: int | None = None
    rand_count: int = 10
    seed: int = 20240826
    include_j_equals_n: bool = False

    def j_range(self, lo: int, hi: int) -> range:
        lo = max(lo, self.j_min)
        if self.j_max is not None:
            hi = min(hi, self.j_max)
        return range(lo, hi + 1)


def _rng(bounds: SweepBounds, id: str) -> random.Random:
    return random.Random(f"{bounds.seed}:{id}")


def _rand_rational(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-24, 24), rng.randint(1, 12))
        if q != 0 or not nonzero:
            return q


def _calB(n: int, j: int) -> Fraction:
    """Direct summation of sum_k (-1)^(k-j) {n,k} [k,j] H_k."""
    return sum(
        ((-1) ** (k - j) * stirling2(n, k) * stirling1(k, j) * harmonic(k)
         for k in range(j, n + 1)),
        Fraction(0),
    )


def _hsq_sum(n: int) -> Fraction:
    return sum(
        ((-1) ** (n - k) * stirling2(n, k) * factorial(k) * harmonic(k) ** 2
         for k in range(1, n + 1)),
        Fraction(0),
    )


def _bernoulli_sum(n: int) -> Fraction:
    return sum((bernoulli(j) for j in range(n + 1)), Fraction(0))


# --- per-identity lhs/rhs evaluators ---------------------------------------

def _main_lhs(p: Params) -> Fraction:
    return _calB(p["n"], p["j"])


def _main_rhs(p: Params) -> Fraction:
    n, j = p["n"], p["j"]
    if j == n:
        raise IndeterminateRHS(
            "RHS (binom(n,n)-1)*B_0/0 is indeterminate at j=n; LHS equals H_n")
    return (binom_int(n, j) - 1) * bernoulli(n - j) / (n - j)


def _worpitzky_lhs(p: Params) -> Fraction:
    n = p["n"]
    return sum(((-1) ** k * stirling2(n, k) * Fraction(factorial(k), k + 1)
                for k in range(1, n + 1)), Fraction(0))


def _gen_worpitzky_lhs(p: Params) -> Fraction:
    n, j = p["n"], p["j"]
    return sum((Fraction((-1) ** (k - j), k) * stirling2(n, k) * stirling1(k, j)
                for k in range(j, n + 1)), Fraction(0))


def _gen_worpitzky_rhs(p: Params) -> Fraction:
    n, j = p["n"], p["j"]
    return binom_int(n - 1, j) * bernoulli(n - j) / (n - j)


def _h1_lhs(p: Params) -> Fraction:
    n = p["n"]
    return sum(((-1) ** (k - 1) * stirling2(n, k) * factorial(k - 1) * harmonic(k)
                for k in range(1, n + 1)), Fraction(0))


def _h2_lhs(p: Params) -> Fraction:
    n = p["n"]
    return sum(((-1) ** k * stirling2(n, k) * factorial(k - 1)
                * harmonic(k - 1) * harmonic(k)
                for k in range(2, n + 1)), Fraction(0))


def _k3_lhs(p: Params) -> Fraction:
    n = p["n"]
    return sum(((-1) ** (k - 1) * stirling2(n, k) * factorial(k - 1)
                * (harmonic(k - 1) ** 2 - harmonic_gen(k - 1, 2)) * harmonic(k)
                for k in range(3, n + 1)), Fraction(0))


def _binomial_weighted_bern(n: int, x: Fraction, sign: bool = False,
                            plus_one: bool = False,
                            weight: Callable[[int], Fraction] | None = None) -> Fraction:
    out = Fraction(0)
    for j in range(1, n + 1):
        c = binom_int(n, j) + (1 if plus_one else -1)
        term = c * bernoulli(j) / j
        if sign:
            term *= (-1) ** j
        if weight is not None:
            term *= weight(j)
        else:
            term *= x ** (n - j)
        out += term
    return out


def _polyx_lhs(p: Params) -> Fraction:
    return _binomial_weighted_bern(p["n"], Fraction(p["x"]))


def _polyx_rhs(p: Params) -> Fraction:
    n, x = p["n"], Fraction(p["x"])
    return hw(n, x) - harmonic(n) * x ** n


def _polyx_coeff_lhs(p: Params) -> Fraction:
    n, i = p["n"], p["coeff"]
    j = n - i
    if j < 1:
        return Fraction(0)
    return (binom_int(n, j) - 1) * bernoulli(j) / j


def _polyx_coeff_rhs(p: Params) -> Fraction:
    # x^i coefficient of hw(n, x) - H_n x^n as a polynomial in x
    n, i = p["n"], p["coeff"]
    out = Fraction(0)
    for k in range(max(1, i), n + 1):
        # k! binom(x, k) = sum_i (-1)^(k-i) [k,i] x^i
        out += (stirling2(n, k) * harmonic(k)
                * (-1) ** (k - i) * stirling1(k, i))
    if i == n:
        out -= harmonic(n)
    return out


def _agoh_lhs(p: Params) -> Fraction:
    return _binomial_weighted_bern(p["n"], Fraction(p["m"]))


def _agoh_rhs(p: Params) -> Fraction:
    n, m = p["n"], p["m"]
    return Fraction(m) ** n * (harmonic(m) - harmonic(n)) - sum(
        (Fraction((m - j) ** n, j) for j in range(1, m + 1)), Fraction(0))


def _agoh_alt_lhs(p: Params) -> Fraction:
    return _binomial_weighted_bern(p["n"], Fraction(p["m"]), sign=True)


def _agoh_alt_rhs(p: Params) -> Fraction:
    n, m = p["n"], p["m"]
    return Fraction(m) ** n * (harmonic(m) - harmonic(n) + Fraction(n - 1, m)) - sum(
        (Fraction((m - j) ** n, j) for j in range(1, m + 1)), Fraction(0))


def _agoh_m1_lhs(p: Params) -> Fraction:
    return _binomial_weighted_bern(p["n"], Fraction(1), sign=True)


def _agoh_m1_rhs(p: Params) -> Fraction:
    n = p["n"]
    return n - harmonic(n)


def _agoh_combine_lhs(p: Params) -> Fraction:
    n = p["n"]
    return _binomial_weighted_bern(
        n, Fraction(0), weight=lambda j: 1 - Fraction(1, 2**j))


def _agoh_combine_rhs(p: Params) -> Fraction:
    n = p["n"]
    return Fraction(1 - 2 ** (n - 1), 2**n)


def _rec16_lhs(p: Params) -> Fraction:
    n = p["n"]
    return _binomial_weighted_bern(
        n, Fraction(0), plus_one=True, weight=lambda j: Fraction(1 - 2**j))


def _rec16_euler_lhs(p: Params) -> Fraction:
    n = p["n"]
    return sum(((binom_int(n, j) + 1) * euler_number(j - 1) / 2
                for j in range(1, n + 1)), Fraction(0))


def _one(p: Params) -> Fraction:
    return Fraction(1)


def _agoh_eq11_lhs(p: Params) -> Fraction:
    m, z = p["m"], Fraction(p["z"])
    return sum((binom_int(m, k) * harmonic(k) * (z - 1) ** k
                for k in range(1, m + 1)), Fraction(0))


def _agoh_eq11_rhs(p: Params) -> Fraction:
    m, z = p["m"], Fraction(p["z"])
    return harmonic(m) * z**m - sum(
        (z**k / (m - k) for k in range(m)), Fraction(0))


def _cumsum_lhs(p: Params) -> Fraction:
    return _bernoulli_sum(p["n"])


def _cumsum_rhs(p: Params) -> Fraction:
    n = p["n"]
    return dibernoulli_at_one(n) + bernoulli(n) - dibernoulli(n) - 1


def _eq14_rhs(p: Params) -> Fraction:
    n = p["n"]
    return _hsq_sum(n) + bernoulli_poly_at(n, 1) + n - n * n - 1


def _hsq_bridge_lhs(p: Params) -> Fraction:
    return _hsq_sum(p["n"])


def _hsq_bridge_rhs(p: Params) -> Fraction:
    n = p["n"]
    return dibernoulli_at_one(n) - dibernoulli(n) + n * (n - 1)


def _hockey_lhs(p: Params) -> Fraction:
    n, j = p["n"], p["j"]
    return Fraction(sum(binom_int(n - k, j - k) for k in range(j)))


def _hockey_rhs(p: Params) -> Fraction:
    return Fraction(binom_int(p["n"] + 1, p["j"]) - 1)


def _reduction_lhs(p: Params) -> Fraction:
    return _calB(p["n"] + 1, p["j"])


def _reduction_rhs(p: Params) -> Fraction:
    n, j = p["n"], p["j"]
    return _calB(n, j - 1) + binom_int(n, j) * bernoulli(n + 1 - j) / (n + 1 - j)


def _stirl20_lhs(p: Params) -> Fraction:
    return Fraction(stirling1(p["k"], p["part"]))


def _stirl20_rhs(p: Params) -> Fraction:
    k = p["k"]
    if p["part"] == 1:
        return Fraction(factorial(k - 1))
    return factorial(k - 1) * harmonic(k - 1)


def _bpint_lhs(p: Params) -> Fraction:
    n = p["n"]
    return sum((binom_int(n, j) * bernoulli(j) / (n - j + 1)
                for j in range(n + 1)), Fraction(0))


def _zero(p: Params) -> Fraction:
    return Fraction(0)


def _hw_cauchy_lhs(p: Params) -> Fraction:
    n = p["n"]
    return sum((bernoulli(j) / (n - j + 1) for j in range(n + 1)), Fraction(0))


def _hw_cauchy_rhs(p: Params) -> Fraction:
    n = p["n"]
    return 1 - (n + 1) * sum(
        (stirling2(n, k) * cauchy1(k) * harmonic(k) for k in range(1, n + 1)),
        Fraction(0))


# --- case generators --------------------------------------------------------

def _cases_n(lo: int):
    def gen(b: SweepBounds) -> Iterable[Params]:
        return ({"n": n} for n in range(lo, b.n_max + 1))
    return gen


def _cases_main(b: SweepBounds) -> Iterable[Params]:
    for n in range(1, b.n_max + 1):
        top = n if b.include_j_equals_n else n - 1
        for j in b.j_range(0, top):
            yield {"n": n, "j": j}


def _cases_gen_worpitzky(b: SweepBounds) -> Iterable[Params]:
    for n in range(3, b.n_max + 1):
        for j in b.j_range(1, n - 2):
            yield {"n": n, "j": j}


def _cases_polyx(b: SweepBounds) -> Iterable[Params]:
    rng = _rng(b, "POLYX")
    for n in range(1, b.n_max + 1):
        for _ in range(b.rand_count):
            yield {"n": n, "x": _rand_rational(rng, nonzero=True)}


def _cases_polyx_coeffs(b: SweepBounds) -> Iterable[Params]:
    for n in range(1, b.n_max + 1):
        for i in range(n + 1):
            yield {"n": n, "coeff": i}


def _cases_nm(b: SweepBounds) -> Iterable[Params]:
    for n in range(1, b.n_max + 1):
        for m in range(1, b.m_max + 1):
            yield {"n": n, "m": m}


def _cases_eq11(b: SweepBounds) -> Iterable[Params]:
    rng = _rng(b, "AGOH_EQ11")
    for m in range(1, b.m_max + 1):
        for _ in range(b.rand_count):
            yield {"m": m, "z": _rand_rational(rng)}


def _cases_nj(j_lo: int, n_lo: int = 1):
    def gen(b: SweepBounds) -> Iterable[Params]:
        for n in range(n_lo, b.n_max + 1):
            for j in b.j_range(j_lo, n):
                yield {"n": n, "j": j}
    return gen


def _cases_stirl20(b: SweepBounds) -> Iterable[Params]:
    for k in range(1, b.n_max + 1):
        for part in (1, 2):
            yield {"k": k, "part": part}


# --- catalog ----------------------------------------------------------------

@dataclass(frozen=True)
class IdentityEntry:
    domain: str
    cases: Callable[[SweepBounds], Iterable[Params]]
    lhs: Callable[[Params], Fraction]
    rhs: Callable[[Params], Fraction]
    note: str | None = None


CATALOG: dict[str, IdentityEntry] = {
    "MAIN": IdentityEntry(
        "1 <= n <= n_max, 0 <= j <= n-1",
        _cases_main, _main_lhs, _main_rhs,
        note="j=n excluded: RHS (binom(n,n)-1)*B_0/0 is indeterminate; "
             "LHS there equals H_n"),
    "WORPITZKY": IdentityEntry(
        "1 <= n <= n_max", _cases_n(1), _worpitzky_lhs,
        lambda p: bernoulli(p["n"])),
    "GEN_WORPITZKY": IdentityEntry(
        "3 <= n <= n_max, 1 <= j <= n-2",
        _cases_gen_worpitzky, _gen_worpitzky_lhs, _gen_worpitzky_rhs),
    "H1": IdentityEntry(
        "2 <= n <= n_max", _cases_n(2), _h1_lhs,
        lambda p: bernoulli(p["n"] - 1)),
    "H2": IdentityEntry(
        "2 <= n <= n_max", _cases_n(2), _h2_lhs,
        lambda p: Fraction(p["n"] + 1, 2) * bernoulli(p["n"] - 2)),
    "K3SPECIAL": IdentityEntry(
        "4 <= n <= n_max", _cases_n(4), _k3_lhs,
        lambda p: Fraction(p["n"] ** 2 + 2, 3) * bernoulli(p["n"] - 3)),
    "POLYX": IdentityEntry(
        "1 <= n <= n_max, random nonzero rational x",
        _cases_polyx, _polyx_lhs, _polyx_rhs),
    "POLYX_COEFFS": IdentityEntry(
        "1 <= n <= n_max, coefficientwise in x",
        _cases_polyx_coeffs, _polyx_coeff_lhs, _polyx_coeff_rhs),
    "AGOH": IdentityEntry(
        "1 <= n <= n_max, 1 <= m <= m_max",
        _cases_nm, _agoh_lhs, _agoh_rhs),
    "AGOH_ALT": IdentityEntry(
        "1 <= n <= n_max, 1 <= m <= m_max",
        _cases_nm, _agoh_alt_lhs, _agoh_alt_rhs),
    "AGOH_M1": IdentityEntry(
        "1 <= n <= n_max", _cases_n(1), _agoh_m1_lhs, _agoh_m1_rhs),
    "AGOH_COMBINE": IdentityEntry(
        "1 <= n <= n_max", _cases_n(1), _agoh_combine_lhs, _agoh_combine_rhs),
    "REC16": IdentityEntry(
        "1 <= n <= n_max", _cases_n(1), _rec16_lhs, _one),
    "REC16_EULER": IdentityEntry(
        "1 <= n <= n_max", _cases_n(1), _rec16_euler_lhs, _one),
    "AGOH_EQ11": IdentityEntry(
        "1 <= m <= m_max, random rational z",
        _cases_eq11, _agoh_eq11_lhs, _agoh_eq11_rhs),
    "CUMSUM": IdentityEntry(
        "2 <= n <= n_max", _cases_n(2), _cumsum_lhs, _cumsum_rhs),
    "EQ14": IdentityEntry(
        "1 <= n <= n_max", _cases_n(1), _cumsum_lhs, _eq14_rhs),
    "HSQ_BRIDGE": IdentityEntry(
        "1 <= n <= n_max", _cases_n(1), _hsq_bridge_lhs, _hsq_bridge_rhs),
    "HOCKEY": IdentityEntry(
        "1 <= j <= n <= n_max", _cases_nj(1), _hockey_lhs, _hockey_rhs),
    "REDUCTION": IdentityEntry(
        "1 <= j <= n <= n_max", _cases_nj(1), _reduction_lhs, _reduction_rhs),
    "STIRL20": IdentityEntry(
        "1 <= k <= n_max, parts 1 and 2",
        _cases_stirl20, _stirl20_lhs, _stirl20_rhs),
    "BPINT": IdentityEntry(
        "2 <= n <= n_max", _cases_n(2), _bpint_lhs, _zero),
    "HW_CAUCHY": IdentityEntry(
        "1 <= n <= n_max", _cases_n(1), _hw_cauchy_lhs, _hw_cauchy_rhs),
}

IDENTITY_IDS = tuple(CATALOG)


def eval_identity(case: IdentityCase) -> tuple[Fraction, Fraction]:
    """Evaluate both sides of one identity case exactly."""
    entry = CATALOG[case.id]
    return entry.lhs(case.params), entry.rhs(case.params)


def _param_key(params: Params):
    return tuple(sorted(params.items()))


def _convention_note(bounds: SweepBounds) -> str:
    """Brute-force finding for Eq-(4)-style identity on the n-j=1 line."""
    plus, minus, total = 0, 0, 0
    for n in range(2, min(bounds.n_max, 30) + 1):
        lhs = _gen_worpitzky_lhs({"n": n, "j": n - 1})
        total += 1
        if lhs == binom_int(n - 1, n - 1) * Fraction(1, 2):
            plus += 1
        if lhs == binom_int(n - 1, n - 1) * Fraction(-1, 2):
            minus += 1
    return (f"n-j=1 subdomain, direct summation for n<=30: B_1=+1/2 closes the "
            f"identity in {plus}/{total} cases, B_1=-1/2 in {minus}/{total}; "
            f"the +1/2 convention is required on this line")


def verify_identity(id: str, bounds: SweepBounds | None = None) -> IdentityReport:
    """Sweep the full declared domain, collecting every failure."""
    if id not in CATALOG:
        raise KeyError(f"unknown identity {id!r}")
    bounds = bounds or SweepBounds()
    entry = CATALOG[id]
    report = IdentityReport(id=id, domain=entry.domain)
    if entry.note:
        report.notes.append(entry.note)
    cases = sorted(entry.cases(bounds), key=_param_key)
    for params in cases:
        report.cases += 1
        try:
            lhs, rhs = entry.lhs(params), entry.rhs(params)
        except IndeterminateRHS as exc:
            report.failures.append(
                {"params": params, "lhs": entry.lhs(params), "rhs": None})
            report.notes.append(f"{params}: {exc}")
            continue
        if lhs != rhs:
            report.failures.append({"params": params, "lhs": lhs, "rhs": rhs})
    if id == "GEN_WORPITZKY":
        report.notes.append(_convention_note(bounds))
    return report


def verify_all(bounds: SweepBounds | None = None,
               ids: Iterable[str] = IDENTITY_IDS) -> list[IdentityReport]:
    return [verify_identity(id, bounds) for id in ids]
