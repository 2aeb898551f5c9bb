"""Representation generating functions RGF_p(x) = sum_n d(pn; A) x^n:
truncated series by multisection, certified closed-form rational
functions, Frobenius numbers read off the series, and generator
extraction from the numerator support.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CertificationFailed, GcdNotOne, NegativeNumerator
from .exactalg import Poly, RationalFunction
from .quotient import QuotientSpec, quotient_table
from .semigroup import GeneratorList, denumerant_series, frobenius


@dataclass(frozen=True)
class RGFSeries:
    """Coefficients c_n = d(p*n; A) for n = 0..order."""

    A: GeneratorList
    p: int
    order: int
    coeffs: tuple[int, ...]


@dataclass(frozen=True)
class RGFRational:
    """Closed form numerator / prod_i (1 - x^{b_i}), with the expansion
    checked against the series through degree `certified_to`."""

    numerator: tuple[int, ...]
    denom_factors: tuple[int, ...]
    certified_to: int

    def numerator_support(self) -> dict[int, int]:
        return {e: c for e, c in enumerate(self.numerator) if c}

    def to_rational(self) -> RationalFunction:
        den = Poly.from_ints([1])
        for b in self.denom_factors:
            den = den * Poly.one_minus_pow(b)
        return RationalFunction(Poly.from_ints(self.numerator), den)


def rgf_series(A: GeneratorList, p: int, N: int) -> RGFSeries:
    """Every p-th coefficient of the denumerant series up to p*N."""
    if p < 1:
        raise ValueError("p must be a positive integer")
    full = denumerant_series(A, p * N)
    return RGFSeries(A, p, N, tuple(full.coeffs[::p]))


def _deflate(series: list[int], bs, horizon: int) -> list[int]:
    """Multiply the truncated series by prod (1 - x^b)."""
    cur = list(series)
    for b in bs:
        cur = [cur[i] - (cur[i - b] if i >= b else 0)
               for i in range(horizon + 1)]
    return cur


def rgf_rational(A: GeneratorList, p: int) -> RGFRational:
    """Guess-and-certify closed form for RGF_p.

    The primary denominator exponents are b_i = a_i / gcd(a_i, p); if the
    series times that denominator fails to truncate, fall back to
    (1 - x^Q)^k with Q the p-reduced lcm of the generators.  The result
    is certified against the series through the reported horizon, one
    full quasi-period past the transient.
    """
    if A.g != 1:
        raise GcdNotOne("rgf_rational requires gcd(A) = 1")
    if p < 1:
        raise ValueError("p must be a positive integer")
    f = frobenius(A)
    transient = -(-(f or 0) // p)
    Q = math.lcm(*A.seq)
    Q //= math.gcd(Q, p)

    primary = tuple(a // math.gcd(a, p) for a in A.seq)
    fallback = tuple([Q] * len(A.seq))
    for bs in (primary, fallback):
        sum_b = sum(bs)
        horizon = sum_b + Q + transient + 1
        series = rgf_series(A, p, horizon).coeffs
        prod = _deflate(list(series), bs, horizon)
        if all(c == 0 for c in prod[sum_b + 1:]):
            num = prod[:sum_b + 1]
            while num and num[-1] == 0:
                num.pop()
            return RGFRational(tuple(num), tuple(sorted(bs)), horizon)
    raise CertificationFailed(
        f"no candidate denominator certified for A={A.seq}, p={p} "
        f"(horizon {horizon})")


def frobenius_from_rgf(A: GeneratorList, p: int) -> int | None:
    """Largest n with d(pn; A) = 0, certified by a run of positive
    coefficients as long as the smallest positive quotient member."""
    if A.g != 1:
        raise GcdNotOne("requires gcd(A) = 1")
    N = 16
    while True:
        coeffs = rgf_series(A, p, N).coeffs
        m = next((n for n in range(1, N + 1) if coeffs[n] > 0), None)
        if m is not None:
            zeros = [n for n in range(1, N + 1) if coeffs[n] == 0]
            if not zeros and N >= m:
                return None
            if zeros and N - zeros[-1] >= m:
                return zeros[-1]
        N *= 2


def gens_from_rgf(r: RGFRational, A: GeneratorList, p: int) -> list[int]:
    """Generators of <A>/p from a nonnegative closed form: the
    denominator exponents plus the nonzero numerator exponents."""
    if any(c < 0 for c in r.numerator):
        raise NegativeNumerator("numerator has a negative coefficient")
    out = set(r.denom_factors)
    out.update(e for e, c in enumerate(r.numerator) if c and e > 0)
    return sorted(out)


def rgf_membership_check(A: GeneratorList, p: int, N: int) -> bool:
    """Positivity of series coefficients matches quotient membership."""
    coeffs = rgf_series(A, p, N).coeffs
    qt = quotient_table(QuotientSpec(A, p))
    return all((coeffs[n] > 0) == qt.member(n) for n in range(N + 1))


def render_text(r: RGFRational) -> str:
    """Ascending-exponent text form, e.g. (1 + x^4)/((1-x^3)*(1-x^5))."""
    terms = []
    for e, c in enumerate(r.numerator):
        if not c:
            continue
        if e == 0:
            t = str(c)
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            t = f"{mag}x^{e}" if e != 1 else f"{mag}x"
            if c < 0:
                t = "-" + t
        terms.append(t)
    num = " + ".join(terms).replace("+ -", "- ") if terms else "0"
    den = "*".join(f"(1-x^{b})" for b in r.denom_factors)
    return f"({num})/({den})"


def to_json_dict(r: RGFRational) -> dict:
    return {
        "num": {str(e): c for e, c in sorted(r.numerator_support().items())},
        "den": list(r.denom_factors),
        "certified_to": r.certified_to,
    }


def from_json_dict(d: dict) -> RGFRational:
    support = {int(e): int(c) for e, c in d["num"].items()}
    top = max(support, default=0)
    num = tuple(support.get(e, 0) for e in range(top + 1))
    return RGFRational(num, tuple(d["den"]), int(d["certified_to"]))
