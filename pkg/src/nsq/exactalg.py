"""Exact arithmetic kernel: dense univariate polynomials, normalized
rational functions and truncated power series.

Rational scalars are `fractions.Fraction`.  `Poly` is coefficient-generic:
it is used both over Fraction (polynomials in x) and over
`RationalFunction` (polynomials in a second variable whose coefficients
are rational functions in x).  All operations are pure and every value is
immutable after construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZeroPoly, PoleAtZero


def _trim(coeffs):
    end = len(coeffs)
    while end and not coeffs[end - 1]:
        end -= 1
    return tuple(coeffs[:end])


class Poly:
    """Dense univariate polynomial, constant term first.

    The zero polynomial is the empty coefficient tuple and has degree -1.
    Coefficients may be any exact field elements supporting arithmetic
    with themselves and with int scalars.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(list(coeffs))

    @classmethod
    def from_ints(cls, coeffs):
        return cls([Fraction(c) for c in coeffs])

    @classmethod
    def monomial(cls, coef, exp):
        return cls([0] * exp + [coef])

    @classmethod
    def one_minus_pow(cls, b):
        """1 - x^b with Fraction coefficients."""
        return cls.from_ints([1] + [0] * (b - 1) + [-1])

    @property
    def deg(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    @property
    def lead(self):
        return self.coeffs[-1]

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                     for i in range(n)])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            for j, d in enumerate(other.coeffs):
                out[i + j] = out[i + j] + c * d
        return Poly(out)

    __rmul__ = __mul__

    def scale(self, s):
        return Poly([c * s for c in self.coeffs])

    def shift(self, k):
        """Multiply by x^k (k >= 0)."""
        if not self.coeffs:
            return self
        return Poly([0] * k + list(self.coeffs))

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.lead
        return Poly([c / lc for c in self.coeffs])

    def eval_at(self, v):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Exact long division: a = q*b + r with deg r < deg b."""
    if b.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    r = list(a.coeffs)
    db = b.deg
    if a.deg < db:
        return Poly(), a
    q = [0] * (a.deg - db + 1)
    blead = b.lead
    for k in range(a.deg - db, -1, -1):
        c = r[k + db]
        if not c:
            continue
        f = c / blead
        q[k] = f
        for j, bc in enumerate(b.coeffs):
            if bc:
                r[k + j] = r[k + j] - f * bc
    return Poly(q), Poly(r[:db])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd via Euclid; gcd(p, 0) is the monic multiple of p."""
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def poly_ext_gcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    one = _one_like(a, b)
    s0, s1 = one, Poly()
    t0, t1 = Poly(), one
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lc = r0.lead
    inv = 1 / lc if isinstance(lc, Fraction) else lc.inv()
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def _one_like(a: Poly, b: Poly) -> Poly:
    for p in (a, b):
        if p.coeffs:
            c = p.coeffs[0] if p.coeffs[0] else p.lead
            return Poly([c / c])
    return Poly([Fraction(1)])


class RationalFunction:
    """Quotient of two Fraction-coefficient polynomials, eagerly reduced.

    Normal form: gcd(num, den) = 1 and den monic, so equality is
    field-wise comparison.  Laurent monomials x^-k are represented with
    x^k in the denominator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = Poly([Fraction(num)])
        if den is None:
            den = Poly([Fraction(1)])
        elif isinstance(den, (int, Fraction)):
            den = Poly([Fraction(den)])
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num = Poly()
            self.den = Poly([Fraction(1)])
            return
        g = poly_gcd(num, den)
        if g.deg > 0:
            num = poly_divmod(num, g)[0]
            den = poly_divmod(den, g)[0]
        lc = den.lead
        self.num = num.scale(1 / lc)
        self.den = den.scale(1 / lc)

    @classmethod
    def monomial(cls, coef, exp):
        """coef * x^exp with exp allowed negative."""
        coef = Fraction(coef)
        if exp >= 0:
            return cls(Poly.monomial(coef, exp))
        return cls(Poly([coef]), Poly.monomial(Fraction(1), -exp))

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    @staticmethod
    def _coerce(v):
        if isinstance(v, RationalFunction):
            return v
        if isinstance(v, (int, Fraction)):
            return RationalFunction(v)
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def inv(self):
        return RationalFunction(self.den, self.num)

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = RationalFunction(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def as_monomial(self):
        """(coef, exp) if this is coef*x^exp, else None."""
        if self.num.is_zero():
            return None
        nsup = [i for i, c in enumerate(self.num.coeffs) if c]
        dsup = [i for i, c in enumerate(self.den.coeffs) if c]
        if len(nsup) != 1 or len(dsup) != 1:
            return None
        e = nsup[0] - dsup[0]
        return self.num.coeffs[nsup[0]] / self.den.coeffs[dsup[0]], e

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c_0..c_N of a formal power series, exact."""

    order: int
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coefficient list must have length order + 1")

    def coeff(self, n):
        return self.coeffs[n]


def series_from_rational(f: RationalFunction, n: int) -> TruncatedSeries:
    """First n+1 Taylor coefficients of f at 0; requires den(0) != 0."""
    d = f.den.coeffs
    if not d or not d[0]:
        raise PoleAtZero("denominator vanishes at 0")
    d0 = d[0]
    out = []
    for k in range(n + 1):
        acc = f.num.coeff(k)
        for j in range(1, min(k, f.den.deg) + 1):
            acc = acc - d[j] * out[k - j]
        out.append(acc / d0)
    return TruncatedSeries(n, tuple(out))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to the smaller order."""
    n = min(a.order, b.order)
    out = []
    for k in range(n + 1):
        acc = 0
        for j in range(k + 1):
            acc = acc + a.coeffs[j] * b.coeffs[k - j]
        out.append(acc)
    return TruncatedSeries(n, tuple(out))
