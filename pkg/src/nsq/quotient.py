"""Quotient semigroups <A>/p: direct membership, generator systems from
the T_p tuple enumeration, the split for p-divisible generators,
minimalization, and verification against the brute-force oracle.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapExceeded, GcdNotOne, NoMatchingRow, NotCoprimePart
from .semigroup import (DEFAULT_SIEVE_CAP, GeneratorList, MembershipTable,
                        build_membership, frobenius, table_from_bits)

DEFAULT_TP_CAP = 10**7


@dataclass(frozen=True)
class QuotientSpec:
    """A quotient instance <A>/p with the generators split into the
    p-divisible part and the coprime-residue part."""

    A: GeneratorList
    p: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("p must be a positive integer")
        if self.A.g != 1:
            raise GcdNotOne("quotients are taken of numerical semigroups only")

    @property
    def divisible(self) -> tuple[int, ...]:
        return tuple(a for a in self.A.gens if a % self.p == 0)

    @property
    def remainder(self) -> tuple[int, ...]:
        return tuple(a for a in self.A.gens if a % self.p != 0)


@dataclass(frozen=True)
class TpSet:
    """Tuples x in [0, p-1]^n with positive residue sum divisible by p,
    together with the values (sum x_i a_i)/p they contribute."""

    p: int
    gens: tuple[int, ...]
    tuples: tuple[tuple[int, ...], ...]
    values: tuple[int, ...]


def enumerate_Tp(q: QuotientSpec, cap: int = DEFAULT_TP_CAP) -> TpSet:
    """Enumerate T_p over the non-p-divisible generators of q."""
    return _enumerate_tp(q.remainder, q.p, cap)


def _enumerate_tp(gens: tuple[int, ...], p: int, cap: int) -> TpSet:
    ts = [a % p for a in gens]
    if any(t == 0 for t in ts):
        raise NotCoprimePart("T_p enumeration needs p to divide no generator")
    if gens and p ** len(gens) > cap:
        raise CapExceeded(f"{p ** len(gens)} tuples exceed cap {cap}")
    tuples = []
    values = []
    for x in itertools.product(range(p), repeat=len(gens)):
        s = sum(xi * ti for xi, ti in zip(x, ts))
        if s > 0 and s % p == 0:
            tuples.append(x)
            values.append(sum(xi * ai for xi, ai in zip(x, gens)) // p)
    return TpSet(p, gens, tuple(tuples), tuple(values))


def quotient_membership(q: QuotientSpec, B: int,
                        cap: int = DEFAULT_SIEVE_CAP) -> MembershipTable:
    """Flags for n <= B with n a member iff p*n is in <A>."""
    base = build_membership(q.A, cap=cap)
    if base.bound < q.p * B:
        base = build_membership(q.A, B=q.p * B, cap=cap)
    bits = bytes(1 if base.member(q.p * n) else 0 for n in range(B + 1))
    gens = _quotient_min_gens_guess(q, bits)
    return table_from_bits(gens, bits)


def _quotient_min_gens_guess(q: QuotientSpec, bits: bytes) -> tuple[int, ...]:
    # only the minimum matters for run certification
    for n in range(1, len(bits)):
        if bits[n]:
            return (n,)
    return (max(q.A.gens),)


def quotient_table(q: QuotientSpec, cap: int = DEFAULT_SIEVE_CAP) -> MembershipTable:
    """Certified membership table of <A>/p."""
    fa = frobenius(q.A, cap=cap)
    if fa is None:
        return quotient_membership(q, 2, cap=cap)
    base_bound = fa // q.p + 1
    t = quotient_membership(q, base_bound, cap=cap)
    if t.certified:
        return t
    # everything past F(A)/p is a member; extend until the run shows up
    m = next(n for n in range(1, t.bound + 2) if n > t.bound or t.bits[n])
    return quotient_membership(q, base_bound + m + 1, cap=cap)


def frobenius_quotient(q: QuotientSpec, cap: int = DEFAULT_SIEVE_CAP) -> int | None:
    t = quotient_table(q, cap=cap)
    for n in range(t.bound, 0, -1):
        if not t.bits[n]:
            return n
    return None


def generators_thm(q: QuotientSpec, cap: int = DEFAULT_TP_CAP) -> list[int]:
    """Generator system of <A>/p: divisible generators divided by p, the
    remaining generators, and the T_p values over the remaining part."""
    out = {a // q.p for a in q.divisible}
    rem = q.remainder
    if rem:
        tp = _enumerate_tp(rem, q.p, cap)
        out.update(rem)
        out.update(tp.values)
    return sorted(out)


def minimal_quotient_generators(q: QuotientSpec,
                                cap: int = DEFAULT_SIEVE_CAP) -> list[int]:
    """Unique minimal generating set of <A>/p from its membership."""
    f = frobenius_quotient(q, cap=cap)
    if f is None:
        return [1]
    t = quotient_table(q, cap=cap)
    m = next(n for n in range(1, t.bound + 1) if t.bits[n])
    bound = f + m
    if t.bound < bound:
        t = quotient_membership(q, bound, cap=cap)
    members = [n for n in range(1, bound + 1) if t.member(n)]
    member_set = set(members)
    return [c for c in members
            if not any(s in member_set and (c - s) in member_set
                       for s in range(1, c // 2 + 1))]


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    bound: int
    generators: tuple[int, ...]
    quotient_frobenius: int | None
    mismatches: tuple[int, ...]


def verify_generators(q: QuotientSpec, cap: int = DEFAULT_SIEVE_CAP) -> VerificationReport:
    """Check that the generator system actually generates <A>/p, by
    comparing membership up to a bound that decides set equality."""
    gens = generators_thm(q)
    f = frobenius_quotient(q, cap=cap)
    bound = (f or 0) + min(gens) + 1
    qt = quotient_membership(q, bound, cap=cap)
    gt = build_membership(GeneratorList.from_iter(gens), B=bound, cap=cap)
    mismatches = tuple(n for n in range(bound + 1) if qt.bits[n] != gt.bits[n])
    return VerificationReport(not mismatches, bound, tuple(gens), f, mismatches)


def generates_quotient(gens, q: QuotientSpec,
                       cap: int = DEFAULT_SIEVE_CAP) -> bool:
    """True iff the semigroup generated by `gens` equals <A>/p."""
    gens = sorted(set(gens))
    f = frobenius_quotient(q, cap=cap)
    bound = (f or 0) + min(gens) + 1
    qt = quotient_membership(q, bound, cap=cap)
    gt = build_membership(GeneratorList.from_iter(gens), B=bound, cap=cap)
    return qt.bits == gt.bits


# Tabulated generator systems for three generators and p in {2, 3}; each
# row maps the residue pattern (sorted) to coefficient vectors (c1,c2,c3)
# and a divisor d, meaning (c1*a1 + c2*a2 + c3*a3)/d with the a_i sorted
# by residue mod p.
_TABLE1_ROWS = {
    (2, (0, 0, 1)): [((1, 0, 0), 2), ((0, 1, 0), 2), ((0, 0, 1), 1)],
    (2, (0, 1, 1)): [((1, 0, 0), 2), ((0, 1, 0), 1), ((0, 0, 1), 1),
                     ((0, 1, 1), 2)],
    (2, (1, 1, 1)): [((1, 0, 0), 1), ((0, 1, 0), 1), ((0, 0, 1), 1),
                     ((1, 1, 0), 2), ((1, 0, 1), 2), ((0, 1, 1), 2)],
    (3, (0, 0, 1)): [((1, 0, 0), 3), ((0, 1, 0), 3), ((0, 0, 1), 1)],
    (3, (0, 0, 2)): [((1, 0, 0), 3), ((0, 1, 0), 3), ((0, 0, 1), 1)],
    (3, (0, 1, 1)): [((1, 0, 0), 3), ((0, 1, 0), 1), ((0, 0, 1), 1),
                     ((0, 1, 2), 3), ((0, 2, 1), 3)],
    (3, (0, 1, 2)): [((1, 0, 0), 3), ((0, 1, 0), 1), ((0, 0, 1), 1),
                     ((0, 1, 1), 3)],
    (3, (0, 2, 2)): [((1, 0, 0), 3), ((0, 1, 0), 1), ((0, 0, 1), 1),
                     ((0, 2, 1), 3), ((0, 1, 2), 3)],
    (3, (1, 1, 1)): [((1, 0, 0), 1), ((0, 1, 0), 1), ((0, 0, 1), 1),
                     ((2, 1, 0), 3), ((2, 0, 1), 3), ((1, 2, 0), 3),
                     ((0, 2, 1), 3), ((1, 0, 2), 3), ((0, 1, 2), 3),
                     ((1, 1, 1), 3)],
    (3, (1, 1, 2)): [((1, 0, 0), 1), ((0, 1, 0), 1), ((0, 0, 1), 1),
                     ((1, 0, 1), 3), ((0, 1, 1), 3), ((2, 1, 0), 3),
                     ((1, 2, 0), 3)],
    (3, (1, 2, 2)): [((1, 0, 0), 1), ((0, 1, 0), 1), ((0, 0, 1), 1),
                     ((1, 1, 0), 3), ((1, 0, 1), 3), ((0, 2, 1), 3),
                     ((0, 1, 2), 3)],
    (3, (2, 2, 2)): [((1, 0, 0), 1), ((0, 1, 0), 1), ((0, 0, 1), 1),
                     ((2, 1, 0), 3), ((2, 0, 1), 3), ((1, 2, 0), 3),
                     ((0, 2, 1), 3), ((1, 0, 2), 3), ((0, 1, 2), 3),
                     ((1, 1, 1), 3)],
}


def table1_generators(q: QuotientSpec) -> list[int]:
    """Generator list from the tabulated three-generator rows for p=2,3."""
    if q.p not in (2, 3) or len(q.A.gens) != 3:
        raise NoMatchingRow("rows cover three distinct generators with p in {2, 3}")
    by_t = sorted(q.A.gens, key=lambda a: (a % q.p, a))
    pattern = tuple(a % q.p for a in by_t)
    rows = _TABLE1_ROWS.get((q.p, pattern))
    if rows is None:
        raise NoMatchingRow(f"no row for p={q.p}, residues {pattern}")
    out = set()
    for coeffs, d in rows:
        v = sum(c * a for c, a in zip(coeffs, by_t))
        if v % d:
            raise NoMatchingRow(f"residue pattern {pattern} does not divide {v} by {d}")
        out.add(v // d)
    return sorted(out)
