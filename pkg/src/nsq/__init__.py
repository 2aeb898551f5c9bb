"""Exact-arithmetic toolkit for numerical semigroups, their quotients,
and representation generating functions."""

from .semigroup import (GeneratorList, MembershipTable, apery,
                        build_membership, denumerant, denumerant_series,
                        frobenius, gaps, minimal_generators, semigroup_equal)
from .quotient import (QuotientSpec, TpSet, enumerate_Tp, frobenius_quotient,
                       generators_thm, minimal_quotient_generators,
                       quotient_membership, table1_generators,
                       verify_generators)
from .rgf import (RGFRational, RGFSeries, frobenius_from_rgf, gens_from_rgf,
                  rgf_rational, rgf_series)
from .ctengine import (CTExpr, build_rgf_expr, classify_monomial,
                       ct_constant_term, ct_rgf_rational, lemma_zero_check,
                       normalize_expr, parse_elliott, reduce_factor_mod,
                       render_elliott, residue_A0)
from .exactalg import (Poly, RationalFunction, TruncatedSeries, poly_divmod,
                       poly_gcd, poly_mul, series_from_rational, series_mul)

__all__ = [
    "GeneratorList", "MembershipTable", "apery", "build_membership",
    "denumerant", "denumerant_series", "frobenius", "gaps",
    "minimal_generators", "semigroup_equal",
    "QuotientSpec", "TpSet", "enumerate_Tp", "frobenius_quotient",
    "generators_thm", "minimal_quotient_generators", "quotient_membership",
    "table1_generators", "verify_generators",
    "RGFRational", "RGFSeries", "frobenius_from_rgf", "gens_from_rgf",
    "rgf_rational", "rgf_series",
    "CTExpr", "build_rgf_expr", "classify_monomial", "ct_constant_term",
    "ct_rgf_rational", "lemma_zero_check", "normalize_expr", "parse_elliott",
    "reduce_factor_mod", "render_elliott", "residue_A0",
    "Poly", "RationalFunction", "TruncatedSeries", "poly_divmod", "poly_gcd",
    "poly_mul", "series_from_rational", "series_mul",
]
