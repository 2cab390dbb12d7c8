"""Generalized q-Dyson constant terms module"""
from .constant_term import (
    d_brute,
    d_closed,
    d_integrand,
    d_recursive,
    dt_brute,
    dt_integrand,
    dt_kadell,
    dyson_product,
    expansion_relation_11,
    qdyson_rhs,
)
from .factor_expr import FactorExpr
from .lemmas import check_lemma31, lemma31_cases
from .orders import dominance_leq, prec_leq, prec_less, revlex_leq, revlex_less
from .splitting import (
    SplitTerms,
    f_eval,
    f_expr,
    sample_point,
    split_terms,
    verify_splitting,
    verify_splitting_random,
)
from .vectors import vplus

__all__ = [
    "d_brute",
    "d_closed",
    "d_integrand",
    "d_recursive",
    "dt_brute",
    "dt_integrand",
    "dt_kadell",
    "dyson_product",
    "expansion_relation_11",
    "qdyson_rhs",
    "FactorExpr",
    "check_lemma31",
    "lemma31_cases",
    "dominance_leq",
    "prec_leq",
    "prec_less",
    "revlex_leq",
    "revlex_less",
    "SplitTerms",
    "f_eval",
    "f_expr",
    "sample_point",
    "split_terms",
    "verify_splitting",
    "verify_splitting_random",
    "vplus",
]
