"""q-series primitives module"""
from .pochhammer import PochSpec, pochhammer, qpoch, qfact
from .binomial import qbinom, qbinom_quotient, q_multinomial
from .identities import check_qbinomial_theorem, check_prop41, prop41_sum

__all__ = [
    "PochSpec",
    "pochhammer",
    "qpoch",
    "qfact",
    "qbinom",
    "qbinom_quotient",
    "q_multinomial",
    "check_qbinomial_theorem",
    "check_prop41",
    "prop41_sum",
]
