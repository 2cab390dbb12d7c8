"""Exact arithmetic module"""
from .laurent import QLaurent, q_power, ql_sum, ql_product
from .fraction import QFraction

__all__ = ["QLaurent", "QFraction", "q_power", "ql_sum", "ql_product"]
