"""
Bi-Lipschitz comparison of length tables
"""
import logging
from typing import Tuple, Union

from core.results import BoundedByCOnDomain, WitnessAgainst
from .tables import Capped, LengthTable

logger = logging.getLogger(__name__)

Comparison = Union[WitnessAgainst, BoundedByCOnDomain]


def lipschitz_compare(t1: LengthTable, t2: LengthTable, C: int) -> Comparison:
    """First g in t1's order with t1(g) > C t2(g), or the bound on the common domain.

    Capped values only decide a pair when the inequality holds for every
    value they stand for; undecided pairs are not counted as checked.
    """
    if C < 1:
        raise ValueError("C must be a positive integer")
    checked = 0
    for g in t1.domain:
        if g.is_identity or g not in t2:
            continue
        v1, v2 = t1.values[g], t2.values[g]
        if isinstance(v2, Capped):
            if isinstance(v1, int) and v1 <= C * (v2.cap + 1):
                checked += 1
            continue
        if isinstance(v1, Capped):
            if v1.cap + 1 > C * v2:
                return WitnessAgainst(g, left=str(v1), right=v2)
            continue
        checked += 1
        if v1 > C * v2:
            logger.debug(f"🔍 {g.token}: {v1} > {C} * {v2}")
            return WitnessAgainst(g, left=v1, right=v2)
    return BoundedByCOnDomain(C, checked)


def incomparability_witness(t1: LengthTable, t2: LengthTable,
                            C: int) -> Tuple[Comparison, Comparison]:
    """Both directions; two witnesses show neither table C-dominates the other."""
    return lipschitz_compare(t1, t2, C), lipschitz_compare(t2, t1, C)
