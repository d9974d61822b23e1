"""
Searches for common non-solutions of finite sets of mixed equations
"""
import logging
from typing import Iterable, Union

from core.exceptions import GroupMismatch, TrivialWordInI
from core.results import Counterexample, HoldsOnBall, NotFoundWithinRadius
from groups.catalog import GroupSpec
from groups.elements import Element
from groups.enumeration import iter_ball
from .words import GStarWord, evaluate, normalize

logger = logging.getLogger(__name__)


def _checked_words(group: GroupSpec, words: Iterable[GStarWord]):
    result = []
    for w in words:
        if w.group != group:
            raise GroupMismatch(f"{w.text} is a word over {w.group.label}")
        w = normalize(w.syllables, group)
        if w.is_trivial:
            raise TrivialWordInI("The equation set contains the trivial word")
        result.append(w)
    return result


def mif_witness(group: GroupSpec, words: Iterable[GStarWord], generators,
                r_max: int) -> Union[Element, NotFoundWithinRadius]:
    """First g in BFS order with w(g) != 1 for every w in the set."""
    equations = _checked_words(group, words)
    checked = 0
    for g in iter_ball(group, generators, r_max):
        checked += 1
        if all(not evaluate(w, g).is_identity for w in equations):
            logger.info(f"✅ Common non-solution {g.token} after {checked} candidates")
            return g
    logger.info(f"⚠️ No common non-solution within radius {r_max}")
    return NotFoundWithinRadius(r_max, checked)


def check_mixed_identity(group: GroupSpec, w: GStarWord, generators,
                         radius: int) -> Union[HoldsOnBall, Counterexample]:
    if w.group != group:
        raise GroupMismatch(f"{w.text} is a word over {w.group.label}")
    checked = 0
    for g in iter_ball(group, generators, radius):
        checked += 1
        if not evaluate(w, g).is_identity:
            return Counterexample(g)
    return HoldsOnBall(radius, checked)
