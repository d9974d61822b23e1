"""
Conjugation-invariant splits and separating conjugators
"""
import logging
from typing import Iterable, Optional, Union

from core.conf import budget
from core.exceptions import ClassNotStabilized, InsufficientDomain, PreconditionFailed
from core.results import NotFoundWithinRadius
from groups.catalog import GroupSpec
from groups.elements import Element, conjugate, elements
from groups.enumeration import ball, conjugacy_class_in_ball, iter_ball
from groups.generating import GeneratingSet
from lengths.construction import conjugate_length
from lengths.tables import LengthTable
from .reports import ConstructionReport

logger = logging.getLogger(__name__)


def icc_invariant_split(t: LengthTable, x: Element, X: GeneratingSet, r: int,
                        sample: Optional[int] = None) -> ConstructionReport:
    """Membership of t in U = {l : l = 1 on x^G} and its conjugation invariance.

    The class found within radius r must equal the class found within
    r + 1; the first `sample` elements of the radius r ball serve as
    conjugators.
    """
    group = t.group
    found = conjugacy_class_in_ball(group, x, X, r)
    following = conjugacy_class_in_ball(group, x, X, r + 1)
    if found != following:
        raise ClassNotStabilized(
            f"The class of {x.token} keeps growing past radius {r}",
            details={'radius': r, 'size': len(found), 'next_size': len(following)}
        )
    klass = sorted(found, key=lambda e: e.sort_key)
    missing = [y for y in klass if y not in t]
    if missing:
        raise InsufficientDomain(missing, "The conjugacy class is not inside the table")

    report = ConstructionReport('icc_invariant_split', inputs={
        'group': group.label, 'x': x, 'generators': X.token, 'radius': r,
    })
    report.check(f"class of {x.token} is stable from radius {r}", True, True)
    in_U = all(t.value(y) == 1 for y in klass)
    report.notes['class'] = klass
    report.notes['in_U'] = in_U

    size = budget('SAMPLE_SIZE', sample)
    conjugators = ball(group, X, r)[:size]
    changed = []
    for g in conjugators:
        moved = conjugate_length(g, t, domain=klass)
        if all(moved.value(y) == 1 for y in klass) != in_U:
            changed.append(g)
    report.notes['conjugators'] = len(conjugators)
    report.check('conjugation preserves membership in U', [], changed)
    return report


def separating_conjugator(A: Iterable[Element], B: Iterable[Element],
                          X: GeneratingSet, r: int) -> Union[Element, NotFoundWithinRadius]:
    """First g in BFS order with A^g and B disjoint."""
    A, B = list(A), set(B)
    if any(h.is_identity for h in A) or any(h.is_identity for h in B):
        raise PreconditionFailed("A and B must not contain the identity")
    checked = 0
    for g in iter_ball(X.group, X, r):
        checked += 1
        if not any(conjugate(h, g) in B for h in A):
            logger.debug(f"✅ {g.token} separates after {checked} candidates")
            return g
    return NotFoundWithinRadius(r, checked)


def cofinite_generating_set(group: GroupSpec, excluded: Iterable[Element]) -> GeneratingSet:
    """X = G minus (S u S^-1 u {1}) for a finite catalog group, certified generating."""
    if not group.is_finite:
        raise PreconditionFailed(f"{group.label} is infinite; its complement cannot be listed")
    removed = set()
    for s in excluded:
        removed.update((s, ~s))
    X = GeneratingSet.build(group, [g for g in elements(group) if g not in removed])
    if not X.is_verified_generating:
        raise PreconditionFailed(
            f"{group.label} minus the excluded set does not generate",
            details={'excluded': sorted(s.token for s in removed)}
        )
    return X
