"""
Deterministic ball enumeration over a generating set
"""
import logging
from functools import lru_cache
from typing import FrozenSet, Iterator, List, Optional, Tuple

from core.conf import budget
from core.exceptions import BudgetExceeded, GroupMismatch
from .catalog import GroupSpec
from .elements import Element, conjugate, identity

logger = logging.getLogger(__name__)


def _generators_key(generators) -> Tuple[Element, ...]:
    elements = getattr(generators, 'elements', generators)
    return tuple(elements)


@lru_cache(maxsize=64)
def _layers(group: GroupSpec, generators: Tuple[Element, ...], radius: int,
            cap: int) -> Tuple[Tuple[Element, ...], ...]:
    start = identity(group)
    seen = {start}
    layers = [(start,)]
    frontier = [start]
    total = 1

    for n in range(1, radius + 1):
        found = set()
        for g in frontier:
            for x in generators:
                h = g * x
                if h not in seen:
                    seen.add(h)
                    found.add(h)
        total += len(found)
        if total > cap:
            raise BudgetExceeded(
                f"Ball of radius {radius} in {group.label} exceeds {cap} elements",
                details={'radius': radius, 'reached_layer': n, 'cap': cap}
            )
        if not found:
            break
        frontier = sorted(found, key=lambda e: e.sort_key)
        layers.append(tuple(frontier))

    logger.debug(f"🔍 Ball r={radius} in {group.label}: {total} elements")
    return tuple(layers)


def ball_layers(group: GroupSpec, generators, radius: int,
                cap: Optional[int] = None) -> List[Tuple[Element, ...]]:
    """BFS layers; layer n holds the elements of word length exactly n.

    Layers stop early once the group is exhausted.
    """
    if radius < 0:
        raise ValueError("Radius must be non-negative")
    max_radius = budget('MAX_RADIUS')
    if radius > max_radius:
        raise BudgetExceeded(
            f"Radius {radius} exceeds the configured maximum {max_radius}"
        )
    key = _generators_key(generators)
    for x in key:
        if x.group != group:
            raise GroupMismatch(f"Generator {x.token} is not in {group.label}")
    return list(_layers(group, key, radius, budget('BALL_CAP', cap)))


def ball(group: GroupSpec, generators, radius: int,
         cap: Optional[int] = None) -> List[Element]:
    """All elements of word length <= radius, identity first, BFS order."""
    return [g for layer in ball_layers(group, generators, radius, cap)
            for g in layer]


def conjugacy_class_in_ball(group: GroupSpec, a: Element, generators,
                            radius: int) -> FrozenSet[Element]:
    """{a^t : t in ball(group, generators, radius)}"""
    if a.is_identity:
        raise ValueError("The conjugacy class search needs a non-identity element")
    return frozenset(conjugate(a, t) for t in ball(group, generators, radius))


def iter_ball(group: GroupSpec, generators, radius: int,
              cap: Optional[int] = None) -> Iterator[Element]:
    """Lazy form of ball(); a layer is only built once the previous one is used up.

    Searches that stop at the first hit never pay for the outer layers.
    """
    if radius < 0:
        raise ValueError("Radius must be non-negative")
    key = _generators_key(generators)
    limit = budget('BALL_CAP', cap)
    start = identity(group)
    yield start

    previous, frontier = {start}, [start]
    total = 1
    for n in range(1, radius + 1):
        found = set()
        for g in frontier:
            for x in key:
                h = g * x
                if h not in previous and h not in found:
                    found.add(h)
        found -= set(frontier)
        if not found:
            return
        total += len(found)
        if total > limit:
            raise BudgetExceeded(
                f"Ball of radius {radius} in {group.label} exceeds {limit} elements",
                details={'radius': radius, 'reached_layer': n, 'cap': limit}
            )
        layer = sorted(found, key=lambda e: e.sort_key)
        yield from layer
        previous, frontier = set(frontier), layer
