"""
Symmetric weight functions with finite support and a default rule
"""
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, Dict, FrozenSet, List, Mapping, Tuple, Union

from core.conf import budget
from core.exceptions import BudgetExceeded, GroupMismatch, ParseError, PreconditionFailed
from groups.catalog import GroupSpec
from groups.elements import Element, conjugate, parse_element
from groups.enumeration import iter_ball
from groups.generating import standard_generators

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Constant:
    """Every off-support element weighs value"""

    value: int

    def to_dict(self) -> Dict[str, Any]:
        return {'rule': 'constant', 'M': self.value}


@dataclass(frozen=True)
class ProperRamp:
    """The i-th off-support inverse pair, in BFS order, weighs base + i"""

    base: int

    def to_dict(self) -> Dict[str, Any]:
        return {'rule': 'ramp', 'M0': self.base}


DefaultRule = Union[Constant, ProperRamp]


def default_from_dict(data: Mapping[str, Any]) -> DefaultRule:
    rule = data.get('rule')
    if rule == 'constant':
        return Constant(int(data['M']))
    if rule == 'ramp':
        return ProperRamp(int(data['M0']))
    raise ParseError(f"Unknown default rule {rule!r}")


@lru_cache(maxsize=128)
def ramp_pairs(group: GroupSpec, excluded: FrozenSet[Element],
               count: int) -> Tuple[Element, ...]:
    """First count off-support inverse pairs in standard BFS order.

    Each pair is represented by its BFS-first member.
    """
    index_cap = budget('RAMP_INDEX_CAP')
    if count > index_cap:
        raise BudgetExceeded(
            f"Ramp index {count} exceeds the configured cap {index_cap}"
        )
    pairs: List[Element] = []
    seen = set()
    X = standard_generators(group)
    for g in iter_ball(group, X, budget('MAX_RADIUS')):
        if len(pairs) >= count:
            break
        if g.is_identity or g in excluded or g in seen:
            continue
        seen.add(g)
        seen.add(~g)
        pairs.append(g)
    return tuple(pairs)


@dataclass(frozen=True)
class WeightSpec:
    """omega: support values plus a default rule, omega(g) = omega(g^-1)"""

    group: GroupSpec
    support: Tuple[Tuple[Element, int], ...]
    default: DefaultRule

    def __post_init__(self):
        mapping = {}
        for g, w in self.support:
            if g.group != self.group:
                raise GroupMismatch(f"{g.token} is not in {self.group.label}")
            if g.is_identity:
                raise ValueError("The identity cannot carry a weight")
            if not isinstance(w, int) or w < 1:
                raise ValueError(f"Weight of {g.token} must be a positive integer")
            mapping[g] = w
        for g, w in mapping.items():
            if mapping.get(~g) != w:
                raise ValueError(f"Support is not symmetric at {g.token}")
        floor = self.default.value if isinstance(self.default, Constant) \
            else self.default.base + 1
        if floor < 1:
            raise ValueError("Default weights must be positive")

    @classmethod
    def build(cls, group: GroupSpec, mapping: Mapping[Element, int],
              default: DefaultRule) -> 'WeightSpec':
        """Add missing inverses and sort the support canonically."""
        full: Dict[Element, int] = {}
        for g, w in mapping.items():
            for h in (g, ~g):
                if h in full and full[h] != w:
                    raise ValueError(f"Conflicting weights for {h.token}")
                full[h] = w
        support = tuple(sorted(full.items(), key=lambda item: item[0].sort_key))
        return cls(group, support, default)

    @cached_property
    def support_map(self) -> Dict[Element, int]:
        return dict(self.support)

    @cached_property
    def _excluded(self) -> FrozenSet[Element]:
        return frozenset(self.support_map)

    def ramp_index(self, g: Element) -> int:
        """1-based pair index of an off-support element under the ramp."""
        count = 64
        index_cap = budget('RAMP_INDEX_CAP')
        while True:
            pairs = ramp_pairs(self.group, self._excluded, min(count, index_cap))
            for i, h in enumerate(pairs, start=1):
                if h == g or h == ~g:
                    return i
            if len(pairs) < min(count, index_cap) or count >= index_cap:
                raise BudgetExceeded(
                    f"{g.token} is beyond the enumerated ramp window"
                )
            count *= 2

    def weight(self, g: Element) -> int:
        if g.group != self.group:
            raise GroupMismatch(f"{g.token} is not in {self.group.label}")
        if g.is_identity:
            return 0
        if g in self.support_map:
            return self.support_map[g]
        if isinstance(self.default, Constant):
            return self.default.value
        return self.default.base + self.ramp_index(g)

    __call__ = weight

    def light_elements(self, bound: int) -> List[Tuple[Element, int]]:
        """All (h, omega(h)) with omega(h) <= bound, for a finite such set."""
        light = [(g, w) for g, w in self.support if w <= bound]
        if isinstance(self.default, Constant):
            if self.default.value <= bound:
                raise ValueError(
                    "Every off-support element is light; the set is infinite"
                )
            return light
        count = bound - self.default.base
        if count > 0:
            pairs = ramp_pairs(self.group, self._excluded, count)
            for i, g in enumerate(pairs, start=1):
                w = self.default.base + i
                light.append((g, w))
                if ~g != g:
                    light.append((~g, w))
        return light

    def to_dict(self) -> Dict[str, Any]:
        return {
            'group': self.group.to_dict(),
            'support': [[g.token, w] for g, w in self.support],
            'default': self.default.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'WeightSpec':
        group = GroupSpec.from_dict(data['group'])
        mapping = {}
        for token, w in data.get('support', []):
            mapping[parse_element(group, token)] = int(w)
        return cls.build(group, mapping, default_from_dict(data['default']))


def constant_weight(group: GroupSpec, mapping: Mapping[Element, int], M: int) -> WeightSpec:
    return WeightSpec.build(group, mapping, Constant(M))


def conjugate_weight(g: Element, omega: WeightSpec) -> WeightSpec:
    """(g o omega)(x) = omega(g^-1 x g); ramps are not conjugation invariant."""
    if not isinstance(omega.default, Constant):
        raise PreconditionFailed("Only constant-default weights can be conjugated")
    inverse = ~g
    moved = {conjugate(s, inverse): w for s, w in omega.support}
    return WeightSpec.build(omega.group, moved, omega.default)
