"""
Symmetric generating sets and their generation certificates
"""
import logging
from dataclasses import dataclass, replace
from typing import Iterable, List, Tuple

from core.conf import budget
from core.exceptions import GroupMismatch, ParseError
from .catalog import GroupSpec
from .elements import Element, identity, parse_element
from .parsing import split_top_level

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratingSet:
    """Finite symmetric set of non-identity elements, sorted canonically"""

    group: GroupSpec
    elements: Tuple[Element, ...]
    is_verified_generating: bool = False

    @classmethod
    def build(cls, group: GroupSpec, elements: Iterable[Element],
              verify: bool = True) -> 'GeneratingSet':
        """Symmetrize, drop the identity and sort; optionally certify."""
        closed = set()
        for x in elements:
            if x.group != group:
                raise GroupMismatch(f"{x.token} is not an element of {group.label}")
            if not x.is_identity:
                closed.add(x)
                closed.add(~x)
        generating_set = cls(
            group, tuple(sorted(closed, key=lambda e: e.sort_key))
        )
        return generating_set.verify() if verify else generating_set

    @classmethod
    def parse(cls, group: GroupSpec, text: str,
              verify: bool = True) -> 'GeneratingSet':
        """Comma-separated element tokens; inverses are added automatically."""
        tokens = split_top_level(text, ',')
        if not tokens:
            raise ParseError("A generating set needs at least one element")
        return cls.build(group, [parse_element(group, t) for t in tokens], verify)

    def verify(self) -> 'GeneratingSet':
        """Return a copy whose flag records the generation certificate.

        Finite groups: the closure census equals the group order.
        Infinite groups: every standard generator lies in a bounded ball.
        """
        from .enumeration import ball

        if not self.elements:
            return replace(self, is_verified_generating=False)

        if self.group.is_finite:
            census = set(self._closure())
            verified = len(census) == self.group.order
        else:
            radius = budget('GENERATION_RADIUS')
            reach = set(ball(self.group, self, radius))
            verified = all(s in reach for s in standard_generators(self.group))

        if not verified:
            logger.info(
                f"⚠️ {self.token} not certified as generating {self.group.label}"
            )
        return replace(self, is_verified_generating=verified)

    def _closure(self) -> List[Element]:
        start = identity(self.group)
        seen = {start}
        frontier = [start]
        while frontier:
            new = []
            for g in frontier:
                for x in self.elements:
                    h = g * x
                    if h not in seen:
                        seen.add(h)
                        new.append(h)
            frontier = new
        return list(seen)

    @property
    def token(self) -> str:
        return ','.join(x.token for x in self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item) -> bool:
        return item in self.elements

    def to_dict(self) -> dict:
        return {
            'group': self.group.to_dict(),
            'elements': [x.token for x in self.elements],
            'is_verified_generating': self.is_verified_generating,
        }


def standard_generators(group: GroupSpec) -> GeneratingSet:
    """The catalog's default symmetric generating set, certified by construction."""
    elements = [Element(group, w) for w in group.arithmetic.generators()]
    generating_set = GeneratingSet.build(group, elements, verify=False)
    return replace(generating_set, is_verified_generating=True)
