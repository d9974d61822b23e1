"""
Elements of G*<x> in alternating-syllable normal form
"""
import re
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

from core.exceptions import GroupMismatch, ParseError
from groups.catalog import GroupSpec
from groups.elements import Element, identity, parse_element, power
from groups.parsing import split_top_level

Syllable = Union[Element, int]

X_TOKEN = re.compile(r'^x(?:\^?(-?\d+))?$')


@dataclass(frozen=True)
class GStarWord:
    """Alternating syllables: group elements != 1 and nonzero powers of x"""

    group: GroupSpec
    syllables: Tuple[Syllable, ...] = ()

    @property
    def is_trivial(self) -> bool:
        return not self.syllables

    @property
    def letter_length(self) -> int:
        """Total exponent of x plus the syllable count of the group part."""
        return sum(abs(s) if isinstance(s, int) else 1 for s in self.syllables)

    @property
    def text(self) -> str:
        return format_gstar(self)

    def __mul__(self, other: 'GStarWord') -> 'GStarWord':
        return multiply_words(self, other)

    def __invert__(self) -> 'GStarWord':
        return invert_word(self)

    def __str__(self) -> str:
        return self.text

    def to_dict(self) -> Dict[str, Any]:
        return {'group': self.group.to_dict(), 'word': self.text}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'GStarWord':
        return parse_gstar(GroupSpec.from_dict(data['group']), data['word'])


def normalize(raw: Iterable[Syllable], group: Optional[GroupSpec] = None) -> GStarWord:
    """Merge adjacent syllables of the same kind and drop trivial ones."""
    stack: List[Syllable] = []
    for item in raw:
        if isinstance(item, Element):
            if group is None:
                group = item.group
            elif item.group != group:
                raise GroupMismatch(
                    f"Syllable {item.token} is not in {group.label}"
                )
            if item.is_identity:
                continue
            if stack and isinstance(stack[-1], Element):
                merged = stack.pop() * item
                if not merged.is_identity:
                    stack.append(merged)
            else:
                stack.append(item)
        elif isinstance(item, int):
            if item == 0:
                continue
            if stack and isinstance(stack[-1], int):
                merged = stack.pop() + item
                if merged:
                    stack.append(merged)
            else:
                stack.append(item)
        else:
            raise ParseError(f"Invalid G*<x> syllable {item!r}")

    if group is None:
        raise ParseError("A G*<x> word without group syllables needs its group")
    return GStarWord(group, tuple(stack))


def evaluate(w: GStarWord, g: Element) -> Element:
    """Image of w under the homomorphism fixing G and sending x to g."""
    if g.group != w.group:
        raise GroupMismatch(f"{g.token} is not in {w.group.label}")
    result = identity(w.group)
    for syllable in w.syllables:
        if isinstance(syllable, int):
            result = result * power(g, syllable)
        else:
            result = result * syllable
    return result


def x_power(group: GroupSpec, k: int = 1) -> GStarWord:
    return normalize([k], group)


def constant(g: Element) -> GStarWord:
    return normalize([g], g.group)


def multiply_words(u: GStarWord, v: GStarWord) -> GStarWord:
    if u.group != v.group:
        raise GroupMismatch(f"{u.group.label} and {v.group.label} differ")
    return normalize(u.syllables + v.syllables, u.group)


def invert_word(w: GStarWord) -> GStarWord:
    inverted = [-s if isinstance(s, int) else ~s for s in reversed(w.syllables)]
    return GStarWord(w.group, tuple(inverted))


def commutator_word(u: GStarWord, v: GStarWord) -> GStarWord:
    """[u, v] = u^-1 v^-1 u v"""
    return invert_word(u) * invert_word(v) * u * v


def parse_gstar(group: GroupSpec, text: str) -> GStarWord:
    """Parse e.g. "a^-1 x^-1 a x"; group syllables use the element grammar."""
    raw: List[Syllable] = []
    for token in split_top_level(text, ' '):
        match = X_TOKEN.match(token)
        if match:
            raw.append(int(match.group(1)) if match.group(1) else 1)
        else:
            raw.append(parse_element(group, token))
    return normalize(raw, group)


def format_gstar(w: GStarWord) -> str:
    if w.is_trivial:
        return '1'
    parts = []
    for syllable in w.syllables:
        if isinstance(syllable, int):
            parts.append('x' if syllable == 1 else f"x^{syllable}")
        else:
            parts.append(syllable.token)
    return ' '.join(parts)
