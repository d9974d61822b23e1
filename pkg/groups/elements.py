"""
Group elements and the operations on them
"""
from dataclasses import dataclass
from typing import Any

from core.exceptions import GroupMismatch
from .catalog import GroupSpec


@dataclass(frozen=True)
class Element:
    """An element of a catalog group, stored in canonical normal form"""

    group: GroupSpec
    word: Any

    @classmethod
    def from_raw(cls, group: GroupSpec, raw: Any) -> 'Element':
        return cls(group, group.arithmetic.normalize(raw))

    @property
    def token(self) -> str:
        return self.group.arithmetic.format(self.word)

    @property
    def sort_key(self) -> tuple:
        return self.group.arithmetic.sort_key(self.word)

    @property
    def is_identity(self) -> bool:
        return self.group.arithmetic.is_identity(self.word)

    def __mul__(self, other: 'Element') -> 'Element':
        return multiply(self, other)

    def __invert__(self) -> 'Element':
        return inverse(self)

    def __pow__(self, n: int) -> 'Element':
        return power(self, n)

    def __str__(self) -> str:
        return self.token

    def __repr__(self) -> str:
        return f"Element({self.group.label}, {self.token!r})"


def _same_group(a: Element, b: Element):
    if a.group != b.group:
        raise GroupMismatch(
            f"Elements of {a.group.label} and {b.group.label} cannot be combined"
        )


def identity(group: GroupSpec) -> Element:
    return Element(group, group.arithmetic.identity())


def multiply(a: Element, b: Element) -> Element:
    _same_group(a, b)
    return Element(a.group, a.group.arithmetic.multiply(a.word, b.word))


def inverse(a: Element) -> Element:
    return Element(a.group, a.group.arithmetic.inverse(a.word))


def conjugate(a: Element, b: Element) -> Element:
    """a^b = b^-1 a b"""
    _same_group(a, b)
    return inverse(b) * a * b


def power(a: Element, n: int) -> Element:
    return Element(a.group, a.group.arithmetic.power(a.word, n))


def commutator(a: Element, b: Element) -> Element:
    """[a, b] = a^-1 b^-1 a b"""
    _same_group(a, b)
    return inverse(a) * inverse(b) * a * b


def parse_element(group: GroupSpec, token: str) -> Element:
    return Element(group, group.arithmetic.parse(token))


def elements(group: GroupSpec):
    """All elements of a finite catalog group, in normal-form order."""
    return sorted(
        (Element(group, w) for w in group.arithmetic.elements()),
        key=lambda e: e.sort_key
    )
