"""
Finite length tables and the length-function axioms
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

from core.exceptions import GroupMismatch, InsufficientDomain, ParseError
from core.results import BoundedByCOnDomain, WitnessAgainst
from groups.catalog import GroupSpec
from groups.elements import Element, identity, parse_element

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Capped:
    """A value known only to exceed cap"""

    cap: int

    def to_dict(self) -> Dict[str, int]:
        return {'capped': self.cap}

    def __str__(self) -> str:
        return f">{self.cap}"


Value = Union[int, Capped]


def value_to_json(value: Value) -> Any:
    return value.to_dict() if isinstance(value, Capped) else value


def value_from_json(data: Any) -> Value:
    if isinstance(data, dict):
        if 'capped' not in data:
            raise ParseError(f"Invalid table value {data!r}")
        return Capped(int(data['capped']))
    if not isinstance(data, int) or data < 0:
        raise ParseError(f"Table values must be non-negative integers: {data!r}")
    return data


@dataclass(frozen=True)
class LengthTable:
    """A length function known on a finite domain

    exact_radius: BFS radius within which the values are those of the
    represented global length (0: the table is the truth only on its domain).
    complete_below: every g in G with l(g) <= complete_below is in the domain.
    """

    group: GroupSpec
    domain: Tuple[Element, ...]
    values: Dict[Element, Value]
    exact_radius: int = 0
    complete_below: int = 0
    meta: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __contains__(self, g: Element) -> bool:
        return g in self.values

    def __len__(self) -> int:
        return len(self.domain)

    def value(self, g: Element) -> Value:
        try:
            return self.values[g]
        except KeyError:
            raise InsufficientDomain([g])

    def get(self, g: Element, default: Optional[Value] = None) -> Optional[Value]:
        return self.values.get(g, default)

    def known_not_equal(self, g: Element, v: int) -> Optional[bool]:
        """Whether l(g) != v is decided by the table (None: undecided)."""
        if g in self.values:
            current = self.values[g]
            if isinstance(current, Capped):
                return True if v <= current.cap else None
            return current != v
        if v <= self.complete_below:
            return True
        return None

    @property
    def max_value(self) -> int:
        return max((v for v in self.values.values() if isinstance(v, int)),
                   default=0)

    def restrict(self, domain: Iterable[Element]) -> 'LengthTable':
        kept = tuple(g for g in domain if g in self.values)
        return LengthTable(
            self.group, kept, {g: self.values[g] for g in kept},
            exact_radius=0, complete_below=0, meta=dict(self.meta)
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            'group': self.group.to_dict(),
            'entries': [[g.token, value_to_json(self.values[g])]
                        for g in self.domain],
            'exact_radius': self.exact_radius,
            'complete_below': self.complete_below,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'LengthTable':
        group = GroupSpec.from_dict(data['group'])
        domain: List[Element] = []
        values: Dict[Element, Value] = {}
        for token, raw in data.get('entries', []):
            g = parse_element(group, token)
            if g not in values:
                domain.append(g)
            values[g] = value_from_json(raw)
        return cls(
            group, tuple(domain), values,
            exact_radius=int(data.get('exact_radius', 0)),
            complete_below=int(data.get('complete_below', 0)),
        )


@dataclass(frozen=True)
class WindowConstraint:
    """W(l, F): lengths agreeing with base on F"""

    base: LengthTable
    F: Tuple[Element, ...]

    def __post_init__(self):
        missing = [f for f in self.F if f not in self.base]
        if missing:
            raise InsufficientDomain(missing, "Window set is not inside the base domain")

    def mismatches(self, t: LengthTable) -> List[Element]:
        return [f for f in self.F if t.get(f) != self.base.value(f)]

    def holds_for(self, t: LengthTable) -> bool:
        return not self.mismatches(t)


@dataclass(frozen=True)
class Violation:
    axiom: str
    elements: Tuple[str, ...]
    detail: str

    def to_dict(self) -> Dict[str, Any]:
        return {'axiom': self.axiom, 'elements': list(self.elements),
                'detail': self.detail}


@dataclass
class ValidationReport:
    violations: List[Violation] = field(default_factory=list)
    checked_triples: int = 0

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def add(self, axiom: str, elements: Iterable[Element], detail: str):
        self.violations.append(
            Violation(axiom, tuple(g.token for g in elements), detail)
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            'valid': self.is_valid,
            'checked_triples': self.checked_triples,
            'violations': [v.to_dict() for v in self.violations],
        }


def _upper(value: Value) -> Optional[int]:
    return value if isinstance(value, int) else None


def _lower(value: Value) -> int:
    return value.cap + 1 if isinstance(value, Capped) else value


def validate_length_axioms(t: LengthTable) -> ValidationReport:
    """Report every violated instance of the axioms on the table's domain.

    A Capped value stands for "greater than cap" and only produces a
    violation when every value it could take would.
    """
    report = ValidationReport()
    one = identity(t.group)

    if one not in t:
        report.add('L1', [], "identity missing from the domain")
    elif t.values[one] != 0:
        report.add('L1', [one], f"l(1) = {t.values[one]}")

    for g in t.domain:
        if g != one and t.values[g] == 0:
            report.add('L1', [g], "non-identity element of length 0")

        inverse = ~g
        if inverse not in t:
            report.add('closure', [g], "inverse missing from the domain")
            continue
        a, b = t.values[g], t.values[inverse]
        if isinstance(a, Capped) and isinstance(b, Capped):
            continue
        if isinstance(a, Capped) or isinstance(b, Capped):
            capped, exact = (a, b) if isinstance(a, Capped) else (b, a)
            if exact <= capped.cap:
                report.add('L2', [g, inverse], f"{a} vs {b}")
        elif a != b:
            report.add('L2', [g, inverse], f"{a} != {b}")

    for g in t.domain:
        upper_g = _upper(t.values[g])
        if upper_g is None:
            continue
        for h in t.domain:
            upper_h = _upper(t.values[h])
            if upper_h is None:
                continue
            gh = g * h
            if gh not in t:
                continue
            report.checked_triples += 1
            if _lower(t.values[gh]) > upper_g + upper_h:
                report.add(
                    'L3', [g, h, gh],
                    f"l(gh) = {t.values[gh]} > {upper_g} + {upper_h}"
                )

    if report.violations:
        logger.debug(f"❌ {len(report.violations)} axiom violations on {t.group.label}")
    return report


def close_domain(group: GroupSpec, domain: Iterable[Element]) -> List[Element]:
    """Identity first, then the domain in order, then missing inverses."""
    ordered = list(dict.fromkeys([identity(group), *domain]))
    present = set(ordered)
    for g in ordered[:]:
        if g.group != group:
            raise GroupMismatch(f"{g.token} is not in {group.label}")
        if ~g not in present:
            present.add(~g)
            ordered.append(~g)
    return ordered


def constant_table(group: GroupSpec, domain: Iterable[Element], c: int) -> LengthTable:
    """l = c off the identity; c >= 1."""
    if c < 1:
        raise ValueError("A constant length needs c >= 1")
    one = identity(group)
    ordered = close_domain(group, domain)
    values = {g: (0 if g == one else c) for g in ordered}
    complete = c - 1
    if group.is_finite and len(ordered) == group.order:
        complete = c
    return LengthTable(group, tuple(ordered), values,
                       complete_below=complete, meta={'constant': c})


def level_census(t: LengthTable) -> Dict[str, Any]:
    """Value histogram; levels up to complete_below are complete in G."""
    counts = Counter(
        'capped' if isinstance(v, Capped) else v for v in t.values.values()
    )
    levels = {str(k): counts[k] for k in sorted(k for k in counts if k != 'capped')}
    if 'capped' in counts:
        levels['capped'] = counts['capped']
    return {'levels': levels, 'complete_below': t.complete_below}


def is_bounded_on_domain(t: LengthTable, bound: int) -> Union[BoundedByCOnDomain, WitnessAgainst]:
    for g in t.domain:
        value = t.values[g]
        if isinstance(value, Capped) and value.cap >= bound or \
                isinstance(value, int) and value > bound:
            return WitnessAgainst(g, left=str(value), right=bound)
    return BoundedByCOnDomain(bound, len(t.domain))
