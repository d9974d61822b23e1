"""
Outcome values returned by searches and checks

Every negative result is scoped to the window that was searched; none of
them is a proof of non-existence in the whole group.
"""
from dataclasses import dataclass, fields
from typing import Any, Dict, Optional, Tuple


def _plain(value: Any) -> Any:
    if hasattr(value, 'token'):
        return value.token
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    return value


class Outcome:
    """Mixin giving every outcome a kind tag and a JSON-ready dict"""

    @property
    def kind(self) -> str:
        return type(self).__name__

    def to_dict(self) -> Dict[str, Any]:
        data = {'kind': self.kind}
        for item in fields(self):
            data[item.name] = _plain(getattr(self, item.name))
        return data


@dataclass(frozen=True)
class NotFoundWithinRadius(Outcome):
    radius: int
    checked: int = 0


@dataclass(frozen=True)
class NotFoundWithinDomain(Outcome):
    checked: int = 0


@dataclass(frozen=True)
class NotFound(Outcome):
    checked: int = 0


@dataclass(frozen=True)
class VacuouslySatisfied(Outcome):
    reason: str = ''


@dataclass(frozen=True)
class HoldsOnBall(Outcome):
    radius: int
    checked: int = 0


@dataclass(frozen=True)
class Counterexample(Outcome):
    element: Any


@dataclass(frozen=True)
class BoundedByCOnDomain(Outcome):
    constant: int
    checked: int = 0


@dataclass(frozen=True)
class WitnessAgainst(Outcome):
    element: Any
    left: Any = None
    right: Any = None


@dataclass(frozen=True)
class WordLength(Outcome):
    generators: Tuple[Any, ...]


@dataclass(frozen=True)
class NotWordLengthOnDomain(Outcome):
    element: Any
    reason: Optional[str] = None


@dataclass(frozen=True)
class NoDecomposition(Outcome):
    max_factors: int
    cap: Optional[int] = None
