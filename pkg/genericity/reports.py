"""
Audit trail for the construction kernels
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from core.results import Outcome
from groups.elements import Element
from lengths.tables import Capped
from lengths.weights import WeightSpec

logger = logging.getLogger(__name__)

REJECTION_LOG_LIMIT = 100

ACCEPTED = 'accepted'
VACUOUS = 'vacuous'
NOT_FOUND = 'not_found'
COMPLETED = 'completed'


def plain(value: Any) -> Any:
    """JSON-ready form of elements, capped values and containers."""
    if isinstance(value, Element):
        return value.token
    if isinstance(value, Capped):
        return str(value)
    if isinstance(value, Outcome):
        return value.to_dict()
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [plain(v) for v in value]
        return sorted(items, key=str) if isinstance(value, (set, frozenset)) else items
    if hasattr(value, 'item'):
        return value.item()
    return value


@dataclass
class Check:
    description: str
    expected: Any
    actual: Any

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> Dict[str, Any]:
        return {
            'description': self.description,
            'expected': plain(self.expected),
            'actual': plain(self.actual),
            'passed': self.passed,
        }


@dataclass
class ConstructionReport:
    """Inputs, witness, weight and every check a kernel ran

    overall is the conjunction of the checks; kernels that find nothing
    record a failing "witness found" check.
    """

    kernel: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    status: str = COMPLETED
    witness: Optional[Element] = None
    weight: Optional[WeightSpec] = None
    checks: List[Check] = field(default_factory=list)
    rejected: List[Dict[str, str]] = field(default_factory=list)
    rejected_count: int = 0
    notes: Dict[str, Any] = field(default_factory=dict)
    outcome: Optional[Outcome] = None

    def check(self, description: str, expected: Any, actual: Any) -> bool:
        item = Check(description, expected, actual)
        self.checks.append(item)
        if not item.passed:
            logger.debug(f"❌ {self.kernel}: {description}: expected {expected}, got {actual}")
        return item.passed

    def reject(self, candidate: Element, reason: str):
        self.rejected_count += 1
        if len(self.rejected) < REJECTION_LOG_LIMIT:
            self.rejected.append({'candidate': candidate.token, 'reason': reason})

    def accept(self, witness: Element, weight: Optional[WeightSpec] = None):
        self.status = ACCEPTED
        self.witness = witness
        self.weight = weight

    def not_found(self, outcome: Outcome):
        self.status = NOT_FOUND
        self.outcome = outcome
        self.check('witness found inside the search window', True, False)

    @property
    def overall(self) -> bool:
        return all(item.passed for item in self.checks)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'kernel': self.kernel,
            'inputs': plain(self.inputs),
            'status': self.status,
            'witness': self.witness.token if self.witness is not None else None,
            'weight': self.weight.to_dict() if self.weight is not None else None,
            'checks': [item.to_dict() for item in self.checks],
            'rejected': self.rejected,
            'rejected_count': self.rejected_count,
            'notes': plain(self.notes),
            'outcome': self.outcome.to_dict() if self.outcome is not None else None,
            'overall': self.overall,
        }

    def render(self) -> str:
        """Human-readable table for the command line."""
        lines = [f"{self.kernel}: {self.status} ({'PASS' if self.overall else 'FAIL'})"]
        if self.witness is not None:
            lines.append(f"  witness: {self.witness.token}")
        width = max((len(item.description) for item in self.checks), default=0)
        for item in self.checks:
            mark = 'ok ' if item.passed else 'BAD'
            lines.append(
                f"  [{mark}] {item.description.ljust(width)}  "
                f"expected {plain(item.expected)!s}, got {plain(item.actual)!s}"
            )
        if self.rejected_count:
            lines.append(f"  rejected candidates: {self.rejected_count}")
        return "\n".join(lines)
