"""
Exception hierarchy for lengthlab

Window-scoped negative outcomes (nothing found inside a radius) are result
values in core.results; the classes here signal misuse or exhausted budgets.
"""
from typing import Iterable, List, Optional


class LengthLabError(Exception):
    """Base class carrying a stable error code"""

    error_code = 'LENGTHLAB_ERROR'

    def __init__(self, message: str = '', details: Optional[dict] = None):
        super().__init__(message or self.error_code)
        self.message = message or self.error_code
        self.details = details or {}

    def to_dict(self) -> dict:
        data = {'error': self.message, 'error_code': self.error_code}
        if self.details:
            data['details'] = self.details
        return data


class GroupMismatch(LengthLabError, ValueError):
    error_code = 'GROUP_MISMATCH'


class ParseError(LengthLabError, ValueError):
    error_code = 'PARSE_ERROR'


class BudgetExceeded(LengthLabError):
    error_code = 'BUDGET_EXCEEDED'


class TrivialWordInI(LengthLabError, ValueError):
    error_code = 'TRIVIAL_WORD'


class CapTooSmall(LengthLabError):
    error_code = 'CAP_TOO_SMALL'


class DefaultTooSmall(LengthLabError, ValueError):
    error_code = 'DEFAULT_TOO_SMALL'


class EmptyDomain(LengthLabError):
    error_code = 'EMPTY_DOMAIN'


class InsufficientDomain(LengthLabError):
    """Raised when a value needed for a decision is missing from a table"""

    error_code = 'INSUFFICIENT_DOMAIN'

    def __init__(self, missing: Iterable, message: str = ''):
        self.missing: List = list(missing)
        tokens = [getattr(item, 'token', str(item)) for item in self.missing]
        super().__init__(
            message or f"{len(tokens)} value(s) outside the table domain",
            details={'missing': tokens[:50]}
        )


class LengthMismatch(LengthLabError, ValueError):
    error_code = 'LENGTH_MISMATCH'


class PreconditionFailed(LengthLabError, ValueError):
    error_code = 'PRECONDITION_FAILED'


class ClassNotStabilized(LengthLabError):
    error_code = 'CLASS_NOT_STABILIZED'


class DomainGap(LengthLabError):
    error_code = 'DOMAIN_GAP'


class ConfigurationError(LengthLabError, ValueError):
    error_code = 'CONFIGURATION_ERROR'
