"""
Standardized result envelope for every experiment command

The envelope mirrors the success/error response shape used for API
payloads: a success flag, a message, the data and, on failure, an error
code with details. Exit codes separate mathematical outcomes scoped to a
search window (1) from operational errors (2).
"""
import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from .exceptions import LengthLabError

logger = logging.getLogger(__name__)


class ExitCodes:
    """Process exit codes of the command line"""

    SUCCESS = 0
    NOT_FOUND = 1
    CONFIGURATION_ERROR = 2


class Messages:
    """Common result messages for consistency"""

    COMPLETED = "Experiment completed"
    WITNESS_FOUND = "Witness found"
    NOT_FOUND = "Nothing found inside the search window"
    CHECKS_FAILED = "At least one check failed"
    INVALID_CONFIG = "Invalid experiment configuration"


class ErrorCodes:
    NOT_FOUND = "NOT_FOUND"
    CHECKS_FAILED = "CHECKS_FAILED"
    VALIDATION_ERROR = "VALIDATION_ERROR"
    CONFIGURATION_ERROR = "CONFIGURATION_ERROR"


@dataclass
class CommandResult:
    """Outcome of one experiment, ready to print or write as an artifact

    dot and text carry the alternative renderings; the JSON form never
    holds timestamps so that identical configs give identical bytes.
    """

    success: bool
    message: str
    data: Any = None
    exit_code: int = ExitCodes.SUCCESS
    error_code: Optional[str] = None
    details: Dict[str, Any] = field(default_factory=dict)
    dot: Optional[str] = None
    text: Optional[str] = None

    @classmethod
    def ok(cls, data: Any = None, message: str = Messages.COMPLETED,
           dot: Optional[str] = None, text: Optional[str] = None) -> 'CommandResult':
        return cls(True, message, data, ExitCodes.SUCCESS, dot=dot, text=text)

    @classmethod
    def not_found(cls, data: Any = None, message: str = Messages.NOT_FOUND,
                  error_code: str = ErrorCodes.NOT_FOUND,
                  text: Optional[str] = None) -> 'CommandResult':
        """Window-scoped negative outcome or a failed check (exit 1)."""
        return cls(False, message, data, ExitCodes.NOT_FOUND,
                   error_code=error_code, text=text)

    @classmethod
    def error(cls, message: str, error_code: str = ErrorCodes.CONFIGURATION_ERROR,
              details: Optional[Dict[str, Any]] = None) -> 'CommandResult':
        logger.error(f"❌ {message} (Code: {error_code}) - Details: {details}")
        return cls(False, message, None, ExitCodes.CONFIGURATION_ERROR,
                   error_code=error_code, details=details or {})

    @classmethod
    def from_exception(cls, exc: LengthLabError) -> 'CommandResult':
        return cls.error(exc.message, exc.error_code, exc.details)

    @classmethod
    def validation_error(cls, errors: Dict[str, Any],
                         message: str = Messages.INVALID_CONFIG) -> 'CommandResult':
        logger.warning(f"⚠️ Validation Error: {errors}")
        return cls(False, message, None, ExitCodes.CONFIGURATION_ERROR,
                   error_code=ErrorCodes.VALIDATION_ERROR, details=errors)

    @classmethod
    def from_report(cls, report, message: Optional[str] = None) -> 'CommandResult':
        """Exit 0 when every check of a construction report passed."""
        data = report.to_dict()
        if report.overall:
            return cls.ok(data, message or Messages.COMPLETED, text=report.render())
        return cls.not_found(
            data, message or Messages.CHECKS_FAILED,
            error_code=ErrorCodes.NOT_FOUND if report.outcome is not None
            else ErrorCodes.CHECKS_FAILED,
            text=report.render(),
        )

    def to_dict(self) -> Dict[str, Any]:
        payload = {
            'success': self.success,
            'message': self.message,
            'exit_code': self.exit_code,
            'data': self.data,
        }
        if self.error_code:
            payload['error_code'] = self.error_code
        if self.details:
            payload['details'] = self.details
        return payload

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def render(self, output_format: str = 'json') -> str:
        if output_format == 'dot':
            if self.dot is None:
                raise ValueError("This result has no graph to draw")
            return self.dot
        if output_format == 'text':
            if self.text is not None:
                return self.text
            return f"{self.message}\n{json.dumps(self.data, indent=2, ensure_ascii=False)}"
        return self.to_json()
