"""
Error hierarchy for dezagraphs
Library errors all derive from DezaError; the CLI maps them to exit codes
"""

from typing import Any, List, Optional


class DezaError(Exception):
    """Base class for every error raised by this package"""


class GraphArgumentError(DezaError, ValueError):
    """A vertex, multiplicity or shape argument is out of range"""


class Graph6ParseError(DezaError, ValueError):
    """A graph6 record could not be decoded"""

    def __init__(self, message: str, offset: int, line: Optional[int] = None):
        self.offset = offset
        self.line = line
        self.reason = message
        super().__init__(self._render())

    def _render(self) -> str:
        text = f"invalid graph6 at byte {self.offset}: {self.reason}"
        if self.line is not None:
            return f"line {self.line}: {text}"
        return text

    def at_line(self, line: int) -> "Graph6ParseError":
        return Graph6ParseError(self.reason, self.offset, line)


class DegenerateParametersError(DezaError, ZeroDivisionError):
    """b = a where the computation needs b > a"""


class HypothesisError(DezaError):
    """A standing hypothesis of the requested analysis does not hold"""


class ContradictionError(DezaError):
    """An observation that a structural lemma rules out on valid inputs"""

    def __init__(self, message: str, vertices: Optional[List[int]] = None):
        self.vertices = list(vertices or [])
        super().__init__(message)


class InfeasibleParametersError(DezaError):
    """Parameters that no strictly Deza graph of the family can realize"""

    def __init__(self, report: Any):
        self.report = report
        super().__init__(report.reason)


class ResourceLimitError(DezaError):
    """Requested work exceeds the configured resource ceiling"""


class PartialResultError(ResourceLimitError):
    """The search budget ran out; `partial` holds what was found before"""

    def __init__(self, message: str, partial: List[Any]):
        self.partial = partial
        super().__init__(message)
