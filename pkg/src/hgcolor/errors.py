"""Shared exception types.

Exit-code mapping used by the CLI: invalid instances -> 2, budget/range
errors -> 3, IO/parse errors -> 4.
"""


class InvalidHypergraphError(ValueError):
    """Raised when an operation requires a valid hypergraph and gets one with errors."""


class UncoloredVertexError(ValueError):
    """A coloring does not cover every vertex of the hypergraph."""


class BudgetExceededError(RuntimeError):
    """An exact computation would exceed (or exceeded) its configured budget."""


class ChainCeilingError(RuntimeError):
    """Chain enumeration passed the configured ceiling; results would be truncated."""

    def __init__(self, ceiling: int):
        super().__init__(f"chain enumeration exceeded ceiling of {ceiling}")
        self.ceiling = ceiling


class NumericRangeError(ValueError):
    """A quantity left the representable floating-point range; use the log-space API."""


class HypergraphFormatError(ValueError):
    """Malformed hypergraph text; carries the 1-based offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
