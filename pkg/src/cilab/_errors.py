"""
Exception hierarchy for cilab.

Every error subclasses CilabError and the closest builtin, so callers may
catch either.
"""

from typing import Optional


class CilabError(Exception):
    """Root of all cilab errors."""


class WrongLength(CilabError, ValueError):
    """Entry sequence does not have order² (or order) items."""


class EntryOutOfRange(CilabError, ValueError):
    """A table or map entry lies outside {0..n-1}."""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class OrderMismatch(CilabError, ValueError):
    """Two operands have different orders."""


class NotBijective(CilabError, ValueError):
    """A map that must be a permutation has a repeated image."""


class PreconditionViolated(CilabError, ValueError):
    """A debug-mode precondition check failed."""


class NotALoop(CilabError, ValueError):
    """The table has no two-sided identity element."""


class OrderTooLarge(CilabError, ValueError):
    """The requested order exceeds the cap for the operation."""

    def __init__(self, order: int, limit: int, what: str):
        super().__init__(f"{what}: order {order} exceeds the cap of {limit}")
        self.order = order
        self.limit = limit
        self.what = what

    def __reduce__(self):
        return (type(self), (self.order, self.limit, self.what))


class AmbiguousJ(CilabError, RuntimeError):
    """More than one J candidate for an element; J should be unique."""

    def __init__(self, element: int, candidates):
        super().__init__(
            f"element {element} admits several J values {list(candidates)}"
        )
        self.element = element
        self.candidates = tuple(candidates)

    def __reduce__(self):
        return (type(self), (self.element, self.candidates))


class InvalidWorkerCount(CilabError, ValueError):
    """Worker count below one."""

    def __init__(self, count: int):
        super().__init__(f"worker count must be at least 1, got {count}")
        self.count = count

    def __reduce__(self):
        return (type(self), (self.count,))


class NodeLimitExceeded(CilabError, RuntimeError):
    """The propagation search visited more nodes than allowed."""

    def __init__(self, limit: int):
        super().__init__(f"search exceeded the node limit of {limit}")
        self.limit = limit

    def __reduce__(self):
        return (type(self), (self.limit,))


# ---------------------------------------------------------------------------
# Parse errors (table text grammar)
# ---------------------------------------------------------------------------

class ParseError(CilabError, ValueError):
    """Malformed table text; carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class BadHeader(ParseError):
    """Missing or malformed order line."""


class BadRow(ParseError):
    """Missing row, wrong token count, or non-integer token."""


class BadJLine(ParseError):
    """Malformed `J:` line, or unexpected text after the rows."""
