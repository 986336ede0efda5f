"""Exception hierarchy for inheritance nets."""

from __future__ import annotations


class InheritanceError(Exception):
    """Base class for every error raised by this package."""


class DiagramError(InheritanceError):
    """A structural problem with a diagram.

    ``line`` is filled in by the parser when the offending arrow or node
    came from net source text.
    """

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.message = message
        self.line = line

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        return f"line {self.line}: {self.message}"


class CycleError(DiagramError):
    def __init__(self, cycle: list[str], line: int | None = None):
        self.cycle = cycle
        super().__init__("cycle: " + " -> ".join(cycle), line)


class HardContradictionError(DiagramError):
    def __init__(self, source: str, target: str, line: int | None = None):
        self.pair = (source, target)
        super().__init__(
            f"hard contradiction: both {source} -> {target} and {source} !> {target}", line
        )


class DuplicateArrowError(DiagramError):
    pass


class DuplicateNodeError(DiagramError):
    pass


class SelfLoopError(DiagramError):
    pass


class UnknownNodeError(InheritanceError):
    def __init__(self, name: str):
        super().__init__(f"unknown node: {name!r}")
        self.name = name


class EndpointMismatchError(InheritanceError):
    pass


class PathNotInDiagramError(InheritanceError):
    pass


class MixedDiagramError(InheritanceError):
    pass


class ResourceLimitError(InheritanceError):
    pass


class ConfigurationError(InheritanceError):
    pass


class DuplicateSourceError(InheritanceError):
    pass


class EmptyClaimsError(InheritanceError):
    pass


class NetSyntaxError(InheritanceError):
    """Malformed net source text."""

    def __init__(self, line: int, column: int, expected: str, found: str = ""):
        self.line = line
        self.column = column
        self.expected = expected
        self.found = found
        detail = f", found {found!r}" if found else ""
        super().__init__(f"line {line}, column {column}: expected {expected}{detail}")
