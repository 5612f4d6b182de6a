"""
Exception hierarchy for ultratree
Every domain failure raised by the library derives from UltratreeError
"""
from typing import Iterable, Optional, Tuple


class UltratreeError(Exception):
    """Base class for all ultratree domain errors"""


class TreeSyntaxError(UltratreeError, ValueError):
    """Malformed finite-tree text"""

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


class NotATreeError(UltratreeError, ValueError):
    """The declared graph has a cycle or is disconnected"""

    def __init__(self, message: str, cycle: Optional[Tuple[str, ...]] = None,
                 component: Optional[Tuple[str, ...]] = None):
        self.cycle = cycle
        self.component = component
        super().__init__(message)

    @classmethod
    def for_cycle(cls, cycle: Iterable[str]) -> "NotATreeError":
        cycle = tuple(cycle)
        return cls(f"not a tree: cycle {','.join(cycle)}", cycle=cycle)

    @classmethod
    def for_component(cls, component: Iterable[str]) -> "NotATreeError":
        component = tuple(sorted(component))
        return cls(f"not a tree: disconnected component {{{','.join(component)}}}",
                   component=component)


class InvalidLabelError(UltratreeError, ValueError):
    """A label is negative, NaN or infinite"""


class UnknownVertexError(UltratreeError, KeyError):
    """A vertex id that does not belong to the tree"""

    def __init__(self, vertex: str):
        self.vertex = vertex
        super().__init__(vertex)

    def __str__(self) -> str:
        return f"unknown vertex: {self.vertex}"


class EmptyVertexSetError(UltratreeError, ValueError):
    """An operation that needs a nonempty vertex set got an empty one"""


class DegenerateLabelingError(UltratreeError):
    """The labeling has an edge whose endpoints are both labeled 0"""

    def __init__(self, edge: Tuple[str, str], operation: str = ""):
        self.edge = edge
        where = f"{operation} requires a non-degenerate labeling; " if operation else ""
        super().__init__(f"{where}degenerate edge {edge[0]} {edge[1]}")


class SchemaSyntaxError(UltratreeError, ValueError):
    """Malformed schema text"""

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


class SchemaError(UltratreeError, ValueError):
    """A schema that parses but violates a schema invariant"""


class OracleSizeError(UltratreeError, ValueError):
    """Instance too large for an exhaustive oracle"""


class UncountableInputError(UltratreeError):
    """Operation needs a countable vertex set"""
