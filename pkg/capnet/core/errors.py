"""
Exception hierarchy for capnet.

Every error carries the CLI exit status it maps to.
"""

USAGE_ERROR = 2
INPUT_ERROR = 3


class CapnetError(Exception):
    """Base class for all capnet errors."""
    exit_status = INPUT_ERROR


class GraphParseError(CapnetError, ValueError):
    """Malformed graph input, with the offending line and field."""

    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(f"{prefix}{message}")


class DuplicateEdgeError(GraphParseError):
    pass


class SelfLoopError(GraphParseError):
    pass


class NegativeLoadError(GraphParseError):
    pass


class UnknownNodeError(CapnetError, KeyError):
    def __init__(self, node):
        self.node = node
        super().__init__(f"unknown node: {node!r}")

    def __str__(self):
        return self.args[0]


class EmptyGraphError(CapnetError, ValueError):
    """Density of the empty subgraph is undefined."""


class EdgelessGraphError(CapnetError, ValueError):
    pass


class CliqueSizeError(CapnetError, ValueError):
    pass


class UnsupportedMeasureError(CapnetError, ValueError):
    """Measure is evaluable but has no listing algorithm (k-clique, squared degree)."""


class MeasureSyntaxError(CapnetError, ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class NegativeWeightError(CapnetError, ValueError):
    pass


class InvalidPathError(CapnetError, ValueError):
    pass


class OracleSizeError(CapnetError, ValueError):
    pass


class ScenarioError(CapnetError, ValueError):
    pass


class ConfigError(CapnetError, ValueError):
    """Settings file missing, unreadable or failing validation."""


class InvalidDensityError(CapnetError, ValueError):
    pass
