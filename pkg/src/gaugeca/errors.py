"""Exception hierarchy shared by every module."""


class GaugeCAError(Exception):
    """Base class for all library errors."""


class InvalidArgumentError(GaugeCAError, ValueError):
    """An argument violates a precondition (range, bijection, dimensions)."""


class ResourceLimitError(GaugeCAError):
    """A requested enumeration exceeds its configured bound."""

    def __init__(self, message, cardinality=None):
        super().__init__(message)
        self.cardinality = cardinality


class ScenarioError(InvalidArgumentError):
    """A scenario file could not be parsed or validated."""

    def __init__(self, message, line=None, field=None):
        prefix = f"line {line}: " if line else ""
        super().__init__(prefix + message)
        self.line = line
        self.field = field
