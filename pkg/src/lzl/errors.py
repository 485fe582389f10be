"""Exception types shared across the package."""


class LzlError(Exception):
    """Base class for package errors."""


class GraphParseError(LzlError):
    """Malformed graph file. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphValidationError(LzlError):
    """Structurally valid input describing an unacceptable graph."""


class SizeCapError(LzlError):
    """Instance exceeds a configured size cap."""

    def __init__(self, what: str, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class PartialProfileError(LzlError):
    """An operation required a fully exact profile but got a truncated one."""


class ScheduleError(LzlError):
    """A probe schedule violates its declared contract."""


class PolicyError(LzlError):
    """A policy emitted an invalid probe set."""


class StrategyPreconditionError(LzlError):
    """A strategy generator was invoked outside its preconditions."""


class SeparatorContractError(LzlError):
    """A separator oracle returned sets violating the (A, B, C) contract."""


class GridVerificationError(LzlError):
    """Grid sweep schedule failed mechanical verification."""

    def __init__(self, message: str, trace=None):
        self.trace = trace
        super().__init__(message)


class InconsistentBoundsError(LzlError):
    """A derived lower bound exceeds a derived upper bound for the same target."""
