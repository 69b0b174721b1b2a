class ShapeShiftError(Exception):
    """Base class for all package errors."""


class ConfigurationError(ShapeShiftError):
    """Invalid configuration value or inconsistent config combination."""


class ShapeError(ShapeShiftError):
    """Array shape violates an operation's contract."""


class StateError(ShapeShiftError):
    """Mismatched or corrupt mutable state (e.g. teacher/student key sets)."""


class TrainingError(ShapeShiftError):
    """Non-recoverable failure during optimization (e.g. non-finite gradient)."""


class ScheduleError(ShapeShiftError):
    """Learning-rate schedule queried outside its valid range."""


class FormatError(ShapeShiftError):
    """Malformed file: checkpoint container, metrics CSV, or manifest."""
