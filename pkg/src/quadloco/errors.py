"""Exception types shared across the engine."""
from __future__ import annotations


class QuadlocoError(Exception):
    """Base class for all engine errors."""


# --- trace ingestion ---

class TraceError(QuadlocoError):
    pass


class EmptyTrace(TraceError):
    pass


class NonMonotonicTimestamps(TraceError):
    pass


class MalformedRecord(TraceError):
    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class InvalidParams(QuadlocoError):
    pass


# --- calibration / mapping ---

class CalibrationError(QuadlocoError):
    pass


class InsufficientFrames(CalibrationError):
    pass


class CalibrationUnstable(CalibrationError):
    def __init__(self, limb: str, y_range: float, tol: float):
        super().__init__(
            f"{limb} moved {y_range:.3f} m during the hold (tolerance {tol:.3f} m)"
        )
        self.limb = limb
        self.y_range = y_range
        self.tol = tol


class ZeroDt(QuadlocoError):
    pass


class ConfigError(QuadlocoError):
    pass


class InvalidC(ConfigError):
    """Contact zone thickness must be strictly positive."""


# --- levels / service ---

class LevelError(QuadlocoError):
    pass


class BindFailure(QuadlocoError):
    pass
