"""Aligns 30 Hz sensor samples with the faster physics tick.

A sample is delivered on the first tick whose time has reached the sample's
timestamp, and never again; ticks between samples see nothing, which is what
lets the mapper hold velocity overrides until fresh input arrives.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Protocol

from quadloco.errors import InvalidParams
from quadloco.ingest.trace import SkeletonFrame, TrackedSequence


@dataclass
class SampleClock:
    sensor_rate: float
    physics_rate: float
    cursor: int = 0

    def __post_init__(self) -> None:
        if self.sensor_rate <= 0 or self.physics_rate <= 0:
            raise InvalidParams("rates must be positive")
        if self.physics_rate < self.sensor_rate:
            raise InvalidParams("physics rate must be >= sensor rate")


def next_sample(clock: SampleClock, seq: TrackedSequence,
                tick_time: float) -> Optional[SkeletonFrame]:
    """Return the next undelivered frame whose timestamp <= tick_time.

    At most one frame per call; each frame is delivered exactly once. After
    the sequence ends this returns None forever.
    """
    if clock.cursor >= len(seq.frames):
        return None
    frame = seq.frames[clock.cursor]
    if frame.timestamp <= tick_time:
        clock.cursor += 1
        return frame
    return None


class InputSource(Protocol):
    """Per-tick frame supplier the session pulls from."""

    def next_frame(self, tick_time: float) -> Optional[SkeletonFrame]: ...

    def exhausted(self) -> bool: ...


@dataclass
class TraceSource:
    """Plays back a recorded or generated sequence through a SampleClock."""

    seq: TrackedSequence
    physics_rate: float = 60.0
    clock: SampleClock = field(init=False)

    def __post_init__(self) -> None:
        self.clock = SampleClock(self.seq.nominal_rate, self.physics_rate)

    def next_frame(self, tick_time: float) -> Optional[SkeletonFrame]:
        return next_sample(self.clock, self.seq, tick_time)

    def exhausted(self) -> bool:
        return self.clock.cursor >= len(self.seq.frames)


class CycleSource:
    """Loops a base sequence forever, rebasing timestamps onto the sample grid.

    Used by the benchmark so arbitrarily long runs don't need materialized
    frames.
    """

    def __init__(self, base: TrackedSequence, physics_rate: float = 60.0):
        if not base.frames:
            raise InvalidParams("cycle source needs a non-empty sequence")
        self.base = base
        self.rate = base.nominal_rate
        self.clock = SampleClock(self.rate, physics_rate)

    def next_frame(self, tick_time: float) -> Optional[SkeletonFrame]:
        i = self.clock.cursor
        t = i / self.rate
        if t > tick_time:
            return None
        self.clock.cursor += 1
        src = self.base.frames[i % len(self.base.frames)]
        return SkeletonFrame(t, src.joints, src.confidence)

    def exhausted(self) -> bool:
        return False


def iter_delivery(seq: TrackedSequence, physics_rate: float,
                  ticks: int) -> Iterator[tuple[int, Optional[SkeletonFrame]]]:
    """Deliver a sequence over `ticks` fixed ticks; test helper for sync rules."""
    clock = SampleClock(seq.nominal_rate, physics_rate)
    for k in range(ticks):
        yield k, next_sample(clock, seq, k / physics_rate)
