from quadloco.ingest.clock import (
    CycleSource,
    InputSource,
    SampleClock,
    TraceSource,
    next_sample,
)
from quadloco.ingest.synth import (
    NEUTRAL_FLOOR_Y,
    NEUTRAL_POSE,
    concat,
    synth_gait,
    synth_hold,
    synth_jump,
)
from quadloco.ingest.trace import (
    SkeletonFrame,
    TrackedSequence,
    parse_trace,
    serialize_trace,
)

__all__ = [
    "CycleSource",
    "InputSource",
    "NEUTRAL_FLOOR_Y",
    "NEUTRAL_POSE",
    "SampleClock",
    "SkeletonFrame",
    "TraceSource",
    "TrackedSequence",
    "concat",
    "next_sample",
    "parse_trace",
    "serialize_trace",
    "synth_gait",
    "synth_hold",
    "synth_jump",
]
