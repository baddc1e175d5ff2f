from __future__ import annotations

import pytest

from quadloco.errors import InvalidParams
from quadloco.ingest.clock import CycleSource, SampleClock, TraceSource, iter_delivery, next_sample
from quadloco.ingest.synth import synth_gait, synth_hold


def test_sample_clock_validates_rates():
    with pytest.raises(InvalidParams):
        SampleClock(sensor_rate=60.0, physics_rate=30.0)
    with pytest.raises(InvalidParams):
        SampleClock(sensor_rate=0.0, physics_rate=60.0)


def test_thirty_hz_into_sixty_hz_alternates():
    seq = synth_hold(1.0, rate=30.0)
    pattern = [frame is not None for _, frame in iter_delivery(seq, 60.0, 60)]
    assert pattern == [i % 2 == 0 for i in range(60)]


def test_tick_before_first_sample_gets_nothing():
    seq = synth_hold(1.0, rate=30.0)
    clock = SampleClock(30.0, 60.0)
    assert next_sample(clock, seq, -0.001) is None
    assert next_sample(clock, seq, 0.0) is seq.frames[0]


def test_at_most_once_delivery():
    seq = synth_hold(1.0, rate=30.0)
    clock = SampleClock(30.0, 60.0)
    assert next_sample(clock, seq, 0.02) is seq.frames[0]
    assert next_sample(clock, seq, 0.02) is None  # same window, already taken


def test_delivery_completeness_no_drops_no_dupes():
    seq = synth_gait(1.0, 0.2, 2.0, rate=30.0)
    delivered = [f for _, f in iter_delivery(seq, 60.0, 150) if f is not None]
    assert delivered == seq.frames


def test_end_of_sequence_returns_none_forever():
    seq = synth_hold(0.1, rate=30.0)
    clock = SampleClock(30.0, 60.0)
    for k in range(60):
        next_sample(clock, seq, k / 60.0)
    assert next_sample(clock, seq, 100.0) is None


def test_trace_source_exhaustion():
    src = TraceSource(synth_hold(0.1, rate=30.0))
    got = [src.next_frame(k / 60.0) for k in range(10)]
    assert sum(f is not None for f in got) == 3
    assert src.exhausted()


def test_cycle_source_loops_with_grid_timestamps():
    base = synth_hold(0.2, rate=30.0)  # 6 frames
    src = CycleSource(base)
    frames = [src.next_frame(k / 60.0) for k in range(40)]
    fresh = [f for f in frames if f is not None]
    assert len(fresh) == 20
    assert [f.timestamp for f in fresh] == [i / 30.0 for i in range(20)]
    assert fresh[7].joints == base.frames[1].joints
    assert not src.exhausted()
