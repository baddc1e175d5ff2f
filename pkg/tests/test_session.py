from __future__ import annotations

import pytest

from quadloco.errors import InsufficientFrames
from quadloco.ingest.clock import TraceSource
from quadloco.ingest.synth import NEUTRAL_POSE, concat, synth_gait, synth_hold, synth_jump
from quadloco.ingest.trace import TrackedSequence
from quadloco.mapper.calibration import calibration_from_neutral
from quadloco.mapper.config import MapperConfig
from quadloco.mapper.core import map_frame, stale_output
from quadloco.physics.level import load_level
from quadloco.physics.world import AvatarState
from quadloco.session.loop import Phase, Session, run_headless
from quadloco.session.statelog import parse_log, run_hash
from quadloco.vec import Vec3


def neutral_cal():
    return calibration_from_neutral(NEUTRAL_POSE)


def gait_source(duration=12.0, freq=1.0, amp=0.3):
    return TraceSource(synth_gait(freq, amp, duration))


# --- map_frame composition (needs avatar state, so tested here) ---

def test_map_frame_gait_midstroke_is_locomotion_only(cfg):
    seq = synth_gait(1.0, 0.3, 2.0)
    avatar = AvatarState(position=Vec3(0, 0.22, 0), grounded=True, last_grounded=0.0)
    # mid-stroke: frames around t=0 have the pair at max forward sweep speed
    out = map_frame(seq.frames[0], seq.frames[1], neutral_cal(), avatar, cfg,
                    now=seq.frames[1].timestamp)
    assert out.locomotion is not None
    assert out.locomotion.z > 0.5
    assert out.jump is None
    assert all(k.fresh for k in out.debug)


def test_map_frame_jump_peak_grounded_yields_jump(cfg):
    seq = synth_jump(2.0, 0.2, 1.5)
    avatar = AvatarState(position=Vec3(0, 0.22, 0), grounded=True, last_grounded=0.0)
    jumps = []
    for prev, cur in zip(seq.frames, seq.frames[1:]):
        out = map_frame(prev, cur, neutral_cal(), avatar, cfg, now=cur.timestamp)
        if out.jump is not None:
            jumps.append(out.jump)
    assert jumps
    assert max(j.v_y for j in jumps) > 2.0  # b_y * peak_speed, near-quantum loss


def test_stale_output_has_no_overrides(cfg):
    seq = synth_gait(1.0, 0.3, 2.0)
    avatar = AvatarState(position=Vec3(0, 0.22, 0), grounded=True, last_grounded=0.0)
    live = map_frame(seq.frames[10], seq.frames[11], neutral_cal(), avatar, cfg,
                     now=seq.frames[11].timestamp)
    stale = stale_output(live.debug)
    assert stale.locomotion is None and stale.jump is None
    assert all(not k.fresh for k in stale.debug)
    assert [k.velocity for k in stale.debug] == [k.velocity for k in live.debug]


# --- session loop ---

def test_gait_completes_flat_level():
    from .reference import ref_gait_completion_time

    metrics, log = run_headless(load_level(1), gait_source(), MapperConfig(),
                                calibration=neutral_cal())
    assert metrics.finished
    assert metrics.respawns == 0
    # completion time within 10% of the scalar rehearsal's prediction
    expected = ref_gait_completion_time(1.0, 0.3, cfg=MapperConfig().as_dict())
    assert expected is not None
    assert metrics.completion_time == pytest.approx(expected, rel=0.10)
    assert [idx for idx, _ in metrics.checkpoint_times] == [0, 1]
    times = [t for _, t in metrics.checkpoint_times]
    assert times == sorted(times)
    assert metrics.distance_travelled >= 10.0
    # forward progress every reported second after the startup ramp
    recs = parse_log("\n".join(log))
    z_by_second = [r.position.z for r in recs if r.tick % 60 == 59]
    for a, b in zip(z_by_second[1:], z_by_second[2:]):
        assert b > a


def test_empty_input_reports_exhaustion():
    src = TraceSource(TrackedSequence([], nominal_rate=30.0))
    metrics, _ = run_headless(load_level(1), src, MapperConfig(),
                              calibration=neutral_cal())
    assert not metrics.finished
    assert metrics.input_exhausted_before_finish
    assert metrics.distance_travelled == 0.0


def test_identical_runs_hash_identically():
    runs = []
    for _ in range(2):
        metrics, log = run_headless(load_level(1), gait_source(), MapperConfig(),
                                    calibration=neutral_cal())
        runs.append((metrics.completion_time, run_hash("\n".join(log))))
    assert runs[0] == runs[1]


def test_calibration_phase_consumes_hold_then_runs():
    seq = concat(synth_hold(3.0), synth_gait(1.0, 0.3, 12.0))
    metrics, log = run_headless(load_level(1), TraceSource(seq), MapperConfig())
    assert metrics.finished
    recs = parse_log("\n".join(log))
    # no movement during the calibration hold
    for r in recs[: int(3.0 * 60) - 1]:
        assert r.position.z == 0.0
        assert r.override == "none"
    # completion clock excludes the calibration phase
    assert metrics.completion_time == pytest.approx(6.15, abs=1.5)


def test_calibration_fails_on_short_input():
    src = TraceSource(synth_hold(1.0))
    with pytest.raises(InsufficientFrames):
        run_headless(load_level(1), src, MapperConfig())


def test_respawn_at_last_checkpoint_with_reset_velocity():
    # jump input too weak to clear the first gap: fall, respawn at spawn
    src = TraceSource(synth_jump(1.2, 0.5, 3.0))
    level = load_level(2)
    metrics, log = run_headless(level, src, MapperConfig(),
                                calibration=neutral_cal())
    assert metrics.respawns >= 1
    recs = parse_log("\n".join(log))
    respawn_ticks = [r for r in recs if any(e.startswith("respawn") for e in r.events)]
    assert respawn_ticks
    r = respawn_ticks[0]
    assert r.position.z == level.spawn.z
    assert r.velocity == Vec3(0, 0, 0)
    assert r.grounded


def test_checkpoint_events_and_monotonic_index():
    metrics, log = run_headless(load_level(1), gait_source(), MapperConfig(),
                                calibration=neutral_cal())
    recs = parse_log("\n".join(log))
    seen = [int(e.split(":")[1]) for r in recs for e in r.events
            if e.startswith("checkpoint")]
    assert seen == [0, 1]


def test_kill_plane_triggers_respawn_not_finish():
    level = load_level(2)
    src = TraceSource(synth_gait(1.0, 0.3, 6.0))  # paddles straight into the gap
    metrics, log = run_headless(level, src, MapperConfig(),
                                calibration=neutral_cal())
    assert metrics.respawns >= 1
    assert not metrics.finished


def test_clock_advances_exactly_one_dt_per_tick():
    metrics, log = run_headless(load_level(1), gait_source(4.0), MapperConfig(),
                                calibration=neutral_cal())
    recs = parse_log("\n".join(log))
    for r in recs:
        assert r.clock == (r.tick + 1) / 60.0


def test_session_phase_transitions():
    session = Session(load_level(1), gait_source(), MapperConfig(),
                      calibration=neutral_cal())
    assert session.phase is Phase.RUNNING
    session2 = Session(load_level(1), gait_source(), MapperConfig())
    assert session2.phase is Phase.CALIBRATING
