from __future__ import annotations

import pytest

from quadloco.errors import CalibrationUnstable, InsufficientFrames
from quadloco.ingest.synth import NEUTRAL_POSE, synth_hold
from quadloco.joints import END_EFFECTORS, JointId
from quadloco.mapper.calibration import calibrate, calibration_from_neutral
from quadloco.vec import Vec3

from .conftest import make_frame


def test_stationary_hold_gives_exact_floor():
    frames = synth_hold(3.0, rate=30.0).frames
    assert len(frames) == 90
    cal = calibrate(frames, required_hold=3.0, stability_tol=0.05)
    assert cal.floor_y == pytest.approx(0.05, abs=1e-12)
    for joint, pos in NEUTRAL_POSE.items():
        assert cal.neutral[joint].x == pytest.approx(pos.x, abs=1e-12)
        assert cal.neutral[joint].y == pytest.approx(pos.y, abs=1e-12)


def test_drifting_limb_rejected_with_limb_named():
    frames = []
    for i in range(90):
        t = i / 30.0
        drift = 0.08 * (i / 89.0)
        frames.append(make_frame(t, {JointId.LEFT_HAND: Vec3(0.25, 0.05 + drift, 0.45)}))
    with pytest.raises(CalibrationUnstable) as err:
        calibrate(frames, required_hold=3.0, stability_tol=0.05)
    assert err.value.limb == "leftHand"
    assert err.value.y_range == pytest.approx(0.08)


def test_short_hold_insufficient():
    frames = synth_hold(1.0, rate=30.0).frames
    assert len(frames) == 30
    with pytest.raises(InsufficientFrames):
        calibrate(frames, required_hold=3.0)


def test_too_few_frames():
    with pytest.raises(InsufficientFrames):
        calibrate([make_frame(0.0)], required_hold=3.0)
    with pytest.raises(InsufficientFrames):
        calibrate([], required_hold=3.0)


def test_hold_duration_recorded():
    frames = synth_hold(4.0, rate=30.0).frames
    cal = calibrate(frames, required_hold=3.0)
    assert cal.hold_duration == pytest.approx(frames[-1].timestamp)


def test_calibration_from_neutral_matches_held_pose():
    held = calibrate(synth_hold(3.0).frames, required_hold=3.0)
    direct = calibration_from_neutral(NEUTRAL_POSE)
    assert direct.floor_y == pytest.approx(held.floor_y, abs=1e-12)
    for limb in END_EFFECTORS:
        assert direct.neutral[limb].y == pytest.approx(held.neutral[limb].y, abs=1e-12)
