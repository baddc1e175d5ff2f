"""Calibration from the held rest pose.

The player holds still for a few seconds at session start; the mean
end-effector height over the hold becomes the floor plane every ground
distance is measured against, and the per-joint means become the neutral
pose for display retargeting.
"""
from __future__ import annotations

from dataclasses import dataclass

from quadloco.errors import CalibrationUnstable, InsufficientFrames
from quadloco.ingest.trace import SkeletonFrame
from quadloco.joints import ALL_JOINTS, END_EFFECTORS, JointId
from quadloco.vec import Vec3

DEFAULT_HOLD_S = 3.0
DEFAULT_STABILITY_TOL_M = 0.05


@dataclass(frozen=True)
class Calibration:
    floor_y: float
    neutral: dict[JointId, Vec3]
    hold_duration: float


def calibrate(frames: list[SkeletonFrame], required_hold: float = DEFAULT_HOLD_S,
              stability_tol: float = DEFAULT_STABILITY_TOL_M) -> Calibration:
    """Build a Calibration from held-pose frames.

    Rejects with InsufficientFrames when the frames span less than
    required_hold, and with CalibrationUnstable when any end effector's
    vertical range over the hold exceeds stability_tol (worst limb reported).
    """
    if len(frames) < 2:
        raise InsufficientFrames(f"need at least 2 frames, got {len(frames)}")
    span = frames[-1].timestamp - frames[0].timestamp
    # n samples cover n periods of recording, not n-1: 90 frames at 30 Hz
    # are a full 3 s hold.
    covered = span * len(frames) / (len(frames) - 1)
    if covered + 1e-9 < required_hold:
        raise InsufficientFrames(
            f"frames cover {covered:.3f} s, need {required_hold:.3f} s"
        )

    worst_limb: JointId | None = None
    worst_range = 0.0
    for limb in END_EFFECTORS:
        ys = [f.joints[limb].y for f in frames]
        y_range = max(ys) - min(ys)
        if y_range > worst_range:
            worst_range = y_range
            worst_limb = limb
    if worst_limb is not None and worst_range > stability_tol:
        raise CalibrationUnstable(worst_limb.value, worst_range, stability_tol)

    n = len(frames)
    neutral: dict[JointId, Vec3] = {}
    for joint in ALL_JOINTS:
        sx = sum(f.joints[joint].x for f in frames)
        sy = sum(f.joints[joint].y for f in frames)
        sz = sum(f.joints[joint].z for f in frames)
        neutral[joint] = Vec3(sx / n, sy / n, sz / n)

    floor_y = sum(neutral[limb].y for limb in END_EFFECTORS) / len(END_EFFECTORS)
    return Calibration(floor_y=floor_y, neutral=neutral, hold_duration=span)


def calibration_from_neutral(neutral: dict[JointId, Vec3],
                             hold_duration: float = DEFAULT_HOLD_S) -> Calibration:
    """Calibration equivalent to a perfectly held pose; used for synthetic
    sessions whose input has no calibration prelude."""
    floor_y = sum(neutral[limb].y for limb in END_EFFECTORS) / len(END_EFFECTORS)
    return Calibration(floor_y=floor_y, neutral=dict(neutral), hold_duration=hold_duration)
