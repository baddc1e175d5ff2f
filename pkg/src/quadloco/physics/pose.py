"""Kinematic display retargeting: tracked human end effectors drive the
quadruped's foot targets. Hands map to the front feet, feet to the hind
feet; displacement from the calibrated neutral pose scales linearly into
avatar-local targets, clamped to each leg's reach.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from quadloco.ingest.trace import SkeletonFrame
from quadloco.joints import JointId
from quadloco.mapper.calibration import Calibration
from quadloco.vec import Vec3

REACH_RADIUS_M = 0.55
_STANCE_DROP = Vec3(0.0, -0.40, 0.0)
_BODY_HALF_LENGTH = 0.35

# avatar-local shoulder/hip anchors the foot targets are tethered to
FOOT_ANCHORS: dict[str, Vec3] = {
    "frontLeft": Vec3(0.12, 0.0, _BODY_HALF_LENGTH),
    "frontRight": Vec3(-0.12, 0.0, _BODY_HALF_LENGTH),
    "hindLeft": Vec3(0.12, 0.0, -_BODY_HALF_LENGTH),
    "hindRight": Vec3(-0.12, 0.0, -_BODY_HALF_LENGTH),
}

LIMB_TO_FOOT: dict[JointId, str] = {
    JointId.LEFT_HAND: "frontLeft",
    JointId.RIGHT_HAND: "frontRight",
    JointId.LEFT_FOOT: "hindLeft",
    JointId.RIGHT_FOOT: "hindRight",
}


@dataclass(frozen=True)
class QuadPose:
    foot_targets: dict[str, Vec3]   # avatar-local, keyed by FOOT_ANCHORS names
    body_pitch: float = 0.0         # radians, nose-up positive
    degraded: bool = False


def neutral_pose() -> QuadPose:
    return QuadPose({name: anchor + _STANCE_DROP
                     for name, anchor in FOOT_ANCHORS.items()})


def _clamp_to_reach(target: Vec3, anchor: Vec3) -> Vec3:
    offset = target - anchor
    dist = offset.norm()
    if dist <= REACH_RADIUS_M or dist == 0.0:
        return target
    return anchor + offset * (REACH_RADIUS_M / dist)


def retarget_pose(frame: SkeletonFrame, calibration: Calibration,
                  prev: Optional[QuadPose] = None, scale: float = 1.0) -> QuadPose:
    """Map one skeleton frame to a quadruped display pose.

    Lost limbs hold their previous target (or the neutral stance when there
    is none) and mark the pose degraded.
    """
    targets: dict[str, Vec3] = {}
    degraded = False
    for limb, foot in LIMB_TO_FOOT.items():
        anchor = FOOT_ANCHORS[foot]
        if frame.is_lost(limb):
            degraded = True
            if prev is not None:
                targets[foot] = prev.foot_targets[foot]
            else:
                targets[foot] = anchor + _STANCE_DROP
            continue
        delta = frame.joints[limb] - calibration.neutral[limb]
        targets[foot] = _clamp_to_reach(anchor + _STANCE_DROP + delta * scale, anchor)

    front_y = (targets["frontLeft"].y + targets["frontRight"].y) / 2.0
    hind_y = (targets["hindLeft"].y + targets["hindRight"].y) / 2.0
    pitch = math.atan2(front_y - hind_y, 2.0 * _BODY_HALF_LENGTH)
    return QuadPose(foot_targets=targets, body_pitch=pitch, degraded=degraded)
