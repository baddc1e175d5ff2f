"""Tracked joint identifiers.

Fifteen joints total: the four limb end effectors drive the movement
mapping, the other eleven exist for the debug skeleton display.
"""
from __future__ import annotations

from enum import Enum


class JointId(str, Enum):
    LEFT_HAND = "leftHand"
    RIGHT_HAND = "rightHand"
    LEFT_FOOT = "leftFoot"
    RIGHT_FOOT = "rightFoot"
    HEAD = "head"
    PELVIS = "pelvis"
    LEFT_ELBOW = "leftElbow"
    RIGHT_ELBOW = "rightElbow"
    LEFT_KNEE = "leftKnee"
    RIGHT_KNEE = "rightKnee"
    CHEST = "chest"
    LEFT_SHOULDER = "leftShoulder"
    RIGHT_SHOULDER = "rightShoulder"
    LEFT_HIP = "leftHip"
    RIGHT_HIP = "rightHip"

    def __str__(self) -> str:  # wire name, not the enum repr
        return self.value


# Order matters: used as the deterministic tie-break in the jump decision.
END_EFFECTORS: tuple[JointId, ...] = (
    JointId.LEFT_HAND,
    JointId.RIGHT_HAND,
    JointId.LEFT_FOOT,
    JointId.RIGHT_FOOT,
)

ALL_JOINTS: tuple[JointId, ...] = tuple(JointId)

_BY_NAME = {j.value: j for j in JointId}


def joint_from_name(name: str) -> JointId:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise KeyError(f"unknown joint name {name!r}") from None


class Confidence(str, Enum):
    TRACKED = "T"
    INFERRED = "I"
    LOST = "L"
