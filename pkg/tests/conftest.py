from __future__ import annotations

import pytest

from quadloco.ingest.synth import NEUTRAL_POSE
from quadloco.ingest.trace import SkeletonFrame
from quadloco.joints import ALL_JOINTS, JointId
from quadloco.mapper.calibration import calibration_from_neutral
from quadloco.mapper.config import MapperConfig
from quadloco.vec import Vec3


@pytest.fixture
def cfg():
    return MapperConfig()


@pytest.fixture
def neutral_calibration():
    return calibration_from_neutral(NEUTRAL_POSE)


def make_frame(t: float, overrides: dict[JointId, Vec3] | None = None,
               confidence=None) -> SkeletonFrame:
    """Neutral-pose frame with selected joints displaced."""
    joints = {j: NEUTRAL_POSE[j] for j in ALL_JOINTS}
    if overrides:
        joints.update(overrides)
    return SkeletonFrame(t, joints, confidence or {})
