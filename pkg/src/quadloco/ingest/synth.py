"""Synthetic motion generators shaped like the two supine movement archetypes:
cyclic four-limb paddling for forward locomotion, and a simultaneous upward
sweep of all four limbs for a jump.

The neutral pose is fixed so generated traces are deterministic: pelvis at
the origin, hands at (±0.25, 0.05, 0.45), feet at (±0.15, 0.05, -0.55),
in the supine body frame (y up toward the sensor, z along the body).
"""
from __future__ import annotations

import math
import random

from quadloco.errors import InvalidParams
from quadloco.ingest.trace import SkeletonFrame, TrackedSequence
from quadloco.joints import ALL_JOINTS, END_EFFECTORS, JointId
from quadloco.vec import Vec3

NEUTRAL_POSE: dict[JointId, Vec3] = {
    JointId.PELVIS: Vec3(0.0, 0.10, 0.0),
    JointId.LEFT_HAND: Vec3(0.25, 0.05, 0.45),
    JointId.RIGHT_HAND: Vec3(-0.25, 0.05, 0.45),
    JointId.LEFT_FOOT: Vec3(0.15, 0.05, -0.55),
    JointId.RIGHT_FOOT: Vec3(-0.15, 0.05, -0.55),
    JointId.HEAD: Vec3(0.0, 0.10, 0.70),
    JointId.LEFT_ELBOW: Vec3(0.28, 0.07, 0.25),
    JointId.RIGHT_ELBOW: Vec3(-0.28, 0.07, 0.25),
    JointId.LEFT_KNEE: Vec3(0.17, 0.12, -0.30),
    JointId.RIGHT_KNEE: Vec3(-0.17, 0.12, -0.30),
    JointId.CHEST: Vec3(0.0, 0.12, 0.25),
    JointId.LEFT_SHOULDER: Vec3(0.20, 0.09, 0.35),
    JointId.RIGHT_SHOULDER: Vec3(-0.20, 0.09, 0.35),
    JointId.LEFT_HIP: Vec3(0.12, 0.09, -0.10),
    JointId.RIGHT_HIP: Vec3(-0.12, 0.09, -0.10),
}

NEUTRAL_FLOOR_Y = 0.05

# Diagonal limb pairs move in phase (trot): left hand with right foot.
_PHASE_OFFSET = {
    JointId.LEFT_HAND: 0.0,
    JointId.RIGHT_FOOT: 0.0,
    JointId.RIGHT_HAND: math.pi,
    JointId.LEFT_FOOT: math.pi,
}

# Lift clears the 0.25 m contact zone but keeps the 1 Hz vertical limb speed
# (lift * pi * f ~ 0.88 m/s) under the default 1.0 m/s jump trigger, so the
# cyclic archetype paddles without firing jumps.
GAIT_LIFT_M = 0.28
JUMP_PULSE_S = 0.4


def _frame_times(duration: float, rate: float) -> list[float]:
    n = int(round(duration * rate))
    return [i / rate for i in range(n)]


def _build_frame(t: float, offsets: dict[JointId, Vec3], noise: random.Random | None,
                 noise_m: float) -> SkeletonFrame:
    joints: dict[JointId, Vec3] = {}
    for joint in ALL_JOINTS:
        p = NEUTRAL_POSE[joint] + offsets.get(joint, Vec3())
        if noise is not None and joint in END_EFFECTORS:
            p = p + Vec3(noise.gauss(0.0, noise_m), noise.gauss(0.0, noise_m),
                         noise.gauss(0.0, noise_m))
        joints[joint] = p
    return SkeletonFrame(t, joints)


def synth_hold(duration: float, rate: float = 30.0) -> TrackedSequence:
    """Stationary neutral pose, e.g. the held calibration pose."""
    if duration <= 0 or rate <= 0:
        raise InvalidParams("duration and rate must be positive")
    frames = [_build_frame(t, {}, None, 0.0) for t in _frame_times(duration, rate)]
    return TrackedSequence(frames, nominal_rate=rate)


def synth_gait(frequency: float, amplitude: float, duration: float, rate: float = 30.0,
               lift: float = GAIT_LIFT_M, noise_m: float = 0.0,
               seed: int | None = None) -> TrackedSequence:
    """Cyclic four-limb paddling.

    End-effector z sweeps sinusoidally about the neutral pose with diagonal
    pairs phase-opposed; y dips into the contact zone exactly while the limb
    sweeps forward, so contact weights alternate between the pairs.
    """
    if duration <= 0 or rate <= 0:
        raise InvalidParams("duration and rate must be positive")
    if frequency <= 0:
        raise InvalidParams("frequency must be positive")
    if amplitude < 0:
        raise InvalidParams("amplitude must be >= 0")

    rng = random.Random(seed) if noise_m > 0 else None
    frames = []
    for t in _frame_times(duration, rate):
        offsets: dict[JointId, Vec3] = {}
        for limb in END_EFFECTORS:
            phase = 2.0 * math.pi * frequency * t + _PHASE_OFFSET[limb]
            dz = amplitude * math.sin(phase)
            # low (in contact) while the z sweep moves forward, lifted on the
            # backswing
            dy = lift * (1.0 - math.cos(phase)) / 2.0
            if amplitude == 0:
                dy = 0.0
            offsets[limb] = Vec3(0.0, dy, dz)
        frames.append(_build_frame(t, offsets, rng, noise_m))
    return TrackedSequence(frames, nominal_rate=rate)


def jump_lift_at(t: float, peak_speed: float, onset: float,
                 pulse: float = JUMP_PULSE_S) -> float:
    """Vertical limb displacement of the jump sweep at time t.

    The sweep's velocity profile is a half-sine pulse peaking at peak_speed,
    so the displacement is its closed-form integral. Shared with tests so
    expected finite-difference velocities can be computed independently.
    """
    s = t - onset
    if s <= 0.0:
        return 0.0
    if s >= pulse:
        return peak_speed * 2.0 * pulse / math.pi
    return peak_speed * (pulse / math.pi) * (1.0 - math.cos(math.pi * s / pulse))


def synth_jump(peak_speed: float, onset: float, duration: float, rate: float = 30.0,
               pulse: float = JUMP_PULSE_S, noise_m: float = 0.0,
               seed: int | None = None) -> TrackedSequence:
    """All four end effectors sweep upward together starting at onset.

    The finite-difference vertical velocity across adjacent frames peaks at
    approximately peak_speed (exact up to sample quantization).
    """
    if peak_speed <= 0:
        raise InvalidParams("peak_speed must be positive")
    if duration <= 0 or rate <= 0:
        raise InvalidParams("duration and rate must be positive")
    if onset < 0 or onset >= duration:
        raise InvalidParams("onset must lie within the sequence duration")
    if pulse <= 0:
        raise InvalidParams("pulse must be positive")

    rng = random.Random(seed) if noise_m > 0 else None
    frames = []
    for t in _frame_times(duration, rate):
        dy = jump_lift_at(t, peak_speed, onset, pulse)
        offsets = {limb: Vec3(0.0, dy, 0.0) for limb in END_EFFECTORS}
        frames.append(_build_frame(t, offsets, rng, noise_m))
    return TrackedSequence(frames, nominal_rate=rate)


def concat(*sequences: TrackedSequence) -> TrackedSequence:
    """Join uniformly sampled sequences end to end.

    Timestamps are rebased onto the shared sample grid (index / rate), which
    keeps them exactly representable so tick alignment stays bit-stable.
    """
    if not sequences:
        raise InvalidParams("need at least one sequence")
    rate = sequences[0].nominal_rate
    frames: list[SkeletonFrame] = []
    for seq in sequences:
        if seq.nominal_rate != rate:
            raise InvalidParams("concat requires a shared nominal rate")
        for f in seq.frames:
            frames.append(SkeletonFrame(len(frames) / rate,
                                        dict(f.joints), dict(f.confidence)))
    return TrackedSequence(frames, nominal_rate=rate)
