"""Turns held/pressed key patterns into skeleton frames at sensor rate.

The paddle pattern reproduces the cyclic forward archetype, the flick
pattern the upward jump sweep. Frames come out on the same 30 Hz grid as
recorded traces and feed the identical mapper path, so a live pattern and
a recording of it produce identical trajectories.

Per-limb positions are rate limited between samples, which removes
finite-difference spikes when patterns start, stop or interrupt each other.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from quadloco.ingest.synth import GAIT_LIFT_M, NEUTRAL_POSE, jump_lift_at
from quadloco.ingest.trace import SkeletonFrame
from quadloco.joints import ALL_JOINTS, END_EFFECTORS, JointId
from quadloco.vec import Vec3

PADDLE_FREQ_HZ = 1.0
PADDLE_AMP_M = 0.3
# 3.0 m/s puts the second finite-difference sample after a flick press at
# ~1.15 m/s, safely past the default 1.0 m/s jump trigger
FLICK_PEAK_M_S = 3.0
FLICK_PULSE_S = 0.4
FLICK_RETURN_M_S = 1.0
MAX_LIMB_SPEED_M_S = 3.5
# outside a flick, upward limb motion stays under the jump trigger so pattern
# transitions (flick ending into a held paddle) cannot fire phantom jumps
RISE_LIMIT_M_S = 0.95

_PAIR_PHASE = {
    JointId.LEFT_HAND: 0.0,
    JointId.RIGHT_FOOT: 0.0,
    JointId.RIGHT_HAND: math.pi,
    JointId.LEFT_FOOT: math.pi,
}


def flick_offset(s: float, peak: float = FLICK_PEAK_M_S,
                 pulse: float = FLICK_PULSE_S,
                 descent: float = FLICK_RETURN_M_S) -> float:
    """Vertical flick displacement: fast sweep up, steady return down."""
    if s <= 0.0:
        return 0.0
    top = peak * 2.0 * pulse / math.pi
    if s <= pulse:
        return jump_lift_at(s, peak, 0.0, pulse)
    return max(0.0, top - descent * (s - pulse))


def _rate_limited(prev: Vec3, target: Vec3, max_step: float, max_rise: float) -> Vec3:
    def clamp(d: float, up: float) -> float:
        return max(-max_step, min(up, d))
    return Vec3(prev.x + clamp(target.x - prev.x, max_step),
                prev.y + clamp(target.y - prev.y, max_rise),
                prev.z + clamp(target.z - prev.z, max_step))


@dataclass
class _LimbState:
    offset: Vec3
    flick_started: float | None = None   # pattern-clock seconds


class PatternSource:
    """Infinite InputSource driven by pattern commands.

    Commands act on the NEXT emitted sample, so applying them at simulation
    tick boundaries keeps the stream a pure function of the command
    timeline.
    """

    def __init__(self, rate: float = 30.0):
        self.rate = rate
        self.cursor = 0
        self.paddle_held: set[JointId] = set()
        self.paddle_clock = 0.0
        self.limbs = {limb: _LimbState(Vec3()) for limb in END_EFFECTORS}

    # -- commands --

    def _selected(self, limbs: tuple[str, ...]) -> list[JointId]:
        if not limbs:
            return list(END_EFFECTORS)
        return [JointId(name) for name in limbs]

    def paddle(self, pressed: bool, limbs: tuple[str, ...] = ()) -> None:
        for limb in self._selected(limbs):
            if pressed:
                self.paddle_held.add(limb)
            else:
                self.paddle_held.discard(limb)

    def flick(self, limbs: tuple[str, ...] = ()) -> None:
        now = self.cursor / self.rate
        for limb in self._selected(limbs):
            state = self.limbs[limb]
            if state.flick_started is None:
                state.flick_started = now

    # -- frame generation --

    def _flick_active(self, state: _LimbState, t: float) -> bool:
        if state.flick_started is None:
            return False
        top = FLICK_PEAK_M_S * 2.0 * FLICK_PULSE_S / math.pi
        total = FLICK_PULSE_S + top / FLICK_RETURN_M_S
        if t - state.flick_started >= total:
            state.flick_started = None
            return False
        return True

    def _target_offset(self, limb: JointId, t: float) -> Vec3:
        state = self.limbs[limb]
        if self._flick_active(state, t):
            return Vec3(0.0, flick_offset(t - state.flick_started), 0.0)
        if limb in self.paddle_held:
            phase = 2.0 * math.pi * PADDLE_FREQ_HZ * self.paddle_clock + _PAIR_PHASE[limb]
            return Vec3(0.0,
                        GAIT_LIFT_M * (1.0 - math.cos(phase)) / 2.0,
                        PADDLE_AMP_M * math.sin(phase))
        return Vec3()

    def next_frame(self, tick_time: float) -> SkeletonFrame | None:
        t = self.cursor / self.rate
        if t > tick_time:
            return None
        self.cursor += 1
        if self.paddle_held:
            self.paddle_clock += 1.0 / self.rate
        max_step = MAX_LIMB_SPEED_M_S / self.rate
        joints = {j: NEUTRAL_POSE[j] for j in ALL_JOINTS}
        for limb in END_EFFECTORS:
            state = self.limbs[limb]
            target = self._target_offset(limb, t)
            rise = max_step if state.flick_started is not None else RISE_LIMIT_M_S / self.rate
            state.offset = _rate_limited(state.offset, target, max_step, rise)
            joints[limb] = NEUTRAL_POSE[limb] + state.offset
        return SkeletonFrame(t, joints)

    def exhausted(self) -> bool:
        return False
