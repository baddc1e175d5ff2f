"""Human-to-quadruped movement inference.

Per fresh sensor sample: finite-difference limb velocities, a clamped
linear contact weight per limb, a weighted-average forward velocity
override, and a clipped jump velocity when limbs sweep up fast enough
while the avatar counts as grounded (coyote window included).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Protocol

from quadloco.errors import InvalidC, ZeroDt
from quadloco.ingest.trace import SkeletonFrame
from quadloco.joints import END_EFFECTORS, JointId
from quadloco.mapper.calibration import Calibration
from quadloco.mapper.config import MapperConfig
from quadloco.vec import Vec3


@dataclass(frozen=True)
class LimbKinematics:
    limb: JointId
    velocity: Vec3
    ground_distance: float        # limb y minus floor_y, clamped >= 0
    weight: float                 # contact influence in [0, 1]
    fresh: bool                   # true only on ticks with a new sensor sample
    lost: bool = False            # tracking dropout; excluded from both equations


class VelocitySample(NamedTuple):
    velocity: Vec3
    degraded: bool


class JumpVelocity(NamedTuple):
    v_y: float
    v_z: float


@dataclass(frozen=True)
class MapperOutput:
    locomotion: Optional[Vec3] = None       # forward-only velocity override
    jump: Optional[JumpVelocity] = None     # takes precedence over locomotion
    debug: tuple[LimbKinematics, ...] = field(default=())


class AvatarLike(Protocol):
    """What the mapper needs to know about the physics body."""

    velocity: Vec3
    grounded: bool
    last_grounded: float


def limb_velocity(prev: SkeletonFrame, cur: SkeletonFrame,
                  limb: JointId) -> VelocitySample:
    """Finite-difference velocity of one joint between adjacent samples.

    Lost tracking on either sample degrades to zero velocity; equal or
    reversed timestamps raise ZeroDt.
    """
    dt = cur.timestamp - prev.timestamp
    if dt <= 0:
        raise ZeroDt(f"timestamps not increasing: {prev.timestamp} -> {cur.timestamp}")
    if prev.is_lost(limb) or cur.is_lost(limb):
        return VelocitySample(Vec3(), True)
    return VelocitySample((cur.joints[limb] - prev.joints[limb]) / dt, False)


def contact_weight(d: float, c: float) -> float:
    """Clamped linear contact influence: 1 on the ground, 0 at or beyond
    the contact zone thickness c."""
    if c <= 0:
        raise InvalidC(f"contact zone thickness must be > 0, got {c}")
    return max(0.0, 1.0 - d / c)


def locomotion_velocity(limbs: list[LimbKinematics],
                        cfg: MapperConfig) -> Optional[Vec3]:
    """Weighted average of limb velocities, boosted and projected forward.

    A limb only counts while moving faster than the speed threshold (so the
    avatar coasts to a stop on friction when the player rests). A zero
    weight sum means no override. The forward component is clamped at zero:
    backward locomotion is not a thing this engine does.
    """
    weight_sum = 0.0
    vx = vy = vz = 0.0
    for limb in limbs:
        if limb.lost:
            continue
        w = limb.weight if limb.velocity.norm() > cfg.speed_threshold else 0.0
        if w <= 0.0:
            continue
        weight_sum += w
        vx += w * limb.velocity.x
        vy += w * limb.velocity.y
        vz += w * limb.velocity.z
    if weight_sum == 0.0:
        return None
    forward = cfg.b_xz * (vz / weight_sum)
    return Vec3(0.0, 0.0, max(0.0, forward))


def grounded_with_coyote(grounded_now: bool, last_grounded: float,
                         now: float, coyote: float) -> bool:
    """True while touching the ground or within the coyote window after
    leaving it."""
    if grounded_now:
        return True
    return (now - last_grounded) <= coyote


def _clip(x: float, lo: float, hi: float) -> float:
    return max(lo, min(hi, x))


def jump_decision(limbs: list[LimbKinematics], avatar_v: Vec3, grounded: bool,
                  cfg: MapperConfig) -> Optional[JumpVelocity]:
    """Jump velocity override, or None.

    Each fresh limb moving up faster than the trigger proposes a candidate;
    the candidate with the greatest vertical velocity wins (ties broken by
    forward velocity, then limb order). The clips guarantee a jump never
    slows the avatar below its current velocity and never exceeds the caps.
    """
    if not grounded:
        return None
    best: Optional[JumpVelocity] = None
    for limb in limbs:
        if limb.lost or not limb.fresh:
            continue
        v_y_limb = limb.velocity.y
        if v_y_limb <= cfg.jump_trigger:
            continue
        candidate = JumpVelocity(
            v_y=_clip(cfg.b_y * v_y_limb, avatar_v.y, cfg.v_y_max),
            v_z=_clip(avatar_v.z + cfg.b_z * v_y_limb, avatar_v.z, cfg.v_z_max),
        )
        if best is None or candidate.v_y > best.v_y or (
                candidate.v_y == best.v_y and candidate.v_z > best.v_z):
            best = candidate
    return best


def stale_output(prev_debug: tuple[LimbKinematics, ...] = ()) -> MapperOutput:
    """Output for a tick without a fresh sensor sample: no overrides, debug
    kinematics marked stale."""
    debug = tuple(
        LimbKinematics(k.limb, k.velocity, k.ground_distance, k.weight,
                       fresh=False, lost=k.lost)
        for k in prev_debug
    )
    return MapperOutput(locomotion=None, jump=None, debug=debug)


def map_frame(prev: SkeletonFrame, cur: SkeletonFrame, calibration: Calibration,
              avatar: AvatarLike, cfg: MapperConfig, now: float) -> MapperOutput:
    """Full per-sample mapping: velocities -> weights -> overrides.

    Call only with a fresh sample pair; ticks without new input should use
    stale_output instead.
    """
    limbs: list[LimbKinematics] = []
    for limb in END_EFFECTORS:
        v, degraded = limb_velocity(prev, cur, limb)
        d = max(0.0, cur.joints[limb].y - calibration.floor_y)
        w = 0.0 if degraded else contact_weight(d, cfg.c)
        limbs.append(LimbKinematics(limb, v, d, w, fresh=True, lost=degraded))

    grounded = grounded_with_coyote(avatar.grounded, avatar.last_grounded,
                                    now, cfg.coyote)
    jump = jump_decision(limbs, avatar.velocity, grounded, cfg)
    locomotion = locomotion_velocity(limbs, cfg)
    return MapperOutput(locomotion=locomotion, jump=jump, debug=tuple(limbs))
