"""Fixed-timestep rigid-body world for the avatar.

Tick order: velocity override (jump wins over locomotion, friction only
when neither applies), gravity unless resting, semi-implicit integration,
axis-separated collision resolution with substepping against tunneling,
then grounded bookkeeping and kinematic platform updates.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Optional

from quadloco.mapper.core import MapperOutput
from quadloco.physics.level import LevelSpec, PlatformKind, PlatformSpec
from quadloco.vec import Vec3

PHYSICS_RATE_HZ = 60.0
GRAVITY = 9.81
GROUND_FRICTION = 0.92  # horizontal velocity retained per grounded tick
DEFAULT_HALF_EXTENTS = Vec3(0.18, 0.22, 0.35)

_SUPPORT_EPS = 1e-9


@dataclass(frozen=True)
class AvatarState:
    position: Vec3                      # box center
    velocity: Vec3 = field(default_factory=Vec3)
    grounded: bool = False
    last_grounded: float = -1e9
    half_extents: Vec3 = DEFAULT_HALF_EXTENTS
    support: Optional[int] = None       # platform index under the avatar


@dataclass
class PlatformState:
    spec: PlatformSpec
    center: Vec3
    solid: bool = True
    first_contact: Optional[float] = None
    clock: float = 0.0
    last_displacement: Vec3 = field(default_factory=Vec3)

    @classmethod
    def from_spec(cls, spec: PlatformSpec) -> "PlatformState":
        return cls(spec=spec, center=spec.center)

    def top(self) -> float:
        return self.center.y + self.spec.half.y


@dataclass(frozen=True)
class ContactReport:
    grounded: bool = False
    support: Optional[int] = None
    touched: tuple[int, ...] = ()       # platform indices contacted this tick
    blocked_down: bool = False
    blocked_up: bool = False
    blocked_forward: bool = False
    collapsed: tuple[int, ...] = ()     # platforms that went non-solid this tick


def _overlap_1d(a_min: float, a_max: float, b_min: float, b_max: float) -> bool:
    return a_min < b_max and b_min < a_max


def _boxes_overlap(pos: Vec3, half: Vec3, p: PlatformState) -> bool:
    c, h = p.center, p.spec.half
    return (_overlap_1d(pos.x - half.x, pos.x + half.x, c.x - h.x, c.x + h.x)
            and _overlap_1d(pos.y - half.y, pos.y + half.y, c.y - h.y, c.y + h.y)
            and _overlap_1d(pos.z - half.z, pos.z + half.z, c.z - h.z, c.z + h.z))


@dataclass
class _MoveResult:
    position: Vec3
    velocity: Vec3
    touched: set[int]
    landed: Optional[int] = None
    blocked_up: bool = False
    blocked_forward: bool = False


def resolve_collisions(avatar: AvatarState, platforms: list[PlatformState],
                       attempted_move: Vec3) -> _MoveResult:
    """Move the avatar box by attempted_move, one axis at a time, pushing it
    out of any solid platform and zeroing velocity on the blocked axis."""
    pos = avatar.position
    vel = avatar.velocity
    half = avatar.half_extents
    res = _MoveResult(pos, vel, set())

    # z (forward) first so a landing this tick reflects the final footprint
    for axis, delta in (("z", attempted_move.z), ("x", attempted_move.x),
                        ("y", attempted_move.y)):
        if delta == 0.0 and axis != "y":
            continue
        pos = res.position
        moved = Vec3(pos.x + (delta if axis == "x" else 0.0),
                     pos.y + (delta if axis == "y" else 0.0),
                     pos.z + (delta if axis == "z" else 0.0))
        for idx, p in enumerate(platforms):
            if not p.solid or not _boxes_overlap(moved, half, p):
                continue
            res.touched.add(idx)
            c, h = p.center, p.spec.half
            if axis == "z":
                if delta > 0:
                    moved = replace(moved, z=c.z - h.z - half.z)
                    res.blocked_forward = True
                else:
                    moved = replace(moved, z=c.z + h.z + half.z)
                res.velocity = replace(res.velocity, z=0.0)
            elif axis == "x":
                if delta > 0:
                    moved = replace(moved, x=c.x - h.x - half.x)
                else:
                    moved = replace(moved, x=c.x + h.x + half.x)
                res.velocity = replace(res.velocity, x=0.0)
            else:
                if delta <= 0:
                    moved = replace(moved, y=c.y + h.y + half.y)
                    res.landed = idx
                else:
                    moved = replace(moved, y=c.y - h.y - half.y)
                    res.blocked_up = True
                res.velocity = replace(res.velocity, y=0.0)
        res.position = moved
    return res


def _find_support(pos: Vec3, half: Vec3,
                  platforms: list[PlatformState]) -> Optional[int]:
    """Solid platform whose top face the avatar's bottom rests on."""
    bottom = pos.y - half.y
    for idx, p in enumerate(platforms):
        if not p.solid:
            continue
        c, h = p.center, p.spec.half
        if abs(bottom - (c.y + h.y)) > _SUPPORT_EPS:
            continue
        if (_overlap_1d(pos.x - half.x, pos.x + half.x, c.x - h.x, c.x + h.x)
                and _overlap_1d(pos.z - half.z, pos.z + half.z, c.z - h.z, c.z + h.z)):
            return idx
    return None


def _moving_center(spec: PlatformSpec, t: float) -> Vec3:
    assert spec.move_to is not None
    s = (1.0 - math.cos(2.0 * math.pi * t / spec.period)) / 2.0
    return spec.center + (spec.move_to - spec.center) * s


def update_platforms(platforms: list[PlatformState], dt: float, contacts: ContactReport,
                     now: float) -> tuple[int, ...]:
    """Advance kinematic platforms and falling-platform timers in place.

    Returns the indices of platforms that collapsed this tick. A falling
    platform arms on its first avatar contact and goes non-solid once its
    delay has elapsed; untouched platforms stay solid forever.
    """
    collapsed: list[int] = []
    for idx, p in enumerate(platforms):
        if p.spec.kind is PlatformKind.MOVING:
            before = _moving_center(p.spec, p.clock)
            p.clock += dt
            after = _moving_center(p.spec, p.clock)
            p.center = after
            p.last_displacement = after - before
        elif p.spec.kind is PlatformKind.FALLING and p.solid:
            if p.first_contact is None and idx in contacts.touched:
                p.first_contact = now
            if p.first_contact is not None and now >= p.first_contact + p.spec.collapse_delay:
                p.solid = False
                collapsed.append(idx)
    return tuple(collapsed)


class World:
    """Owns level geometry state and advances the avatar one fixed tick at
    a time. Single simulation thread; the avatar states it returns are
    immutable snapshots."""

    def __init__(self, level: LevelSpec, gravity: float = GRAVITY,
                 friction: float = GROUND_FRICTION,
                 half_extents: Vec3 = DEFAULT_HALF_EXTENTS):
        self.level = level
        self.gravity = gravity
        self.friction = friction
        self.half_extents = half_extents
        self.platforms = [PlatformState.from_spec(s) for s in level.platforms]
        thinnest = min((s.thinnest_extent() for s in level.platforms), default=math.inf)
        self._substep_limit = thinnest / 2.0

    def reset_platforms(self) -> None:
        self.platforms = [PlatformState.from_spec(s) for s in self.level.platforms]

    def spawn_avatar(self, anchor: Vec3, now: float = 0.0) -> AvatarState:
        center = anchor + Vec3(0.0, self.half_extents.y, 0.0)
        pos = Vec3(center.x, center.y, center.z)
        support = _find_support(pos, self.half_extents, self.platforms)
        return AvatarState(position=pos, velocity=Vec3(), grounded=True,
                           last_grounded=now, half_extents=self.half_extents,
                           support=support)

    def step(self, avatar: AvatarState, override: Optional[MapperOutput],
             dt: float, now: float) -> tuple[AvatarState, ContactReport]:
        """One fixed physics tick ending at time `now`."""
        pos = avatar.position
        vel = avatar.velocity

        # ride a moving platform the avatar is standing on
        if avatar.grounded and avatar.support is not None:
            carrier = self.platforms[avatar.support]
            if carrier.spec.kind is PlatformKind.MOVING and carrier.solid:
                pos = pos + carrier.last_displacement

        jump = override.jump if override is not None else None
        locomotion = override.locomotion if override is not None else None
        if jump is not None:
            vel = Vec3(vel.x, jump.v_y, jump.v_z)
        elif locomotion is not None:
            vel = Vec3(locomotion.x, vel.y, locomotion.z)
        elif avatar.grounded:
            vel = Vec3(vel.x * self.friction, vel.y, vel.z * self.friction)

        resting = avatar.grounded and vel.y <= 0.0 and jump is None
        if not resting:
            vel = Vec3(vel.x, vel.y - self.gravity * dt, vel.z)

        moved = AvatarState(pos, vel, avatar.grounded, avatar.last_grounded,
                            avatar.half_extents, avatar.support)
        speed = vel.norm()
        substeps = 1
        if math.isfinite(self._substep_limit) and speed * dt > self._substep_limit:
            substeps = math.ceil(speed * dt / self._substep_limit)

        touched: set[int] = set()
        landed: Optional[int] = None
        blocked_up = False
        blocked_fw = False
        for _ in range(substeps):
            step_move = moved.velocity * (dt / substeps)
            res = resolve_collisions(moved, self.platforms, step_move)
            moved = replace(moved, position=res.position, velocity=res.velocity)
            touched |= res.touched
            landed = res.landed if res.landed is not None else landed
            blocked_up = blocked_up or res.blocked_up
            blocked_fw = blocked_fw or res.blocked_forward

        support = _find_support(moved.position, moved.half_extents, self.platforms)
        grounded = support is not None
        if grounded:
            touched.add(support)  # standing still counts as contact
        new_avatar = AvatarState(
            position=moved.position,
            velocity=moved.velocity,
            grounded=grounded,
            last_grounded=now if grounded else avatar.last_grounded,
            half_extents=moved.half_extents,
            support=support,
        )

        pre_report = ContactReport(grounded=grounded, support=support,
                                   touched=tuple(sorted(touched)),
                                   blocked_down=landed is not None,
                                   blocked_up=blocked_up, blocked_forward=blocked_fw)
        collapsed = update_platforms(self.platforms, dt, pre_report, now)
        report = replace(pre_report, collapsed=collapsed)
        return new_avatar, report
