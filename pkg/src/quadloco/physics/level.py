"""Level geometry: axis-aligned platforms, checkpoints, kill plane, finish.

Declarative text format, one element per line:

    name <free text>
    spawn <x> <y> <z>                    # ground anchor the avatar starts on
    kill_y <y>
    finish_z <z>
    checkpoint <x> <y> <z>               # ordered; plane at z, respawn anchor at (x,y,z)
    platform static <cx> <cy> <cz> <hx> <hy> <hz>
    platform falling <cx> <cy> <cz> <hx> <hy> <hz> delay=<s>
    platform moving <cx> <cy> <cz> <hx> <hy> <hz> to=<x>,<y>,<z> period=<s>

Platform boxes are center + half extents; `to` is the second endpoint of a
moving platform's center. '#' starts a comment.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from importlib import resources

from quadloco.errors import LevelError
from quadloco.vec import Vec3


class PlatformKind(Enum):
    STATIC = "static"
    FALLING = "falling"
    MOVING = "moving"


@dataclass(frozen=True)
class PlatformSpec:
    kind: PlatformKind
    center: Vec3
    half: Vec3
    collapse_delay: float = 0.0   # falling: seconds after first contact
    move_to: Vec3 | None = None   # moving: other endpoint of the center path
    period: float = 0.0           # moving: full out-and-back time

    def __post_init__(self) -> None:
        if self.half.x <= 0 or self.half.y <= 0 or self.half.z <= 0:
            raise LevelError("platform half extents must be positive")
        if self.kind is PlatformKind.MOVING:
            if self.move_to is None or self.period <= 0:
                raise LevelError("moving platform needs to= and period>0")
        if self.kind is PlatformKind.FALLING and self.collapse_delay <= 0:
            raise LevelError("falling platform needs delay>0")

    def thinnest_extent(self) -> float:
        return 2.0 * min(self.half.x, self.half.y, self.half.z)


@dataclass(frozen=True)
class Checkpoint:
    anchor: Vec3   # ground point; the checkpoint plane sits at anchor.z


@dataclass(frozen=True)
class LevelSpec:
    name: str
    spawn: Vec3
    kill_y: float
    finish_z: float
    platforms: tuple[PlatformSpec, ...] = field(default=())
    checkpoints: tuple[Checkpoint, ...] = field(default=())


def _floats(parts: list[str], n: int, line_no: int) -> list[float]:
    if len(parts) != n:
        raise LevelError(f"line {line_no}: expected {n} numbers, got {len(parts)}")
    try:
        return [float(p) for p in parts]
    except ValueError:
        raise LevelError(f"line {line_no}: non-numeric value") from None


def parse_level(text: str) -> LevelSpec:
    name = "unnamed"
    spawn: Vec3 | None = None
    kill_y: float | None = None
    finish_z: float | None = None
    platforms: list[PlatformSpec] = []
    checkpoints: list[Checkpoint] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kw = tokens[0]
        if kw == "name":
            name = " ".join(tokens[1:]) or name
        elif kw == "spawn":
            x, y, z = _floats(tokens[1:], 3, line_no)
            spawn = Vec3(x, y, z)
        elif kw == "kill_y":
            (kill_y,) = _floats(tokens[1:], 1, line_no)
        elif kw == "finish_z":
            (finish_z,) = _floats(tokens[1:], 1, line_no)
        elif kw == "checkpoint":
            x, y, z = _floats(tokens[1:], 3, line_no)
            checkpoints.append(Checkpoint(Vec3(x, y, z)))
        elif kw == "platform":
            if len(tokens) < 8:
                raise LevelError(f"line {line_no}: platform needs kind + 6 numbers")
            try:
                kind = PlatformKind(tokens[1])
            except ValueError:
                raise LevelError(f"line {line_no}: unknown platform kind {tokens[1]!r}") from None
            nums = _floats(tokens[2:8], 6, line_no)
            center = Vec3(nums[0], nums[1], nums[2])
            half = Vec3(nums[3], nums[4], nums[5])
            delay = 0.0
            move_to: Vec3 | None = None
            period = 0.0
            for extra in tokens[8:]:
                key, _, value = extra.partition("=")
                if key == "delay":
                    delay = float(value)
                elif key == "to":
                    xyz = value.split(",")
                    if len(xyz) != 3:
                        raise LevelError(f"line {line_no}: to= needs x,y,z")
                    move_to = Vec3(float(xyz[0]), float(xyz[1]), float(xyz[2]))
                elif key == "period":
                    period = float(value)
                else:
                    raise LevelError(f"line {line_no}: unknown platform option {key!r}")
            try:
                platforms.append(PlatformSpec(kind, center, half, delay, move_to, period))
            except LevelError as exc:
                raise LevelError(f"line {line_no}: {exc}") from None
        else:
            raise LevelError(f"line {line_no}: unknown directive {kw!r}")

    if spawn is None:
        raise LevelError("level is missing a spawn")
    if kill_y is None:
        raise LevelError("level is missing kill_y")
    if finish_z is None:
        raise LevelError("level is missing finish_z")
    ordered = sorted(checkpoints, key=lambda cp: cp.anchor.z)
    if [cp.anchor.z for cp in ordered] != [cp.anchor.z for cp in checkpoints]:
        raise LevelError("checkpoints must be listed in increasing z order")
    return LevelSpec(name, spawn, kill_y, finish_z, tuple(platforms), tuple(checkpoints))


BUNDLED_LEVELS = {1: "1_flat_run.lvl", 2: "2_gap_jumps.lvl", 3: "3_obstacle_course.lvl"}


def load_level(ref: str | int) -> LevelSpec:
    """Load a bundled level by id (1..3) or any level file by path."""
    if isinstance(ref, int) or (isinstance(ref, str) and ref.isdigit()):
        key = int(ref)
        if key not in BUNDLED_LEVELS:
            raise LevelError(f"no bundled level {key}; have {sorted(BUNDLED_LEVELS)}")
        text = (resources.files("quadloco") / "levels" / BUNDLED_LEVELS[key]).read_text()
        return parse_level(text)
    with open(ref, "r", encoding="utf-8") as fh:
        return parse_level(fh.read())
