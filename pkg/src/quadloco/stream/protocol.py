"""Wire protocol for the live session service.

Every message is one self-describing JSON object per WebSocket text frame
(the socket framing supplies the length delimitation) and carries a
mandatory protocol version. Server emits: hello, state, event, ack, error.
Clients send the command set: load_level, reset, set_param, limb_input,
pause, resume.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Optional, Union

from quadloco.errors import QuadlocoError
from quadloco.joints import JointId
from quadloco.mapper.core import LimbKinematics
from quadloco.physics.level import LevelSpec
from quadloco.physics.pose import QuadPose
from quadloco.session.loop import GameEvent
from quadloco.vec import Vec3

PROTOCOL_VERSION = "1"


class ProtocolError(QuadlocoError):
    pass


# --- commands ---

@dataclass(frozen=True)
class LoadLevel:
    level: int
    kind = "load_level"


@dataclass(frozen=True)
class Reset:
    kind = "reset"


@dataclass(frozen=True)
class SetParam:
    key: str
    value: float
    kind = "set_param"


@dataclass(frozen=True)
class LimbInput:
    pattern: str                       # paddle | flick
    action: str                        # press | release
    limbs: tuple[str, ...] = ()        # empty = all four
    kind = "limb_input"


@dataclass(frozen=True)
class Pause:
    kind = "pause"


@dataclass(frozen=True)
class Resume:
    kind = "resume"


Command = Union[LoadLevel, Reset, SetParam, LimbInput, Pause, Resume]

_PATTERNS = ("paddle", "flick")
_ACTIONS = ("press", "release")
_LIMB_NAMES = ("leftHand", "rightHand", "leftFoot", "rightFoot")


def parse_command(text: str) -> Command:
    """Decode and validate one client message; raises ProtocolError with a
    human-readable reason on anything malformed."""
    try:
        msg = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProtocolError(f"not valid JSON: {exc}") from None
    if not isinstance(msg, dict):
        raise ProtocolError("message must be a JSON object")
    if msg.get("version") != PROTOCOL_VERSION:
        raise ProtocolError(
            f"protocol version mismatch: need {PROTOCOL_VERSION!r}, "
            f"got {msg.get('version')!r}")
    kind = msg.get("type")
    if kind == "load_level":
        if not isinstance(msg.get("level"), int):
            raise ProtocolError("load_level needs an integer 'level'")
        return LoadLevel(msg["level"])
    if kind == "reset":
        return Reset()
    if kind == "set_param":
        key = msg.get("key")
        value = msg.get("value")
        if not isinstance(key, str) or not isinstance(value, (int, float)):
            raise ProtocolError("set_param needs string 'key' and numeric 'value'")
        return SetParam(key, float(value))
    if kind == "limb_input":
        pattern = msg.get("pattern")
        action = msg.get("action", "press")
        limbs = tuple(msg.get("limbs", ()))
        if pattern not in _PATTERNS:
            raise ProtocolError(f"unknown pattern {pattern!r}; have {_PATTERNS}")
        if action not in _ACTIONS:
            raise ProtocolError(f"unknown action {action!r}; have {_ACTIONS}")
        for limb in limbs:
            if limb not in _LIMB_NAMES:
                raise ProtocolError(f"unknown limb {limb!r}")
        return LimbInput(pattern, action, limbs)
    if kind == "pause":
        return Pause()
    if kind == "resume":
        return Resume()
    raise ProtocolError(f"unknown command type {kind!r}")


# --- state frames ---

@dataclass(frozen=True)
class PlatformSnapshot:
    """Runtime platform state the renderer needs: where it is and whether
    it is still solid. Static shape comes from the level message."""
    center: Vec3
    solid: bool


@dataclass(frozen=True)
class StateFrame:
    seq: int                      # strictly increasing per connection
    tick: int                     # session tick (resets on level load)
    clock: float
    phase: str
    position: Vec3
    velocity: Vec3
    grounded: bool
    pose: QuadPose
    limbs: tuple[LimbKinematics, ...] = ()
    events: tuple[GameEvent, ...] = ()
    platforms: tuple[PlatformSnapshot, ...] = ()


def _vec(v: Vec3) -> list[float]:
    return [v.x, v.y, v.z]


def _unvec(raw: Any) -> Vec3:
    return Vec3(float(raw[0]), float(raw[1]), float(raw[2]))


def encode_state(frame: StateFrame) -> str:
    body = {
        "type": "state",
        "version": PROTOCOL_VERSION,
        "seq": frame.seq,
        "tick": frame.tick,
        "clock": frame.clock,
        "phase": frame.phase,
        "avatar": {
            "position": _vec(frame.position),
            "velocity": _vec(frame.velocity),
            "grounded": frame.grounded,
        },
        "pose": {
            "feet": {name: _vec(v) for name, v in frame.pose.foot_targets.items()},
            "pitch": frame.pose.body_pitch,
            "degraded": frame.pose.degraded,
        },
        "limbs": {
            k.limb.value: {
                "v": _vec(k.velocity),
                "d": k.ground_distance,
                "w": k.weight,
                "fresh": k.fresh,
                "lost": k.lost,
            } for k in frame.limbs
        },
        "events": [e.to_dict() for e in frame.events],
        "platforms": [[p.center.x, p.center.y, p.center.z, p.solid]
                      for p in frame.platforms],
    }
    return json.dumps(body, separators=(",", ":"))


def decode_state(text: str) -> StateFrame:
    msg = json.loads(text)
    if msg.get("type") != "state":
        raise ProtocolError(f"expected a state message, got {msg.get('type')!r}")
    if msg.get("version") != PROTOCOL_VERSION:
        raise ProtocolError("protocol version mismatch")
    avatar = msg["avatar"]
    pose = QuadPose(
        foot_targets={name: _unvec(v) for name, v in msg["pose"]["feet"].items()},
        body_pitch=float(msg["pose"]["pitch"]),
        degraded=bool(msg["pose"]["degraded"]),
    )
    limbs = tuple(
        LimbKinematics(
            limb=JointId(name),
            velocity=_unvec(raw["v"]),
            ground_distance=float(raw["d"]),
            weight=float(raw["w"]),
            fresh=bool(raw["fresh"]),
            lost=bool(raw["lost"]),
        ) for name, raw in msg["limbs"].items()
    )
    events = tuple(
        GameEvent(e["kind"], e.get("index"), e.get("time")) for e in msg["events"]
    )
    platforms = tuple(
        PlatformSnapshot(Vec3(float(p[0]), float(p[1]), float(p[2])), bool(p[3]))
        for p in msg.get("platforms", ())
    )
    return StateFrame(
        seq=int(msg["seq"]),
        tick=int(msg["tick"]),
        clock=float(msg["clock"]),
        phase=str(msg["phase"]),
        position=_unvec(avatar["position"]),
        velocity=_unvec(avatar["velocity"]),
        grounded=bool(avatar["grounded"]),
        pose=pose,
        limbs=limbs,
        events=events,
        platforms=platforms,
    )


# --- other server messages ---

def encode_hello(levels: list[int], config: dict[str, float]) -> str:
    return json.dumps({"type": "hello", "version": PROTOCOL_VERSION,
                       "levels": levels, "config": config},
                      separators=(",", ":"))


def encode_level(level: LevelSpec) -> str:
    """Static level geometry, sent on connect and after load/reset."""
    return json.dumps({
        "type": "level",
        "version": PROTOCOL_VERSION,
        "name": level.name,
        "spawn": _vec(level.spawn),
        "kill_y": level.kill_y,
        "finish_z": level.finish_z,
        "platforms": [
            {"kind": p.kind.value, "center": _vec(p.center), "half": _vec(p.half)}
            for p in level.platforms
        ],
        "checkpoints": [_vec(cp.anchor) for cp in level.checkpoints],
    }, separators=(",", ":"))


def encode_event(event: GameEvent) -> str:
    return json.dumps({"type": "event", "version": PROTOCOL_VERSION,
                       **event.to_dict()}, separators=(",", ":"))


def encode_ack(cmd_kind: str, ok: bool = True,
               detail: Optional[dict[str, Any]] = None) -> str:
    body: dict[str, Any] = {"type": "ack", "version": PROTOCOL_VERSION,
                            "cmd": cmd_kind, "ok": ok}
    if detail:
        body["detail"] = detail
    return json.dumps(body, separators=(",", ":"))


def encode_error(message: str) -> str:
    return json.dumps({"type": "error", "version": PROTOCOL_VERSION,
                       "message": message}, separators=(",", ":"))
