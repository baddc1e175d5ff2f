from __future__ import annotations

import json
import random

import pytest

from quadloco.joints import JointId
from quadloco.mapper.core import LimbKinematics
from quadloco.physics.pose import FOOT_ANCHORS, QuadPose
from quadloco.session.loop import GameEvent
from quadloco.stream.protocol import (
    PROTOCOL_VERSION,
    LimbInput,
    LoadLevel,
    Pause,
    PlatformSnapshot,
    ProtocolError,
    Reset,
    Resume,
    SetParam,
    StateFrame,
    decode_state,
    encode_level,
    encode_state,
    parse_command,
)
from quadloco.vec import Vec3


def cmd(body: dict) -> str:
    return json.dumps({"version": PROTOCOL_VERSION, **body})


def test_parse_command_set():
    assert parse_command(cmd({"type": "load_level", "level": 2})) == LoadLevel(2)
    assert parse_command(cmd({"type": "reset"})) == Reset()
    assert parse_command(cmd({"type": "set_param", "key": "b_xz", "value": 3.2})) \
        == SetParam("b_xz", 3.2)
    assert parse_command(cmd({"type": "limb_input", "pattern": "paddle",
                              "action": "press"})) == LimbInput("paddle", "press")
    assert parse_command(cmd({"type": "limb_input", "pattern": "flick",
                              "limbs": ["leftHand"]})) \
        == LimbInput("flick", "press", ("leftHand",))
    assert parse_command(cmd({"type": "pause"})) == Pause()
    assert parse_command(cmd({"type": "resume"})) == Resume()


@pytest.mark.parametrize("raw", [
    "not json at all {",
    json.dumps(["a", "list"]),
    json.dumps({"type": "reset"}),                                  # missing version
    json.dumps({"type": "reset", "version": "99"}),                 # wrong version
    cmd({"type": "warp"}),
    cmd({"type": "load_level", "level": "two"}),
    cmd({"type": "set_param", "key": 5, "value": 1}),
    cmd({"type": "set_param", "key": "c", "value": "thick"}),
    cmd({"type": "limb_input", "pattern": "moonwalk"}),
    cmd({"type": "limb_input", "pattern": "paddle", "action": "wiggle"}),
    cmd({"type": "limb_input", "pattern": "paddle", "limbs": ["tail"]}),
])
def test_malformed_commands_raise(raw):
    with pytest.raises(ProtocolError):
        parse_command(raw)


def random_frame(rng: random.Random) -> StateFrame:
    def v():
        return Vec3(rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5))

    limbs = tuple(
        LimbKinematics(limb, v(), rng.uniform(0, 1), rng.uniform(0, 1),
                       fresh=rng.random() < 0.5, lost=rng.random() < 0.2)
        for limb in (JointId.LEFT_HAND, JointId.RIGHT_HAND,
                     JointId.LEFT_FOOT, JointId.RIGHT_FOOT))
    pose = QuadPose({name: v() for name in FOOT_ANCHORS},
                    body_pitch=rng.uniform(-1, 1), degraded=rng.random() < 0.3)
    events = tuple(
        GameEvent(kind, index=rng.randrange(5), time=rng.uniform(0, 60))
        for kind in rng.sample(["checkpoint", "respawn", "finish",
                                "platform_collapsed"], k=rng.randrange(3)))
    platforms = tuple(PlatformSnapshot(v(), rng.random() < 0.8)
                      for _ in range(rng.randrange(4)))
    return StateFrame(
        seq=rng.randrange(10**6), tick=rng.randrange(10**6),
        clock=rng.uniform(0, 1000), phase="running",
        position=v(), velocity=v(), grounded=rng.random() < 0.5,
        pose=pose, limbs=limbs, events=events, platforms=platforms,
    )


def test_state_frame_roundtrip_randomized():
    rng = random.Random(2024)
    for _ in range(200):
        frame = random_frame(rng)
        assert decode_state(encode_state(frame)) == frame


def test_state_encoding_is_versioned_json():
    frame = random_frame(random.Random(1))
    msg = json.loads(encode_state(frame))
    assert msg["type"] == "state"
    assert msg["version"] == PROTOCOL_VERSION
    assert set(msg["limbs"]) == {"leftHand", "rightHand", "leftFoot", "rightFoot"}


def test_decode_rejects_wrong_type_or_version():
    frame = random_frame(random.Random(2))
    msg = json.loads(encode_state(frame))
    msg["type"] = "event"
    with pytest.raises(ProtocolError):
        decode_state(json.dumps(msg))
    msg["type"] = "state"
    msg["version"] = "0"
    with pytest.raises(ProtocolError):
        decode_state(json.dumps(msg))


def test_level_message_describes_geometry():
    from quadloco.physics.level import load_level
    msg = json.loads(encode_level(load_level(3)))
    assert msg["type"] == "level"
    assert msg["version"] == PROTOCOL_VERSION
    assert msg["finish_z"] == 18.5
    kinds = {p["kind"] for p in msg["platforms"]}
    assert kinds == {"static", "falling", "moving"}
    assert len(msg["checkpoints"]) == 4
