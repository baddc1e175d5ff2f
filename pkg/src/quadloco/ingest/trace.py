"""Skeleton frames and the line-delimited trace file format.

One frame per line:

    t=<sec> <jointName>=<x>,<y>,<z>[,<conf>] ...

conf is one of T (tracked), I (inferred), L (lost); default T. Lines
starting with '#' are comments; a ``# rate=<hz>`` comment records the
nominal sensor rate so serialization round-trips exactly. The four end
effectors must appear on every line; a missing auxiliary joint carries its
last known position forward with confidence L.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from quadloco.errors import EmptyTrace, MalformedRecord, NonMonotonicTimestamps
from quadloco.joints import ALL_JOINTS, END_EFFECTORS, Confidence, JointId, joint_from_name
from quadloco.vec import Vec3

DEFAULT_RATE_HZ = 30.0


@dataclass
class SkeletonFrame:
    """One timestamped sensor sample of the 15 tracked joints.

    confidence holds only the joints that are not plainly tracked, so two
    frames compare equal regardless of how explicit their source text was.
    """

    timestamp: float
    joints: dict[JointId, Vec3]
    confidence: dict[JointId, Confidence] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.confidence = {
            j: c for j, c in self.confidence.items() if c is not Confidence.TRACKED
        }

    def conf(self, joint: JointId) -> Confidence:
        return self.confidence.get(joint, Confidence.TRACKED)

    def is_lost(self, joint: JointId) -> bool:
        return self.conf(joint) is Confidence.LOST


@dataclass
class TrackedSequence:
    """An ordered run of skeleton frames from one recording or generator."""

    frames: list[SkeletonFrame]
    nominal_rate: float = DEFAULT_RATE_HZ

    def __len__(self) -> int:
        return len(self.frames)

    def span(self) -> float:
        if len(self.frames) < 2:
            return 0.0
        return self.frames[-1].timestamp - self.frames[0].timestamp


def _parse_vec(token: str, line_no: int, name: str) -> tuple[Vec3, Confidence]:
    parts = token.split(",")
    if len(parts) not in (3, 4):
        raise MalformedRecord(line_no, f"{name}: expected x,y,z[,conf], got {token!r}")
    try:
        x, y, z = float(parts[0]), float(parts[1]), float(parts[2])
    except ValueError:
        raise MalformedRecord(line_no, f"{name}: non-numeric coordinate in {token!r}") from None
    conf = Confidence.TRACKED
    if len(parts) == 4:
        try:
            conf = Confidence(parts[3])
        except ValueError:
            raise MalformedRecord(line_no, f"{name}: bad confidence flag {parts[3]!r}") from None
    v = Vec3(x, y, z)
    if not v.is_finite():
        raise MalformedRecord(line_no, f"{name}: non-finite coordinate in {token!r}")
    return v, conf


def parse_trace(data: bytes | str) -> TrackedSequence:
    """Parse a trace file into a TrackedSequence.

    Raises EmptyTrace, NonMonotonicTimestamps or MalformedRecord (with the
    offending line number).
    """
    if isinstance(data, bytes):
        text = data.decode("utf-8")
    else:
        text = data

    frames: list[SkeletonFrame] = []
    declared_rate: float | None = None
    last_known: dict[JointId, Vec3] = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line.lstrip("#").strip()
            if body.startswith("rate="):
                try:
                    declared_rate = float(body[len("rate="):])
                except ValueError:
                    raise MalformedRecord(line_no, f"bad rate comment {body!r}") from None
            continue

        tokens = line.split()
        if not tokens[0].startswith("t="):
            raise MalformedRecord(line_no, "record must start with t=<sec>")
        try:
            t = float(tokens[0][2:])
        except ValueError:
            raise MalformedRecord(line_no, f"bad timestamp {tokens[0]!r}") from None

        joints: dict[JointId, Vec3] = {}
        confidence: dict[JointId, Confidence] = {}
        for token in tokens[1:]:
            if "=" not in token:
                raise MalformedRecord(line_no, f"expected <joint>=<x,y,z>, got {token!r}")
            name, _, rest = token.partition("=")
            try:
                joint = joint_from_name(name)
            except KeyError:
                raise MalformedRecord(line_no, f"unknown joint {name!r}") from None
            if joint in joints:
                raise MalformedRecord(line_no, f"duplicate joint {name!r}")
            v, conf = _parse_vec(rest, line_no, name)
            joints[joint] = v
            confidence[joint] = conf

        for ee in END_EFFECTORS:
            if ee not in joints:
                raise MalformedRecord(line_no, f"missing end effector {ee.value!r}")

        # Dropped auxiliary joints hold their last position, flagged lost.
        for joint in ALL_JOINTS:
            if joint not in joints:
                joints[joint] = last_known.get(joint, Vec3())
                confidence[joint] = Confidence.LOST
        last_known.update(joints)

        if frames and t <= frames[-1].timestamp:
            raise NonMonotonicTimestamps(
                f"line {line_no}: t={t} does not increase past t={frames[-1].timestamp}"
            )
        frames.append(SkeletonFrame(t, joints, confidence))

    if not frames:
        raise EmptyTrace("trace contains no frame records")

    if declared_rate is not None:
        rate = declared_rate
    elif len(frames) >= 2:
        rate = (len(frames) - 1) / (frames[-1].timestamp - frames[0].timestamp)
    else:
        rate = DEFAULT_RATE_HZ
    return TrackedSequence(frames, nominal_rate=rate)


def serialize_trace(seq: TrackedSequence) -> str:
    """Render a sequence back to trace-file text; parse_trace round-trips it."""
    lines = [f"# rate={seq.nominal_rate!r}"]
    for frame in seq.frames:
        parts = [f"t={frame.timestamp!r}"]
        for joint in ALL_JOINTS:
            v = frame.joints[joint]
            conf = frame.conf(joint)
            tail = "" if conf is Confidence.TRACKED else f",{conf.value}"
            parts.append(f"{joint.value}={v.x!r},{v.y!r},{v.z!r}{tail}")
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"
