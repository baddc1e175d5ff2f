"""Game orchestration: the fixed-timestep loop wiring input -> mapper ->
physics, plus checkpoint, respawn and finish rules and per-level metrics.

Tick n runs from n/rate to (n+1)/rate. Input is pulled at the tick's start
time (which is how 30 Hz samples land on exactly every second 60 Hz tick),
physics integrates to the tick's end time.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from quadloco.errors import InsufficientFrames
from quadloco.ingest.clock import InputSource
from quadloco.ingest.trace import SkeletonFrame
from quadloco.mapper.calibration import Calibration, calibrate
from quadloco.mapper.config import MapperConfig
from quadloco.mapper.core import MapperOutput, map_frame, stale_output
from quadloco.physics.level import LevelSpec
from quadloco.physics.pose import QuadPose, neutral_pose, retarget_pose
from quadloco.physics.world import PHYSICS_RATE_HZ, AvatarState, World
from quadloco.session.statelog import TickRecord, format_record
from quadloco.vec import Vec3


class Phase(Enum):
    CALIBRATING = "calibrating"
    RUNNING = "running"
    FINISHED = "finished"


@dataclass(frozen=True)
class GameEvent:
    kind: str                       # checkpoint | respawn | finish | platform_collapsed
    index: Optional[int] = None     # checkpoint or platform index
    time: Optional[float] = None    # run-relative seconds

    def code(self) -> str:
        bits = [self.kind]
        if self.index is not None:
            bits.append(str(self.index))
        return ":".join(bits)

    def to_dict(self) -> dict:
        d: dict = {"kind": self.kind}
        if self.index is not None:
            d["index"] = self.index
        if self.time is not None:
            d["time"] = self.time
        return d


@dataclass
class SessionMetrics:
    checkpoint_times: list[tuple[int, float]] = field(default_factory=list)
    respawns: int = 0
    completion_time: Optional[float] = None
    distance_travelled: float = 0.0
    finished: bool = False
    input_exhausted_before_finish: bool = False
    ticks: int = 0


class Session:
    """One playthrough of one level. Single-threaded; every tick emits an
    immutable avatar snapshot and a log record."""

    def __init__(self, level: LevelSpec, source: InputSource, cfg: MapperConfig,
                 calibration: Optional[Calibration] = None,
                 rate: float = PHYSICS_RATE_HZ,
                 calibration_hold: float = 3.0,
                 log: Optional[list[str]] = None):
        self.level = level
        self.source = source
        self.cfg = cfg
        self.rate = rate
        self.dt = 1.0 / rate
        self.world = World(level)
        self.avatar: AvatarState = self.world.spawn_avatar(level.spawn, now=0.0)
        self.phase = Phase.CALIBRATING if calibration is None else Phase.RUNNING
        self.calibration = calibration
        self.calibration_hold = calibration_hold
        self._calib_frames: list[SkeletonFrame] = []
        self.prev_frame: Optional[SkeletonFrame] = None
        self.last_output: MapperOutput = stale_output()
        self.pose: QuadPose = neutral_pose()
        self.metrics = SessionMetrics()
        self.tick_count = 0
        self.run_start = 0.0
        self.last_checkpoint = -1
        self.log = log

    @property
    def clock(self) -> float:
        return self.tick_count / self.rate

    def _respawn_anchor(self) -> Vec3:
        if self.last_checkpoint >= 0:
            return self.level.checkpoints[self.last_checkpoint].anchor
        return self.level.spawn

    def _calibration_covered(self) -> float:
        if len(self._calib_frames) < 2:
            return 0.0
        span = self._calib_frames[-1].timestamp - self._calib_frames[0].timestamp
        return span * len(self._calib_frames) / (len(self._calib_frames) - 1)

    def tick(self) -> list[GameEvent]:
        """Advance one fixed tick; returns the tick's game events."""
        t_start = self.tick_count / self.rate
        now = (self.tick_count + 1) / self.rate
        frame = self.source.next_frame(t_start)
        events: list[GameEvent] = []

        if self.phase is Phase.CALIBRATING:
            if frame is not None:
                self._calib_frames.append(frame)
                if self._calibration_covered() + 1e-9 >= self.calibration_hold:
                    self.calibration = calibrate(self._calib_frames,
                                                 required_hold=self.calibration_hold)
                    self.prev_frame = self._calib_frames[-1]
                    self.phase = Phase.RUNNING
                    self.run_start = now
            elif self.source.exhausted():
                raise InsufficientFrames(
                    "input ended before the calibration hold completed")
            self.tick_count += 1
            self._log_tick(now, fresh=frame is not None, override="none", events=())
            return events

        if self.phase is Phase.FINISHED:
            self.tick_count += 1
            return events

        fresh = frame is not None
        if fresh and self.prev_frame is not None and self.calibration is not None:
            output = map_frame(self.prev_frame, frame, self.calibration,
                               self.avatar, self.cfg, now=t_start)
            self.pose = retarget_pose(frame, self.calibration, prev=self.pose)
        else:
            output = stale_output(self.last_output.debug)
        if fresh:
            self.prev_frame = frame
        self.last_output = output

        z_before = self.avatar.position.z
        self.avatar, report = self.world.step(self.avatar, output, self.dt, now)
        self.metrics.distance_travelled += max(0.0, self.avatar.position.z - z_before)

        for idx in report.collapsed:
            events.append(GameEvent("platform_collapsed", index=idx))

        if self.avatar.position.y < self.level.kill_y:
            anchor = self._respawn_anchor()
            self.world.reset_platforms()
            self.avatar = self.world.spawn_avatar(anchor, now=now)
            self.metrics.respawns += 1
            events.append(GameEvent("respawn", index=self.last_checkpoint))
        else:
            cps = self.level.checkpoints
            while (self.last_checkpoint + 1 < len(cps)
                   and self.avatar.position.z >= cps[self.last_checkpoint + 1].anchor.z):
                self.last_checkpoint += 1
                t_rel = now - self.run_start
                self.metrics.checkpoint_times.append((self.last_checkpoint, t_rel))
                events.append(GameEvent("checkpoint", index=self.last_checkpoint,
                                        time=t_rel))
            if self.avatar.position.z >= self.level.finish_z:
                self.metrics.completion_time = now - self.run_start
                self.metrics.finished = True
                self.phase = Phase.FINISHED
                events.append(GameEvent("finish", time=self.metrics.completion_time))

        self.tick_count += 1
        self.metrics.ticks = self.tick_count
        override = "jump" if output.jump is not None else (
            "loco" if output.locomotion is not None else "none")
        self._log_tick(now, fresh=fresh, override=override,
                       events=tuple(e.code() for e in events))
        return events

    def _log_tick(self, now: float, fresh: bool, override: str,
                  events: tuple[str, ...]) -> None:
        if self.log is None:
            return
        self.log.append(format_record(TickRecord(
            tick=self.tick_count - 1,
            clock=now,
            position=self.avatar.position,
            velocity=self.avatar.velocity,
            grounded=self.avatar.grounded,
            fresh=fresh,
            override=override,
            events=events,
        )))


REST_SPEED = 1e-4
EXHAUSTED_GRACE_S = 5.0


def run_headless(level: LevelSpec, source: InputSource, cfg: MapperConfig,
                 calibration: Optional[Calibration] = None,
                 max_seconds: float = 600.0,
                 collect_log: bool = True) -> tuple[SessionMetrics, list[str]]:
    """Deterministic batch run: ticks until the level is finished, the input
    runs dry and the avatar has settled, or the safety cap is hit."""
    log: list[str] = [] if collect_log else None  # type: ignore[assignment]
    session = Session(level, source, cfg, calibration=calibration, log=log)
    max_ticks = int(max_seconds * session.rate)
    grace_ticks = int(EXHAUSTED_GRACE_S * session.rate)
    idle = 0
    while session.phase is not Phase.FINISHED and session.tick_count < max_ticks:
        session.tick()
        if session.source.exhausted():
            idle += 1
            if session.avatar.velocity.norm() < REST_SPEED or idle > grace_ticks:
                break
    if session.phase is Phase.CALIBRATING:
        raise InsufficientFrames("input ended before the calibration hold completed")
    metrics = session.metrics
    metrics.ticks = session.tick_count
    if not metrics.finished:
        metrics.input_exhausted_before_finish = session.source.exhausted()
    return metrics, (log if collect_log else [])
