"""Operator entry point: replay traces, run synthetic sessions, validate
files, launch the streaming service, and benchmark the pipeline.

Config precedence is defaults < --config file < --set key=value flags; the
effective config is echoed in every run report.
"""
from __future__ import annotations

import argparse
import asyncio
import hashlib
import json
import signal
import sys
import time
from dataclasses import asdict, dataclass

from quadloco.errors import QuadlocoError
from quadloco.ingest.clock import CycleSource, TraceSource
from quadloco.ingest.synth import NEUTRAL_POSE, synth_gait, synth_jump
from quadloco.ingest.trace import TrackedSequence, parse_trace
from quadloco.mapper.calibration import calibration_from_neutral
from quadloco.mapper.config import MapperConfig, load_config
from quadloco.physics.level import LevelSpec, PlatformKind, PlatformSpec, load_level
from quadloco.session.loop import Session, SessionMetrics, run_headless
from quadloco.session.statelog import run_hash
from quadloco.stream.server import StreamServer
from quadloco.vec import Vec3


@dataclass
class RunReport:
    level: str
    input_desc: str
    metrics: SessionMetrics
    hash: str
    wall_seconds: float
    config: dict[str, float]

    def lines(self) -> list[str]:
        m = self.metrics
        if m.finished:
            result = f"finished in {m.completion_time:.3f} s"
        elif m.input_exhausted_before_finish:
            result = "input exhausted before finish"
        else:
            result = "did not finish"
        out = [
            f"level:      {self.level}",
            f"input:      {self.input_desc}",
            f"result:     {result}",
            f"respawns:   {m.respawns}",
            f"checkpoints: {[(i, round(t, 3)) for i, t in m.checkpoint_times]}",
            f"distance:   {m.distance_travelled:.2f} m over {m.ticks} ticks",
            f"run hash:   {self.hash}",
            f"wall:       {self.wall_seconds:.3f} s",
            "config:     " + " ".join(f"{k}={v}" for k, v in self.config.items()),
        ]
        return out

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "input": self.input_desc,
            "metrics": asdict(self.metrics),
            "run_hash": self.hash,
            "wall_seconds": self.wall_seconds,
            "config": self.config,
        }


def _build_config(args: argparse.Namespace) -> MapperConfig:
    cfg = load_config(args.config) if args.config else MapperConfig()
    for pair in args.set or []:
        key, _, value = pair.partition("=")
        if not _:
            raise QuadlocoError(f"--set expects key=value, got {pair!r}")
        cfg = cfg.replace(**{key.strip(): float(value)})
    return cfg


def _emit_report(report: RunReport, args: argparse.Namespace,
                 log_lines: list[str]) -> None:
    print("\n".join(report.lines()))
    if getattr(args, "log", None):
        with open(args.log, "w", encoding="utf-8") as fh:
            fh.write("\n".join(log_lines) + "\n")
        print(f"state log:  {args.log} ({len(log_lines)} records)")
    if getattr(args, "report", None):
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(report.to_json(), fh, indent=2)


def _run_and_report(level_ref, seq_or_source, input_desc: str,
                    args: argparse.Namespace, calibration=None) -> int:
    cfg = _build_config(args)
    level = load_level(level_ref)
    source = (TraceSource(seq_or_source)
              if isinstance(seq_or_source, TrackedSequence) else seq_or_source)
    started = time.perf_counter()
    metrics, log = run_headless(level, source, cfg, calibration=calibration)
    wall = time.perf_counter() - started
    report = RunReport(
        level=f"{level.name} ({level_ref})",
        input_desc=input_desc,
        metrics=metrics,
        hash=run_hash("\n".join(log)),
        wall_seconds=wall,
        config=cfg.as_dict(),
    )
    _emit_report(report, args, log)
    return 0


def cmd_validate_trace(args: argparse.Namespace) -> int:
    with open(args.file, "rb") as fh:
        seq = parse_trace(fh.read())
    print(f"{args.file}: {len(seq.frames)} frames, "
          f"{seq.span():.3f} s @ {seq.nominal_rate:.1f} Hz nominal")
    return 0


def cmd_replay(args: argparse.Namespace) -> int:
    with open(args.trace, "rb") as fh:
        seq = parse_trace(fh.read())
    desc = f"trace {args.trace} ({len(seq.frames)} frames @ {seq.nominal_rate:.1f} Hz)"
    return _run_and_report(args.level, seq, desc, args, calibration=None)


def cmd_synth(args: argparse.Namespace) -> int:
    if args.kind == "gait":
        seq = synth_gait(args.frequency, args.amplitude, args.duration,
                         noise_m=args.noise, seed=args.seed)
        desc = (f"synth gait {args.frequency} Hz x {args.amplitude} m "
                f"for {args.duration} s")
    else:
        seq = synth_jump(args.peak_speed, args.onset, args.duration,
                         noise_m=args.noise, seed=args.seed)
        desc = (f"synth jump peak {args.peak_speed} m/s at {args.onset} s "
                f"of {args.duration} s")
    calibration = calibration_from_neutral(NEUTRAL_POSE)
    return _run_and_report(args.level, seq, desc, args, calibration=calibration)


def _endless_level() -> LevelSpec:
    return LevelSpec(
        "bench runway", Vec3(0, 0, 0), -10.0, 1e18,
        platforms=(PlatformSpec(PlatformKind.STATIC, Vec3(0, -0.25, 5.0e5),
                                Vec3(2, 0.25, 5.0e5 + 10)),))


def cmd_bench(args: argparse.Namespace) -> int:
    if args.ticks <= 0:
        raise QuadlocoError("--ticks must be a positive number of ticks")
    cfg = _build_config(args)
    calibration = calibration_from_neutral(NEUTRAL_POSE)
    base = synth_gait(1.0, 0.3, 10.0, seed=args.seed)

    session = Session(_endless_level(), CycleSource(base), cfg,
                      calibration=calibration)
    started = time.perf_counter()
    for _ in range(args.ticks):
        session.tick()
    wall = time.perf_counter() - started

    state = session.avatar
    digest = hashlib.sha256(
        f"{args.ticks} {state.position!r} {state.velocity!r} "
        f"{session.metrics.distance_travelled!r}".encode()).hexdigest()
    rate = args.ticks / wall if wall > 0 else float("inf")
    print(f"ticks:      {args.ticks} ({args.ticks / 60.0:.1f} simulated seconds)")
    print(f"wall:       {wall:.3f} s")
    print(f"throughput: {rate:.0f} ticks/s ({rate / 60.0:.1f}x real-time)")
    print(f"run hash:   {digest}")
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump({"ticks": args.ticks, "wall_seconds": wall,
                       "ticks_per_second": rate, "run_hash": digest,
                       "config": cfg.as_dict()}, fh, indent=2)
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    cfg = _build_config(args)
    host, _, port_text = args.bind.rpartition(":")
    if not host or not port_text.isdigit():
        raise QuadlocoError(f"--bind expects host:port, got {args.bind!r}")

    async def main() -> None:
        server = StreamServer(host=host, port=int(port_text), cfg=cfg,
                              level_id=int(args.level))
        await server.start()
        print(f"quadloco stream service on ws://{host}:{server.port} "
              f"(protocol v1, level {args.level})", flush=True)
        loop = asyncio.get_running_loop()
        for sig in (signal.SIGINT, signal.SIGTERM):
            loop.add_signal_handler(sig, server.request_stop)
        await server.run_until_stopped()
        await server.stop()
        m = server.session.metrics
        print(f"final: distance {m.distance_travelled:.2f} m, "
              f"respawns {m.respawns}, ticks {m.ticks}")

    asyncio.run(main())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadloco",
        description="supine limb motion -> quadruped locomotion engine")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_log=True):
        p.add_argument("--level", default="1",
                       help="bundled level id (1..3) or level file path")
        p.add_argument("--config", help="mapper config file (key = value lines)")
        p.add_argument("--set", action="append", metavar="KEY=VALUE",
                       help="override one config key (repeatable)")
        if with_log:
            p.add_argument("--log", help="write the per-tick state log here")
            p.add_argument("--report", help="write a JSON run report here")

    v = sub.add_parser("validate-trace", help="parse a trace file, exit 0/1")
    v.add_argument("file")
    v.set_defaults(fn=cmd_validate_trace)

    r = sub.add_parser("replay", help="replay a recorded trace headlessly")
    r.add_argument("--trace", required=True)
    common(r)
    r.set_defaults(fn=cmd_replay)

    s = sub.add_parser("synth", help="run a generated motion sequence")
    s.add_argument("kind", choices=("gait", "jump"))
    s.add_argument("--frequency", type=float, default=1.0)
    s.add_argument("--amplitude", type=float, default=0.3)
    s.add_argument("--peak-speed", type=float, default=2.0)
    s.add_argument("--onset", type=float, default=0.5)
    s.add_argument("--duration", type=float, default=12.0)
    s.add_argument("--noise", type=float, default=0.0,
                   help="gaussian position noise sigma in meters")
    s.add_argument("--seed", type=int, default=None)
    common(s)
    s.set_defaults(fn=cmd_synth)

    b = sub.add_parser("bench", help="measure pipeline ticks per wall-second")
    b.add_argument("--ticks", type=int, default=60000)
    b.add_argument("--seed", type=int, default=None)
    b.add_argument("--report", help="write a JSON throughput report here")
    b.add_argument("--config", help="mapper config file")
    b.add_argument("--set", action="append", metavar="KEY=VALUE")
    b.set_defaults(fn=cmd_bench)

    sv = sub.add_parser("serve", help="run the live WebSocket session service")
    sv.add_argument("--bind", default="127.0.0.1:8765")
    common(sv, with_log=False)
    sv.set_defaults(fn=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (QuadlocoError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
