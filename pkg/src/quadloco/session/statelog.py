"""Per-tick state log: line-delimited, reproducible to the bit.

Floats are rendered with repr so identical runs give identical text; the
run hash is the sha256 of the log, which makes determinism checkable by
string equality alone.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass

from quadloco.vec import Vec3


@dataclass(frozen=True)
class TickRecord:
    tick: int
    clock: float
    position: Vec3
    velocity: Vec3
    grounded: bool
    fresh: bool           # tick consumed a new sensor sample
    override: str         # none | loco | jump
    events: tuple[str, ...] = ()


def format_record(r: TickRecord) -> str:
    ev = ",".join(r.events)
    return (f"{r.tick} t={r.clock!r} "
            f"p={r.position.x!r},{r.position.y!r},{r.position.z!r} "
            f"v={r.velocity.x!r},{r.velocity.y!r},{r.velocity.z!r} "
            f"g={int(r.grounded)} f={int(r.fresh)} o={r.override} e={ev}")


def parse_record(line: str) -> TickRecord:
    parts = line.split()
    tick = int(parts[0])
    fields = dict(p.split("=", 1) for p in parts[1:])
    px, py, pz = (float(v) for v in fields["p"].split(","))
    vx, vy, vz = (float(v) for v in fields["v"].split(","))
    events = tuple(e for e in fields.get("e", "").split(",") if e)
    return TickRecord(
        tick=tick,
        clock=float(fields["t"]),
        position=Vec3(px, py, pz),
        velocity=Vec3(vx, vy, vz),
        grounded=fields["g"] == "1",
        fresh=fields["f"] == "1",
        override=fields["o"],
        events=events,
    )


def parse_log(text: str) -> list[TickRecord]:
    return [parse_record(line) for line in text.splitlines() if line.strip()]


def run_hash(log_text: str) -> str:
    return hashlib.sha256(log_text.encode("utf-8")).hexdigest()
