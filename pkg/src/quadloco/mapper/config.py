"""Movement-mapping tuning constants and their flat key=value file format."""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from quadloco.errors import ConfigError, InvalidC


@dataclass(frozen=True)
class MapperConfig:
    c: float = 0.25              # ground contact zone thickness, m
    b_xz: float = 1.6            # forward velocity boost
    b_y: float = 1.5             # jump vertical boost
    b_z: float = 0.6             # jump forward (lunge) boost
    v_y_max: float = 4.0         # jump vertical cap, m/s
    v_z_max: float = 6.0         # jump forward cap, m/s
    speed_threshold: float = 0.15  # limb speed gate for locomotion, m/s
    jump_trigger: float = 1.0    # minimum upward limb speed to jump, m/s
    coyote: float = 0.200        # grounded grace window, s

    def __post_init__(self) -> None:
        if self.c <= 0:
            raise InvalidC(f"c must be > 0, got {self.c}")
        for name in ("b_xz", "b_y", "b_z", "v_y_max", "v_z_max"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be > 0, got {getattr(self, name)}")
        for name in ("speed_threshold", "jump_trigger", "coyote"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} must be >= 0, got {getattr(self, name)}")

    def replace(self, **changes: float) -> "MapperConfig":
        unknown = set(changes) - set(config_keys())
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        return dataclasses.replace(self, **changes)

    def as_dict(self) -> dict[str, float]:
        return dataclasses.asdict(self)


def config_keys() -> tuple[str, ...]:
    return tuple(f.name for f in dataclasses.fields(MapperConfig))


def parse_config(text: str) -> MapperConfig:
    """Parse a flat key=value config file. Unknown keys are an error;
    omitted keys keep their defaults."""
    values: dict[str, float] = {}
    keys = set(config_keys())
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {line_no}: expected key = value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in keys:
            raise ConfigError(f"line {line_no}: unknown key {key!r}")
        if key in values:
            raise ConfigError(f"line {line_no}: duplicate key {key!r}")
        try:
            values[key] = float(value.strip())
        except ValueError:
            raise ConfigError(f"line {line_no}: non-numeric value for {key!r}") from None
    return MapperConfig(**values)


def render_config(cfg: MapperConfig) -> str:
    return "\n".join(f"{k} = {v!r}" for k, v in cfg.as_dict().items()) + "\n"


def load_config(path: str) -> MapperConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())
