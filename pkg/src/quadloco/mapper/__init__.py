from quadloco.mapper.calibration import (
    Calibration,
    calibrate,
    calibration_from_neutral,
)
from quadloco.mapper.config import (
    MapperConfig,
    config_keys,
    load_config,
    parse_config,
    render_config,
)
from quadloco.mapper.core import (
    JumpVelocity,
    LimbKinematics,
    MapperOutput,
    VelocitySample,
    contact_weight,
    grounded_with_coyote,
    jump_decision,
    limb_velocity,
    locomotion_velocity,
    map_frame,
    stale_output,
)

__all__ = [
    "Calibration",
    "JumpVelocity",
    "LimbKinematics",
    "MapperConfig",
    "MapperOutput",
    "VelocitySample",
    "calibrate",
    "calibration_from_neutral",
    "config_keys",
    "contact_weight",
    "grounded_with_coyote",
    "jump_decision",
    "limb_velocity",
    "load_config",
    "locomotion_velocity",
    "map_frame",
    "parse_config",
    "render_config",
    "stale_output",
]
