from quadloco.physics.level import (
    BUNDLED_LEVELS,
    Checkpoint,
    LevelSpec,
    PlatformKind,
    PlatformSpec,
    load_level,
    parse_level,
)
from quadloco.physics.pose import (
    FOOT_ANCHORS,
    LIMB_TO_FOOT,
    QuadPose,
    neutral_pose,
    retarget_pose,
)
from quadloco.physics.world import (
    DEFAULT_HALF_EXTENTS,
    GRAVITY,
    GROUND_FRICTION,
    PHYSICS_RATE_HZ,
    AvatarState,
    ContactReport,
    PlatformState,
    World,
    resolve_collisions,
    update_platforms,
)

__all__ = [
    "AvatarState",
    "BUNDLED_LEVELS",
    "Checkpoint",
    "ContactReport",
    "DEFAULT_HALF_EXTENTS",
    "FOOT_ANCHORS",
    "GRAVITY",
    "GROUND_FRICTION",
    "LIMB_TO_FOOT",
    "LevelSpec",
    "PHYSICS_RATE_HZ",
    "PlatformKind",
    "PlatformSpec",
    "PlatformState",
    "QuadPose",
    "World",
    "load_level",
    "neutral_pose",
    "parse_level",
    "resolve_collisions",
    "retarget_pose",
    "update_platforms",
]
