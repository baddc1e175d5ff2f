"""quadloco: deterministic supine-limb-motion to quadruped-locomotion engine."""

from quadloco.vec import Vec3
from quadloco.joints import Confidence, END_EFFECTORS, JointId

__version__ = "0.1.0"

__all__ = ["Confidence", "END_EFFECTORS", "JointId", "Vec3", "__version__"]
