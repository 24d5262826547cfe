"""Sagittal-plane rigid-body simulation for a 6-link humanoid chain."""

from .model import (
    CollisionShape,
    JointSpec,
    LinkSpec,
    ModelError,
    RobotModel,
    load_robot_model,
)
from .world import (
    GROUND,
    Contact,
    SimulationDiverged,
    World,
    apply_impulse,
    build_world,
    count_self_collisions,
    kinetic_energy,
    settle,
    step,
)

__all__ = [
    "CollisionShape",
    "JointSpec",
    "LinkSpec",
    "ModelError",
    "RobotModel",
    "load_robot_model",
    "GROUND",
    "Contact",
    "SimulationDiverged",
    "World",
    "apply_impulse",
    "build_world",
    "count_self_collisions",
    "kinetic_energy",
    "settle",
    "step",
]
