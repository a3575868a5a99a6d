"""Domain types shared by every part of the mesh-control lab.

The mesh under control is fixed at two services and two processing nodes:
each service request hits a front node, is routed to one of the two
processing nodes, and blocked requests never enter the mesh at all.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

OBJECTIVE_KINDS = ("MO1", "MO2", "MO3")


@dataclass(frozen=True)
class MeshConfig:
    """Topology constants. Only the 2-service / 2-node mesh is supported."""

    num_services: int = 2
    num_processing_nodes: int = 2
    time_step_seconds: float = 5.0

    def __post_init__(self):
        if self.num_services != 2:
            raise ValueError("num_services is fixed at 2")
        if self.num_processing_nodes != 2:
            raise ValueError("num_processing_nodes is fixed at 2")
        if self.time_step_seconds <= 0:
            raise ValueError("time_step_seconds must be positive")


@dataclass(frozen=True)
class Action:
    """Control vector: routing weights toward node 1 plus blocking rates.

    The complementary routing weights p12 = 1 - p11 and p22 = 1 - p21 are
    derived properties, never stored, so the pair can't disagree.
    """

    p11: float
    p21: float
    b1: float
    b2: float

    def __post_init__(self):
        for name in ("p11", "p21", "b1", "b2"):
            v = getattr(self, name)
            if not (0.0 <= v <= 1.0):
                raise ValueError(f"{name}={v!r} outside [0, 1]")

    @property
    def p12(self) -> float:
        return 1.0 - self.p11

    @property
    def p22(self) -> float:
        return 1.0 - self.p21

    def as_array(self) -> np.ndarray:
        return np.array([self.p11, self.p21, self.b1, self.b2], dtype=np.float64)


@dataclass(frozen=True)
class MeshState:
    """What the controller observes at one time step: response times and offered loads."""

    d1: float
    d2: float
    l1: float
    l2: float

    def __post_init__(self):
        for name in ("d1", "d2", "l1", "l2"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative")


@dataclass(frozen=True)
class ManagementObjective:
    """End-to-end goal encoded as a reward composition.

    kind selects the composition: MO1 maximizes total carried load under the
    delay bounds, MO2 weights the services by utility (service 2 prioritized
    by default), MO3 maximizes service 2's carried load while keeping
    service 1 above a starvation floor.
    """

    kind: str
    delay_bound_1: float = 0.1
    delay_bound_2: float = 0.1
    utility_weight_1: float = 1.0
    utility_weight_2: float = 5.0
    min_carried_load: float = 5.0
    delay_steepness: float = 50.0
    load_steepness: float = 1.0

    def __post_init__(self):
        if self.kind not in OBJECTIVE_KINDS:
            raise ValueError(f"unknown objective kind {self.kind!r}")
        if self.delay_bound_1 <= 0 or self.delay_bound_2 <= 0:
            raise ValueError("delay bounds must be positive")
        if self.utility_weight_1 <= 0 or self.utility_weight_2 <= 0:
            raise ValueError("utility weights must be positive")
        if self.min_carried_load < 0:
            raise ValueError("min_carried_load must be nonnegative")
        if self.delay_steepness <= 0 or self.load_steepness <= 0:
            raise ValueError("steepness parameters must be positive")


@dataclass(frozen=True)
class EpisodeRecord:
    """One trace row: loads and action taken, delays and carried loads observed."""

    t: int
    l1: float
    l2: float
    action: Action
    d1: float
    d2: float
    lc1: float
    lc2: float
    reward: Optional[float] = None
    optimal_reward: Optional[float] = None

    def __post_init__(self):
        for load, blocked, carried in ((self.l1, self.action.b1, self.lc1),
                                       (self.l2, self.action.b2, self.lc2)):
            if not math.isclose(carried, load * (1.0 - blocked),
                                rel_tol=1e-9, abs_tol=1e-12):
                raise ValueError("carried load inconsistent with offered load and blocking")


class ActionGrid:
    """Discretized action set: every combination of the per-dimension levels.

    Ordering is lexicographic in (p11, p21, b1, b2) with b2 varying fastest,
    so index 0 is the all-zeros action and the last index is all-ones.
    Indices are stable across runs and shared by the oracle, the agent and
    persisted artifacts. Instances are immutable and safe to share.
    """

    def __init__(self, levels: int, values: np.ndarray, array: np.ndarray):
        self.levels = levels
        self.values = values
        self._array = array
        self._array.setflags(write=False)

    def __len__(self) -> int:
        return self._array.shape[0]

    def __getitem__(self, index: int) -> Action:
        p11, p21, b1, b2 = self._array[index]
        return Action(p11=float(p11), p21=float(p21), b1=float(b1), b2=float(b2))

    def __iter__(self):
        return (self[i] for i in range(len(self)))

    @property
    def actions(self) -> list:
        return [self[i] for i in range(len(self))]

    def as_array(self) -> np.ndarray:
        """(n, 4) read-only view, columns (p11, p21, b1, b2)."""
        return self._array


def build_action_grid(levels: int = 6) -> ActionGrid:
    """Enumerate all levels**4 control vectors with values k/(levels-1)."""
    if not isinstance(levels, (int, np.integer)) or levels < 2:
        raise ValueError("levels must be an integer >= 2")
    values = np.arange(levels, dtype=np.float64) / (levels - 1)
    array = np.stack(
        np.meshgrid(values, values, values, values, indexing="ij"), axis=-1
    ).reshape(-1, 4)
    return ActionGrid(levels=int(levels), values=values, array=array)


def carried_load(load: float, blocking: float) -> float:
    """Admitted request rate after blocking a fraction of the offered load."""
    if not (0.0 <= blocking <= 1.0):
        raise ValueError(f"blocking rate {blocking!r} outside [0, 1]")
    if load < 0:
        raise ValueError("offered load must be nonnegative")
    return load * (1.0 - blocking)
