"""Offered-load generators.

Two patterns: a level-switching random pattern used for training and trace
collection, and a sinusoidal pattern kept unseen during training to probe
generalization. Both are pure functions of (pattern, step, service), so any
step of any stream can be evaluated independently and reproducibly.
"""

import math
from dataclasses import dataclass

import numpy as np

RANDOM = "random"
SINUSOIDAL = "sinusoidal"

SIN_MEAN = 12.5
SIN_AMPLITUDE = 7.5

_U64 = np.uint64(0xFFFFFFFFFFFFFFFF)
_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


@dataclass(frozen=True)
class LoadPattern:
    kind: str
    levels: tuple = (5.0, 10.0, 15.0, 20.0)
    period: int = 100
    phases: tuple = (0.0, math.pi / 2)
    seed: int = 0

    def __post_init__(self):
        if self.kind not in (RANDOM, SINUSOIDAL):
            raise ValueError(f"unknown load pattern kind {self.kind!r}")
        if not self.levels or any(v < 0 for v in self.levels):
            raise ValueError("levels must be nonempty and nonnegative")
        if self.period <= 0:
            raise ValueError("period must be positive")
        if len(self.phases) != 2:
            raise ValueError("phases must hold one value per service")


def _mix64(x):
    """SplitMix64 finalizer; accepts uint64 scalars or arrays."""
    x = (x ^ (x >> np.uint64(30))) * _MIX1
    x = (x ^ (x >> np.uint64(27))) * _MIX2
    return x ^ (x >> np.uint64(31))


def _stream_hash(seed: int, service: int, steps):
    base = _mix64((np.uint64(seed % (1 << 64)) ^ (np.uint64(service) * _MIX1)) & _U64)
    counter = np.asarray(steps, dtype=np.uint64) * _GOLDEN
    return _mix64(base + counter)


def _check_service(service: int):
    if service not in (1, 2):
        raise ValueError("service must be 1 or 2")


def random_load(pattern: LoadPattern, step: int, service: int = 1) -> float:
    """Load level for one step of the random pattern, uniform over the levels.

    The two service streams are independent: each is a separate hash stream
    derived from the pattern seed.
    """
    if pattern.kind != RANDOM:
        raise ValueError("pattern is not a random load pattern")
    _check_service(service)
    with np.errstate(over="ignore"):
        h = _stream_hash(pattern.seed, service, step)
    return float(pattern.levels[int(h % np.uint64(len(pattern.levels)))])


def random_load_series(pattern: LoadPattern, steps: int, service: int = 1) -> np.ndarray:
    """Vectorized random_load over steps 0..steps-1."""
    if pattern.kind != RANDOM:
        raise ValueError("pattern is not a random load pattern")
    _check_service(service)
    with np.errstate(over="ignore"):
        h = _stream_hash(pattern.seed, service, np.arange(steps))
    idx = (h % np.uint64(len(pattern.levels))).astype(np.int64)
    return np.asarray(pattern.levels, dtype=np.float64)[idx]


def sinusoidal_load(pattern: LoadPattern, step: int, service: int = 1) -> float:
    """Load for one step of the sinusoid: 12.5 + 7.5 * sin(2*pi*step/period + phase)."""
    if pattern.kind != SINUSOIDAL:
        raise ValueError("pattern is not a sinusoidal load pattern")
    _check_service(service)
    phase = pattern.phases[service - 1]
    return SIN_MEAN + SIN_AMPLITUDE * math.sin(2.0 * math.pi * step / pattern.period + phase)


def offered_loads(pattern: LoadPattern, step: int) -> tuple:
    """(l1, l2) at one step, whatever the pattern kind."""
    if pattern.kind == RANDOM:
        return (random_load(pattern, step, 1), random_load(pattern, step, 2))
    return (sinusoidal_load(pattern, step, 1), sinusoidal_load(pattern, step, 2))
