"""Elementary cellular automata on a ring, with standard rule numbering.

Cell ``i`` updates from the neighborhood ``(left, center, right)`` read as a
3-bit number; rule ``r`` maps neighborhood ``k`` to bit ``k`` of ``r``.
Boundaries are periodic.  Series can be read out of a trajectory vertically
(one cell over time, the default), horizontally (one time slice), or along
down-left diagonals (tracking patterns that drift one cell per step).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .measures import MeasureSet, SymbolSequence
from .rbn import BooleanNetwork
from .trajectory import Trajectory, series_matrix_measures

__all__ = [
    "EcaRule",
    "EcaConfig",
    "rule_table",
    "eca_step",
    "run_eca",
    "run_eca_many",
    "eca_series",
    "eca_measures",
    "as_boolean_network",
    "ORIENTATIONS",
]

ORIENTATIONS = ("vertical", "horizontal", "diagonal")
INITS = ("random", "single_cell")


@dataclass(frozen=True)
class EcaRule:
    """A rule number and its 8-entry output table, ``table[4l + 2c + r]``."""

    number: int
    table: np.ndarray

    def __post_init__(self):
        if not 0 <= self.number <= 255:
            raise ValueError("rule number must be in 0..255")
        table = np.asarray(self.table, dtype=np.uint8).ravel()
        if table.size != 8 or table.max(initial=0) > 1:
            raise ValueError("table must be 8 bits")
        expected = (self.number >> np.arange(8)) & 1
        if not np.array_equal(table, expected):
            raise ValueError("table does not match rule number")
        object.__setattr__(self, "table", table)


def rule_table(number: int) -> EcaRule:
    """Build the lookup table for a rule number (0..255)."""
    number = int(number)
    if not 0 <= number <= 255:
        raise ValueError("rule number must be in 0..255")
    table = ((number >> np.arange(8)) & 1).astype(np.uint8)
    return EcaRule(number, table)


@dataclass(frozen=True)
class EcaConfig:
    """Parameters of one automaton run; ``seed`` only affects a random init."""

    rule: EcaRule
    n: int = 256
    init: str = "random"
    transient: int = 1024
    window: int = 1024
    seed: int = 0
    orientation: str = "vertical"

    def __post_init__(self):
        if isinstance(self.rule, (int, np.integer)):
            object.__setattr__(self, "rule", rule_table(int(self.rule)))
        elif not isinstance(self.rule, EcaRule):
            raise ValueError("rule must be an EcaRule or an integer 0..255")
        if self.n < 3:
            raise ValueError("n must be >= 3")
        if self.init not in INITS:
            raise ValueError(f"init must be one of {INITS}")
        if self.transient < 0:
            raise ValueError("transient must be >= 0")
        if self.window < 2:
            raise ValueError("window must be >= 2")
        if self.orientation not in ORIENTATIONS:
            raise ValueError(f"orientation must be one of {ORIENTATIONS}")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def _step_matrix(states: np.ndarray, table: np.ndarray) -> np.ndarray:
    # rows evolve independently; axis -1 is the ring
    left = np.roll(states, 1, axis=-1)
    right = np.roll(states, -1, axis=-1)
    return table[(left << 2) | (states << 1) | right]


def eca_step(state: np.ndarray | Sequence[int], rule: EcaRule) -> np.ndarray:
    """One synchronous update of an n-bit ring state."""
    state = np.asarray(state, dtype=np.uint8)
    if state.ndim != 1 or state.size < 3:
        raise ValueError("state must be a ring of at least 3 bits")
    if state.max(initial=0) > 1:
        raise ValueError("state must be binary")
    return _step_matrix(state, rule.table)


def _initial_states(config: EcaConfig, seeds: Sequence[int]) -> np.ndarray:
    rows = np.empty((len(seeds), config.n), dtype=np.uint8)
    for j, seed in enumerate(seeds):
        if config.init == "random":
            rows[j] = np.random.default_rng(seed).integers(
                0, 2, size=config.n, dtype=np.uint8
            )
        else:
            rows[j] = 0
            rows[j, config.n // 2] = 1  # single cell, centered
    return rows


def _run_matrix(states: np.ndarray, table: np.ndarray, transient: int, window: int) -> np.ndarray:
    for _ in range(transient):
        states = _step_matrix(states, table)
    recorded = np.empty((window,) + states.shape, dtype=np.uint8)
    for t in range(window):
        recorded[t] = states
        states = _step_matrix(states, table)
    return recorded


def run_eca(config: EcaConfig) -> Trajectory:
    """Record a window of states; the first recorded state is the one reached
    after ``transient`` steps (the initial state itself when transient=0)."""
    start = _initial_states(config, [config.seed])[0]
    recorded = _run_matrix(start, config.rule.table, config.transient, config.window)
    return Trajectory(recorded, config.transient)


def run_eca_many(
    config: EcaConfig, seeds: Sequence[int], *, max_batch: int = 64
) -> list[Trajectory]:
    """Run one instance per seed (``config.seed`` is ignored), batching the
    rows through the update kernel; bit-identical to per-seed :func:`run_eca`."""
    seeds = list(seeds)
    trajectories: list[Trajectory] = []
    for start in range(0, len(seeds), max_batch):
        chunk = seeds[start : start + max_batch]
        states = _initial_states(config, chunk)
        recorded = _run_matrix(states, config.rule.table, config.transient, config.window)
        for j in range(len(chunk)):
            trajectories.append(Trajectory(recorded[:, j, :].copy(), config.transient))
    return trajectories


def _oriented_series(traj: Trajectory, orientation: str) -> np.ndarray:
    """Units x length bit matrix for the requested read-out direction."""
    states = traj.states
    if orientation == "vertical":
        return states.T
    if orientation == "horizontal":
        return states
    if orientation == "diagonal":
        # element t of diagonal u is states[t, (u - t) mod n]: a pattern
        # drifting one cell left per step reads as a constant series
        t = np.arange(traj.window)
        cols = (np.arange(traj.n)[:, None] - t[None, :]) % traj.n
        return states[t[None, :], cols]
    raise ValueError(f"orientation must be one of {ORIENTATIONS}")


def eca_series(traj: Trajectory, index: int, orientation: str = "vertical") -> SymbolSequence:
    """One binary series from a trajectory.

    ``vertical``: cell ``index`` over time; ``horizontal``: the full row at
    time ``index``; ``diagonal``: the down-left diagonal starting at cell
    ``index`` of the first recorded state.
    """
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}")
    limit = traj.window if orientation == "horizontal" else traj.n
    if not 0 <= index < limit:
        raise IndexError(f"series index out of range: {index}")
    if orientation == "vertical":
        values = traj.states[:, index]
    elif orientation == "horizontal":
        values = traj.states[index, :]
    else:
        t = np.arange(traj.window)
        values = traj.states[t, (index - t) % traj.n]
    return SymbolSequence(values.astype(np.int64), 1)


def eca_measures(
    traj: Trajectory,
    scale: int,
    orientation: str = "vertical",
    *,
    average_h: bool = False,
) -> MeasureSet:
    """Automaton-level measures over series in the chosen orientation.

    Same pipeline as RBN network measures: per-series normalized information
    averaged into the system-level information behind E/S/C, H from the final
    two macro-states along the series axis.
    """
    return series_matrix_measures(
        _oriented_series(traj, orientation), scale, average_h=average_h
    )


def as_boolean_network(
    rule: EcaRule | int, n: int, state: np.ndarray | Sequence[int]
) -> BooleanNetwork:
    """The equivalent Boolean network: ring topology, one shared rule table.

    Node inputs are ``(i-1, i, i+1) mod n`` in that order, so the lookup index
    matches the automaton's ``(left, center, right)`` reading.
    """
    if isinstance(rule, (int, np.integer)):
        rule = rule_table(int(rule))
    if n < 3:
        raise ValueError("n must be >= 3")
    idx = np.arange(n, dtype=np.int64)
    inputs = [np.array([(i - 1) % n, i, (i + 1) % n], dtype=np.int64) for i in idx]
    tables = [rule.table.copy() for _ in idx]
    return BooleanNetwork(n, inputs, tables, np.asarray(state, dtype=np.uint8))
