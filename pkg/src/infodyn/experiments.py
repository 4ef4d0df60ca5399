"""Batch experiment harness: parameter sweeps with reproducible seeding.

Instance seeds are derived from a master seed by stable hashing, so results
are bit-identical regardless of execution order or worker count.  Each sweep
returns one :class:`SweepResult` per (parameter, scale) cell, carrying the
per-instance measures alongside the aggregate statistics so the aggregates
can always be recomputed.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from .eca import EcaConfig, eca_measures, run_eca_many
from .measures import MeasureSet, uncorrelated_homeostasis
from .rbn import RbnConfig, network_measures, run_rbn_many

__all__ = [
    "DEFAULT_RULES",
    "PROFILE_RULES",
    "DEFAULT_K_GRID",
    "SeedSchedule",
    "derive_seed",
    "aggregate",
    "SweepResult",
    "ProfileResult",
    "rbn_sweep",
    "eca_class_survey",
    "multiscale_profiles",
    "instance_rows",
    "aggregate_rows",
    "write_sweep_files",
]

# One rule per surveyed equivalence class: five each from classes I-III and
# the four class-IV classes.
DEFAULT_RULES = (0, 8, 32, 40, 128, 1, 2, 3, 4, 5, 18, 22, 30, 45, 161, 41, 54, 106, 110)
PROFILE_RULES = (0, 1, 110, 30)
DEFAULT_K_GRID = tuple(round(1.0 + 0.2 * i, 1) for i in range(21))

STAT_NAMES = ("mean", "median", "q25", "q75", "whisker_lo", "whisker_hi")
MEASURE_KEYS = ("E", "S", "C", "H")


@dataclass(frozen=True)
class SeedSchedule:
    """Derives per-instance seeds from (master seed, experiment id, index)."""

    master_seed: int

    def seed_for(self, experiment_id: str, index: int) -> int:
        key = f"{self.master_seed}|{experiment_id}|{index}".encode()
        digest = hashlib.blake2b(key, digest_size=8).digest()
        return int.from_bytes(digest, "little")


def derive_seed(schedule: SeedSchedule, experiment_id: str, index: int) -> int:
    """Stable, order-independent 64-bit seed for one work item."""
    return schedule.seed_for(experiment_id, index)


def _measure_values(measures: Sequence[MeasureSet], key: str) -> np.ndarray:
    attr = {
        "E": "emergence",
        "S": "self_organization",
        "C": "complexity",
        "H": "homeostasis",
    }[key]
    values = [getattr(ms, attr) for ms in measures]
    if any(v is None for v in values):
        raise ValueError(f"measure {key} missing from an instance")
    return np.asarray(values, dtype=float)


def aggregate(measures: Sequence[MeasureSet]) -> dict[str, dict[str, float]]:
    """Mean, median, quartiles, and Tukey whiskers per measure.

    Quartiles use linear interpolation; whiskers are the extreme values
    within 1.5 IQR of the quartiles (the usual boxplot convention).
    """
    if not measures:
        raise ValueError("empty list")
    stats: dict[str, dict[str, float]] = {name: {} for name in STAT_NAMES}
    for key in MEASURE_KEYS:
        values = _measure_values(measures, key)
        q25, median, q75 = np.percentile(values, [25, 50, 75], method="linear")
        iqr = q75 - q25
        lo = values[values >= q25 - 1.5 * iqr].min()
        hi = values[values <= q75 + 1.5 * iqr].max()
        stats["mean"][key] = float(values.mean())
        stats["median"][key] = float(median)
        stats["q25"][key] = float(q25)
        stats["q75"][key] = float(q75)
        stats["whisker_lo"][key] = float(lo)
        stats["whisker_hi"][key] = float(hi)
    return stats


@dataclass
class SweepResult:
    """Per-instance measures and aggregates for one (parameter, scale) cell."""

    experiment: str
    parameter: float | int
    scale: int
    seeds: list[int]
    instances: list[MeasureSet]
    aggregate: dict[str, dict[str, float]]


def _ordered_map(fn: Callable, items: Sequence, threads: int) -> list:
    """Deterministic parallel map: results always in input order."""
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def rbn_sweep(
    n: int = 100,
    k_grid: Sequence[float] = DEFAULT_K_GRID,
    instances: int = 1000,
    transient: int = 1000,
    window: int = 1000,
    scales: Sequence[int] = (1, 2, 4, 8),
    master_seed: int = 0,
    threads: int = 1,
) -> list[SweepResult]:
    """Connectivity sweep: `instances` independent networks per K value."""
    if instances < 1:
        raise ValueError("instances must be >= 1")
    schedule = SeedSchedule(master_seed)

    def cell(k: float) -> list[SweepResult]:
        experiment_id = f"rbn_sweep/k={float(k):.9g}"
        seeds = [schedule.seed_for(experiment_id, i) for i in range(instances)]
        config = RbnConfig(n=n, k=float(k), transient=transient, window=window)
        trajectories = run_rbn_many(config, seeds)
        results = []
        for scale in scales:
            measured = [network_measures(t, scale) for t in trajectories]
            results.append(
                SweepResult("rbn_sweep", float(k), int(scale), seeds, measured, aggregate(measured))
            )
        return results

    nested = _ordered_map(cell, list(k_grid), threads)
    return [result for cell_results in nested for result in cell_results]


def _rule_survey(
    experiment: str,
    rules: Sequence[int],
    n: int,
    instances: int,
    transient: int,
    window: int,
    scales: Sequence[int],
    master_seed: int,
    threads: int,
) -> list[SweepResult]:
    if instances < 1:
        raise ValueError("instances must be >= 1")
    schedule = SeedSchedule(master_seed)

    def cell(rule: int) -> list[SweepResult]:
        experiment_id = f"{experiment}/rule={int(rule)}"
        seeds = [schedule.seed_for(experiment_id, i) for i in range(instances)]
        config = EcaConfig(rule=int(rule), n=n, transient=transient, window=window)
        trajectories = run_eca_many(config, seeds)
        results = []
        for scale in scales:
            measured = [eca_measures(t, scale) for t in trajectories]
            results.append(
                SweepResult(experiment, int(rule), int(scale), seeds, measured, aggregate(measured))
            )
        return results

    nested = _ordered_map(cell, [int(r) for r in rules], threads)
    return [result for cell_results in nested for result in cell_results]


def eca_class_survey(
    rules: Sequence[int] = DEFAULT_RULES,
    n: int = 256,
    instances: int = 50,
    transient: int = 4096,
    window: int = 4096,
    scales: Sequence[int] = (1, 2, 4, 8),
    master_seed: int = 0,
    threads: int = 1,
) -> list[SweepResult]:
    """Rule survey with random initial states, averaged over instances."""
    for rule in rules:
        if not 0 <= int(rule) <= 255:
            raise ValueError(f"rule out of range: {rule}")
    return _rule_survey(
        "eca_survey", rules, n, instances, transient, window, scales, master_seed, threads
    )


@dataclass
class ProfileResult:
    """Per-rule measure trajectories across scales, plus the H reference line."""

    sweeps: list[SweepResult]
    h_baseline: dict[int, float]
    baseline_form: str

    def mean(self, rule: int, scale: int) -> dict[str, float]:
        for result in self.sweeps:
            if result.parameter == rule and result.scale == scale:
                return dict(result.aggregate["mean"])
        raise KeyError((rule, scale))


def multiscale_profiles(
    rules: Sequence[int] = PROFILE_RULES,
    scales: Sequence[int] = (1, 2, 4, 8),
    n: int = 256,
    instances: int = 50,
    transient: int = 4096,
    window: int = 4096,
    master_seed: int = 0,
    threads: int = 1,
    baseline_form: str = "exact",
) -> ProfileResult:
    """Measure trajectories across scales for a few rules, with the
    uncorrelated-H reference value per scale."""
    sweeps = _rule_survey(
        "eca_profiles", rules, n, instances, transient, window, scales, master_seed, threads
    )
    baseline = {int(b): uncorrelated_homeostasis(int(b), form=baseline_form) for b in scales}
    return ProfileResult(sweeps, baseline, baseline_form)


def _fmt(value: float) -> str:
    return format(float(value), ".9g")


def _fmt_parameter(parameter: float | int) -> str:
    if isinstance(parameter, (int, np.integer)):
        return str(int(parameter))
    return _fmt(parameter)


INSTANCE_HEADER = "experiment,rule_or_k,scale,instance,seed,E,S,C,H"
AGGREGATE_HEADER = "experiment,rule_or_k,scale,stat,E,S,C,H"


def instance_rows(results: Sequence[SweepResult]) -> list[dict]:
    rows = []
    for result in results:
        for index, (seed, ms) in enumerate(zip(result.seeds, result.instances)):
            rows.append(
                {
                    "experiment": result.experiment,
                    "rule_or_k": result.parameter,
                    "scale": result.scale,
                    "instance": index,
                    "seed": seed,
                    "E": ms.emergence,
                    "S": ms.self_organization,
                    "C": ms.complexity,
                    "H": ms.homeostasis,
                }
            )
    return rows


def aggregate_rows(results: Sequence[SweepResult]) -> list[dict]:
    rows = []
    for result in results:
        for stat in STAT_NAMES:
            entry = result.aggregate[stat]
            rows.append(
                {
                    "experiment": result.experiment,
                    "rule_or_k": result.parameter,
                    "scale": result.scale,
                    "stat": stat,
                    "E": entry["E"],
                    "S": entry["S"],
                    "C": entry["C"],
                    "H": entry["H"],
                }
            )
    return rows


def _instance_csv(rows: Iterable[dict]) -> str:
    lines = [INSTANCE_HEADER]
    for row in rows:
        lines.append(
            ",".join(
                [
                    row["experiment"],
                    _fmt_parameter(row["rule_or_k"]),
                    str(row["scale"]),
                    str(row["instance"]),
                    str(row["seed"]),
                    _fmt(row["E"]),
                    _fmt(row["S"]),
                    _fmt(row["C"]),
                    _fmt(row["H"]),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def _aggregate_csv(rows: Iterable[dict]) -> str:
    lines = [AGGREGATE_HEADER]
    for row in rows:
        lines.append(
            ",".join(
                [
                    row["experiment"],
                    _fmt_parameter(row["rule_or_k"]),
                    str(row["scale"]),
                    row["stat"],
                    _fmt(row["E"]),
                    _fmt(row["S"]),
                    _fmt(row["C"]),
                    _fmt(row["H"]),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def write_sweep_files(
    results: Sequence[SweepResult],
    outdir: str | Path,
    experiment: str,
    *,
    h_baseline: dict[int, float] | None = None,
    plot_script: str | None = None,
) -> list[Path]:
    """Write per-instance and aggregate CSVs plus their JSON mirrors.

    Optionally writes the per-scale uncorrelated-H reference line and a plot
    script.  Returns the written paths.
    """
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    def emit(name: str, text: str) -> None:
        path = outdir / name
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
        written.append(path)

    inst = instance_rows(results)
    agg = aggregate_rows(results)
    emit(f"{experiment}_instances.csv", _instance_csv(inst))
    emit(f"{experiment}_aggregate.csv", _aggregate_csv(agg))
    emit(f"{experiment}_instances.json", json.dumps(inst, indent=2) + "\n")
    emit(f"{experiment}_aggregate.json", json.dumps(agg, indent=2) + "\n")
    if h_baseline is not None:
        lines = ["scale,h_baseline"]
        lines += [f"{scale},{_fmt(value)}" for scale, value in sorted(h_baseline.items())]
        emit(f"{experiment}_h_baseline.csv", "\n".join(lines) + "\n")
    if plot_script is not None:
        emit(f"plot_{experiment}.py", plot_script)
    return written
