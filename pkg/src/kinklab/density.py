"""Monte Carlo kink-density measurement under the uniform Bernoulli measure.

Wide cyclic configurations emulate the shift-invariant measure.  Trials draw
their streams from a counter-based Philox generator keyed on (seed, trial), so
results are independent of execution order and the degree of parallelism.
"""

from __future__ import annotations

import csv
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .dynamics import CyclicConfig
from .errors import DegenerateWindow, WidthTooSmall

GENERATOR_NAME = "numpy-philox-4x64"


def thread_budget() -> int:
    value = os.environ.get("KINKLAB_THREADS", "")
    if value.isdigit() and int(value) > 0:
        return int(value)
    return os.cpu_count() or 1


def _trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=(int(seed) << 64) + trial))


def sample_uniform(width: int, seed: int) -> CyclicConfig:
    """Cyclic configuration with i.i.d. Bernoulli(1/2) cells, deterministic per
    (width, seed)."""
    if width < 3:
        raise WidthTooSmall(f"width {width} < 3")
    bits = _trial_rng(seed, 0).integers(0, 2, size=width, dtype=np.uint8)
    return CyclicConfig("".join("1" if b else "0" for b in bits))


def _step_cyclic_array(a: np.ndarray) -> np.ndarray:
    return (1 - a) * (np.roll(a, 1) ^ np.roll(a, -1))


def _count_kinks_array(a: np.ndarray) -> int:
    width = a.size
    ones = np.flatnonzero(a)
    if ones.size == 0:
        return 0
    gaps = np.diff(ones, append=ones[0] + width) - 1
    return int(np.count_nonzero((gaps % 2 == 0) & (gaps <= width - 2)))


@dataclass(frozen=True)
class DensitySeries:
    width: int
    steps: int
    trials: int
    seed: int
    values: tuple[float, ...]  # mean kinks per cell, one entry per step 0..steps
    stderr: tuple[float, ...]
    generator: str = GENERATOR_NAME


@dataclass(frozen=True)
class PowerLawFit:
    exponent: float
    amplitude: float
    window: tuple[int, int]
    residual: float

    @property
    def diffusion_coefficient(self) -> float:
        # amplitude = (8 pi D)^(-1/2)
        return 1.0 / (8.0 * math.pi * self.amplitude**2)


def _run_trials(trials: int, per_trial) -> np.ndarray:
    workers = min(thread_budget(), trials) or 1
    if workers <= 1:
        rows = [per_trial(t) for t in range(trials)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(per_trial, range(trials)))
    return np.array(rows, dtype=np.float64)


def density_trajectory(width: int, steps: int, trials: int, seed: int) -> DensitySeries:
    """Per-step mean kink density over independent Bernoulli trials.

    The width floor 2*steps+3 keeps the cyclic wrap outside any single cell's
    light cone over the measured horizon.  Kink counts are asserted to be
    non-increasing within every trial: creation would be an engine bug.
    """
    if width < max(3, 2 * steps + 3):
        raise WidthTooSmall(
            f"width {width} < {max(3, 2 * steps + 3)} required for {steps} steps"
        )
    if trials < 1:
        raise ValueError("need at least one trial")

    def per_trial(t: int) -> list[int]:
        a = _trial_rng(seed, t).integers(0, 2, size=width, dtype=np.uint8)
        counts = [_count_kinks_array(a)]
        for _ in range(steps):
            a = _step_cyclic_array(a)
            counts.append(_count_kinks_array(a))
        for prev, cur in zip(counts, counts[1:]):
            if cur > prev:
                raise RuntimeError(
                    f"kink count increased ({prev} -> {cur}) in trial {t}: engine bug"
                )
        return counts

    counts = _run_trials(trials, per_trial) / width
    values = tuple(float(v) for v in counts.mean(axis=0))
    if trials > 1:
        err = counts.std(axis=0, ddof=1) / math.sqrt(trials)
    else:
        err = np.zeros(steps + 1)
    return DensitySeries(
        width=width,
        steps=steps,
        trials=trials,
        seed=seed,
        values=values,
        stderr=tuple(float(e) for e in err),
    )


def word_frequency_trajectory(
    w: str, width: int, steps: int, trials: int, seed: int
) -> DensitySeries:
    """Per-step empirical frequency of cyclic occurrences of w per cell."""
    if width < 3:
        raise WidthTooSmall(f"width {width} < 3")
    if len(w) > width - 2 * steps:
        raise WidthTooSmall(
            f"|w| = {len(w)} exceeds width - 2*steps = {width - 2 * steps}"
        )
    pattern = np.array([int(ch) for ch in w], dtype=np.uint8)

    def occurrences(a: np.ndarray) -> int:
        ext = np.concatenate([a, a[: len(w) - 1]])
        windows = np.lib.stride_tricks.sliding_window_view(ext, len(w))
        return int(np.count_nonzero(np.all(windows == pattern, axis=1)))

    def per_trial(t: int) -> list[int]:
        a = _trial_rng(seed, t).integers(0, 2, size=width, dtype=np.uint8)
        counts = [occurrences(a)]
        for _ in range(steps):
            a = _step_cyclic_array(a)
            counts.append(occurrences(a))
        return counts

    counts = _run_trials(trials, per_trial) / width
    values = tuple(float(v) for v in counts.mean(axis=0))
    if trials > 1:
        err = counts.std(axis=0, ddof=1) / math.sqrt(trials)
    else:
        err = np.zeros(steps + 1)
    return DensitySeries(
        width=width,
        steps=steps,
        trials=trials,
        seed=seed,
        values=values,
        stderr=tuple(float(e) for e in err),
    )


def default_window(steps: int) -> tuple[int, int]:
    # discard the transient below 32 and the noisy final tenth
    hi = max(steps - steps // 10, 35)
    return (32, min(hi, steps))


def fit_power_law(series: DensitySeries, window: tuple[int, int]) -> PowerLawFit:
    """Least-squares line in (log n, log d_n) over the window."""
    lo, hi = window
    pairs = [
        (n, v)
        for n, v in enumerate(series.values)
        if lo <= n <= hi and n >= 1 and v > 0
    ]
    if len(pairs) < 3:
        raise DegenerateWindow(
            f"window {window} leaves {len(pairs)} usable points (< 3)"
        )
    log_n = np.log([n for n, _ in pairs])
    log_v = np.log([v for _, v in pairs])
    slope, intercept = np.polyfit(log_n, log_v, 1)
    resid = log_v - (slope * log_n + intercept)
    return PowerLawFit(
        exponent=float(slope),
        amplitude=float(np.exp(intercept)),
        window=(lo, hi),
        residual=float(np.sqrt(np.mean(resid**2))),
    )


def write_density_csv(series: DensitySeries, path: str) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "mean_density", "stderr", "trials", "width", "seed"])
        for n, (v, e) in enumerate(zip(series.values, series.stderr)):
            writer.writerow(
                [n, repr(v), repr(e), series.trials, series.width, series.seed]
            )


def write_density_metadata(
    series: DensitySeries, path: str, fit: PowerLawFit | None = None
) -> None:
    payload: dict = {
        "rng": series.generator,
        "width": series.width,
        "steps": series.steps,
        "trials": series.trials,
        "seed": series.seed,
    }
    if fit is not None:
        payload["fit"] = {
            "exponent": fit.exponent,
            "amplitude": fit.amplitude,
            "window": list(fit.window),
            "residual_rms_loglog": fit.residual,
            "diffusion_coefficient": fit.diffusion_coefficient,
        }
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
