"""Seeded Monte-Carlo experiments on G(n, p).

The interesting regime is the threshold p = c * sqrt(ln n / n) for the
all-pairs-two-common-neighbors criterion (equivalently rvd = n). Edge
indicators come from thresholding per-edge uniforms drawn from a
counter-based stream keyed on (seed, trial), so runs are reproducible
under any parallel schedule and the same trial compared at p1 <= p2 is
monotone (success at p1 implies success at p2).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .graphs import Graph, complement, is_connected

CRITERION_RVD_N = "rvd-n"
CRITERION_BOTH = "both"

MAX_ORDER = 1000


@dataclass(frozen=True)
class SweepConfig:
    n: int
    c_values: tuple[float, ...]
    trials: int
    seed: int
    criterion: str = CRITERION_RVD_N

    def __post_init__(self):
        if self.n < 4:
            raise ValueError("sweep needs n >= 4")
        if self.n > MAX_ORDER:
            raise ValueError(f"sweep capped at n = {MAX_ORDER}")
        if self.trials < 1:
            raise ValueError("need at least one trial")
        if not self.c_values:
            raise ValueError("need at least one c value")
        if any(c <= 0 for c in self.c_values):
            raise ValueError("c multipliers must be positive")
        if list(self.c_values) != sorted(self.c_values):
            raise ValueError("c values must be sorted ascending")
        if self.criterion not in (CRITERION_RVD_N, CRITERION_BOTH):
            raise ValueError(f"unknown criterion {self.criterion!r}")


@dataclass(frozen=True)
class ExperimentRecord:
    n: int
    p: float
    c: Optional[float]
    trial: int
    seed: int
    outcome: bool
    min_common_neighbors: Optional[int]
    elapsed: float


@dataclass(frozen=True)
class SweepPoint:
    c: float
    p: float
    trials: int
    successes: int
    records: tuple[ExperimentRecord, ...]

    @property
    def fraction(self) -> float:
        return self.successes / self.trials


def trial_stream(seed: int, trial: int) -> np.random.Generator:
    """Counter-based stream for one trial; (seed, trial) is the Philox key."""
    return np.random.Generator(np.random.Philox(key=[seed, trial]))


def edge_uniforms(n: int, stream: np.random.Generator) -> np.ndarray:
    """One uniform per unordered pair, in lexicographic edge order."""
    return stream.uniform(size=n * (n - 1) // 2)


def gnp_from_uniforms(n: int, uniforms: np.ndarray, p: float) -> Graph:
    """Threshold shared uniforms at p; the coupling device behind the sweep."""
    matrix = np.zeros((n, n), dtype=bool)
    iu = np.triu_indices(n, k=1)
    matrix[iu] = uniforms < p
    matrix |= matrix.T
    masks = [
        int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")
        for row in matrix
    ]
    return Graph.from_adjacency_masks(n, masks)


def sample_gnp(n: int, p: float, stream: np.random.Generator) -> Graph:
    """Erdos-Renyi sample: each of the C(n,2) edges present with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    return gnp_from_uniforms(n, edge_uniforms(n, stream), p)


def _criterion_scan(g: Graph) -> tuple[bool, Optional[int]]:
    """(criterion holds, min common-neighbor count over scanned pairs).

    Scans pairs with early exit on the first pair below two common
    neighbors; on success the reported minimum is the true minimum.
    """
    if g.n < 2 or not is_connected(g):
        return False, None
    seen_min: Optional[int] = None
    for x in range(g.n):
        ax = g.adj_mask(x)
        for y in range(x + 1, g.n):
            c = (ax & g.adj_mask(y)).bit_count()
            if seen_min is None or c < seen_min:
                seen_min = c
            if c < 2:
                return False, seen_min
    return True, seen_min


def criterion_rvd_n(g: Graph) -> bool:
    """Connected and every pair has at least two common neighbors."""
    return _criterion_scan(g)[0]


def criterion_both(g: Graph) -> bool:
    """criterion_rvd_n on the graph and on its complement."""
    return criterion_rvd_n(g) and criterion_rvd_n(complement(g))


def threshold_probability(n: int, c: float) -> float:
    """p = min(1, c * sqrt(ln n / n))."""
    return min(1.0, c * math.sqrt(math.log(n) / n))


def _run_point(n: int, p: float, c: Optional[float], trials: int, seed: int,
               criterion: str) -> SweepPoint:
    records = []
    successes = 0
    for trial in range(trials):
        t0 = time.perf_counter()
        g = gnp_from_uniforms(n, edge_uniforms(n, trial_stream(seed, trial)), p)
        ok, seen_min = _criterion_scan(g)
        if ok and criterion == CRITERION_BOTH:
            ok_c, seen_min_c = _criterion_scan(complement(g))
            ok = ok_c
            if seen_min_c is not None:
                seen_min = min(seen_min, seen_min_c)
        successes += ok
        records.append(ExperimentRecord(n, p, c, trial, seed, ok, seen_min,
                                        time.perf_counter() - t0))
    return SweepPoint(c if c is not None else float("nan"), p, trials,
                      successes, tuple(records))


def threshold_sweep(config: SweepConfig) -> list[SweepPoint]:
    """Success fraction of the criterion at p = c * sqrt(ln n / n) per c.

    Trials share their uniforms across c values (same (seed, trial) key),
    so fractions are monotone in c by coupling, not merely in expectation.
    """
    return [
        _run_point(config.n, threshold_probability(config.n, c), c,
                   config.trials, config.seed, config.criterion)
        for c in config.c_values
    ]


def almost_sure_check(n: int, trials: int, seed: int) -> float:
    """Fraction of G(n, 1/2) samples whose graph and complement both pass."""
    if trials < 1:
        raise ValueError("need at least one trial")
    point = _run_point(n, 0.5, None, trials, seed, CRITERION_BOTH)
    return point.fraction
