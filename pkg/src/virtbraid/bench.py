"""Seeded random words and scaling measurements."""

from __future__ import annotations

import dataclasses
import math
import random
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from .solver import diagram
from .word import BraidWord, generators

TSV_HEADER = "length\tmean_ms\tmax_arcs\tmax_weight_digits"


def random_word(n: int, l: int, seed: int) -> BraidWord:
    """Word of length exactly ``l``, letters uniform over s_i, S_i and t_i."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if l < 0:
        raise ValueError("length must be non-negative")
    alphabet = generators(n)
    rng = random.Random(seed)
    return BraidWord(n, tuple(rng.choice(alphabet) for _ in range(l)))


@dataclasses.dataclass(frozen=True)
class Row:
    length: int
    mean_ms: float
    max_arcs: int
    max_weight_digits: int

    def tsv(self) -> str:
        return f"{self.length}\t{self.mean_ms:.1f}\t{self.max_arcs}\t{self.max_weight_digits}"


@dataclasses.dataclass(frozen=True)
class ScalingReport:
    n: int
    seed: int
    rows: tuple[Row, ...]
    slope: Optional[float]

    def tsv(self) -> str:
        lines = [TSV_HEADER] + [r.tsv() for r in self.rows]
        return "\n".join(lines)


def _sample(args) -> tuple[float, int, int]:
    n, l, seed = args
    w = random_word(n, l, seed)
    t0 = time.perf_counter()
    c = diagram(w)
    elapsed = time.perf_counter() - t0
    s = c.stats()
    return elapsed, s.arcs, s.weight_digits


def sample_seed(seed: int, l: int, k: int) -> int:
    # distinct, reproducible stream per (length, sample)
    return (seed * 1_000_003 + l) * 1_009 + k


def loglog_slope(lengths: Sequence[int], times: Sequence[float]) -> Optional[float]:
    if len(lengths) < 2:
        return None
    xs = [math.log(l) for l in lengths]
    ys = [math.log(max(t, 1e-9)) for t in times]
    return statistics.linear_regression(xs, ys).slope


def scaling_run(n: int, lengths: Sequence[int], samples: int, seed: int,
                jobs: int = 1) -> ScalingReport:
    lengths = list(lengths)
    if not lengths or samples < 1:
        raise ValueError("need at least one length and one sample")
    if any(b <= a for a, b in zip(lengths, lengths[1:])):
        raise ValueError("lengths must be strictly increasing")
    if any(l < 0 for l in lengths):
        raise ValueError("lengths must be non-negative")
    tasks = [(n, l, sample_seed(seed, l, k)) for l in lengths for k in range(samples)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_sample, tasks))
    else:
        results = [_sample(t) for t in tasks]
    rows = []
    for idx, l in enumerate(lengths):
        chunk = results[idx * samples:(idx + 1) * samples]
        rows.append(Row(l, 1000 * statistics.fmean(r[0] for r in chunk),
                        max(r[1] for r in chunk), max(r[2] for r in chunk)))
    positive = [(r.length, r.mean_ms) for r in rows if r.length > 0]
    slope = loglog_slope([p[0] for p in positive], [p[1] for p in positive])
    return ScalingReport(n, seed, tuple(rows), slope)
