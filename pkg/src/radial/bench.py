"""Timing harness: group-ring convolution versus the radial recurrence."""

from __future__ import annotations

import csv
import io
import statistics
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Sequence

from . import algebra as A
from .engine import RelationParams, expand_xk_Xn
from .words import word_count

ORACLE = "oracle-convolution"
ENGINE = "radial-recurrence"
STRATEGIES = (ORACLE, ENGINE)
CSV_HEADER = ("N", "n", "strategy", "mean_ns", "stddev_ns", "terms_in", "terms_out")
MIN_REPS = 3


@dataclass(frozen=True)
class BenchResult:
    workload: str
    N: int
    k: int
    n: int
    times_ns: tuple[int, ...]
    terms_in: int
    terms_out: int
    peak_terms: int
    steps: int = 0
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.times_ns) < MIN_REPS:
            raise ValueError(f"need at least {MIN_REPS} repetitions")
        if any(t <= 0 for t in self.times_ns):
            raise ValueError("timings must be strictly positive")

    @property
    def repetitions(self) -> int:
        return len(self.times_ns)

    @property
    def mean_ns(self) -> float:
        return statistics.fmean(self.times_ns)

    @property
    def stddev_ns(self) -> float:
        return statistics.stdev(self.times_ns)

    def to_json(self) -> dict:
        d = asdict(self)
        d["times_ns"] = list(self.times_ns)
        d["repetitions"] = self.repetitions
        return d


def _time(fn: Callable[[], object], reps: int) -> tuple[int, ...]:
    fn()  # warm-up, not recorded
    out = []
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        fn()
        out.append(max(time.perf_counter_ns() - t0, 1))
    return tuple(out)


def _oracle_run(N: int, k: int, n: int, limit: int | None) -> tuple[A.AlgebraElement, int]:
    p = A.build_X(N, n)
    peak = len(p)
    for _ in range(k):
        p = A.left_multiply_by_x(p, limit)
        peak = max(peak, len(p))
    return p, peak


def _support(coeffs: Sequence[int], N: int) -> int:
    return sum(word_count(N, j) for j, c in enumerate(coeffs) if c)


def bench_oracle_vs_engine(N: int, k: int, n: int, reps: int = MIN_REPS,
                           limit: int | None = None) -> tuple[BenchResult, BenchResult]:
    """Time ``x**k X_n`` both ways after checking the two results agree.

    Nothing is timed if the results differ; an ``AssertionError`` is raised
    instead.
    """
    if reps < MIN_REPS:
        raise ValueError(f"reps must be at least {MIN_REPS}, got {reps}")
    if k < 0 or n < 0:
        raise ValueError("k and n must be nonnegative")
    params = RelationParams.verified(N)

    product, peak = _oracle_run(N, k, n, limit)
    engine = expand_xk_Xn(params, k, n)
    profile = A.radial_profile(product)
    if profile != engine.nonzero():
        raise AssertionError(f"oracle and engine disagree at N={N}, k={k}, n={n}")

    terms_in = word_count(N, n)
    terms_out = len(product)
    oracle_times = _time(lambda: _oracle_run(N, k, n, limit), reps)
    engine_times = _time(lambda: expand_xk_Xn(params, k, n), reps)
    return (
        BenchResult(ORACLE, N, k, n, oracle_times, terms_in, terms_out, peak, steps=k),
        BenchResult(ENGINE, N, k, n, engine_times, terms_in, _support(engine.coeffs, N),
                    max(len(engine.coeffs), 1), steps=k),
    )


def emit_scaling_report(N_list: Sequence[int], n_list: Sequence[int], reps: int = MIN_REPS, k: int = 1,
                        limit: int | None = None) -> str:
    """CSV of ``x**k X_n`` timings over every ``(N, n)`` pair, both strategies."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for N in N_list:
        for n in n_list:
            for r in bench_oracle_vs_engine(N, k, n, reps, limit):
                writer.writerow([r.N, r.n, r.workload, f"{r.mean_ns:.1f}", f"{r.stddev_ns:.1f}",
                                 r.terms_in, r.terms_out])
    return buf.getvalue()
