"""Scaling benchmarks.

Each row times one worst-case instance per n: output buffers are allocated
and touched before the clock starts, zero-filling is inside the timed
region, and the reported time is the minimum over ``reps`` runs (and over
``rounds`` repetitions of the sweep).
"""

from __future__ import annotations

import csv
import time
from dataclasses import asdict, dataclass

import numpy as np

from . import instances
from .clifford import expand_tableau
from .model import PauliOp
from .pauli import apply_pauli, apply_pauli_naive
from .qf_expand import expand, expand_naive

TASKS = ("qf", "pauli", "tableau")
CSV_FIELDS = ("task", "n", "k", "reps", "total_s", "per_element_ns")


@dataclass
class BenchRow:
    task: str
    n: int
    k: int
    reps: int
    total_s: float
    per_element_ns: float


def _min_time(fn, reps):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _warm_up(task, naive, backend):
    # first call compiles the numba kernels
    rng = np.random.default_rng(0)
    if task == "qf":
        desc = instances.random_qf(3, 3, rng)
        (expand_naive if naive else expand)(desc, backend=backend)
    elif task == "pauli":
        (apply_pauli_naive if naive else apply_pauli)(np.ones(8, complex), PauliOp(3, 1, 5, 3),
                                                      backend=backend)
    else:
        expand_tableau(instances.random_tableau(2, rng), backend=backend)


def bench_one(task: str, n: int, reps: int = 3, seed: int = 0, *, naive: bool = False,
              backend: str | None = None) -> BenchRow:
    """Time one instance; the instance depends only on (task, n, seed)."""
    if task not in TASKS:
        raise ValueError(f"task must be one of {TASKS}")
    if naive and task == "tableau":
        raise ValueError("no naive variant for the tableau task")
    rng = np.random.default_rng([seed, n, TASKS.index(task)])
    _warm_up(task, naive, backend)
    if task == "qf":
        desc = instances.random_qf(n, n, rng)
        out = np.zeros(1 << n, dtype=np.complex128)
        fn = expand_naive if naive else expand
        total = _min_time(lambda: fn(desc, out, backend=backend, validate=False), reps)
        elements = 1 << n
    elif task == "pauli":
        psi = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
        p = PauliOp(n, int(rng.integers(4)), int(rng.integers(1 << n)), int(rng.integers(1 << n)))
        out = np.zeros_like(psi)
        if naive:
            total = _min_time(lambda: apply_pauli_naive(psi, p, backend=backend), reps)
        else:
            total = _min_time(lambda: apply_pauli(psi, p, out, backend=backend), reps)
        elements = 1 << n
    else:
        tab = instances.random_tableau(n, rng)
        out = np.zeros((1 << n, 1 << n), dtype=np.complex128, order="F")
        total = _min_time(lambda: expand_tableau(tab, out, backend=backend), reps)
        elements = 1 << (2 * n)
    return BenchRow(task, n, n, reps, total, total / elements * 1e9)


def run(task: str, nmin: int, nmax: int, reps: int = 3, seed: int = 0, *, naive: bool = False,
        backend: str | None = None, rounds: int = 1) -> list[BenchRow]:
    """Sweep n over ``nmin..nmax``.

    With ``rounds > 1`` the whole sweep is repeated and each n keeps its
    fastest round, so a burst of machine noise cannot land on one size only.
    """
    best: dict[int, BenchRow] = {}
    for _ in range(max(1, rounds)):
        for n in range(nmin, nmax + 1):
            row = bench_one(task, n, reps, seed, naive=naive, backend=backend)
            if n not in best or row.total_s < best[n].total_s:
                best[n] = row
    return [best[n] for n in range(nmin, nmax + 1)]


def write_csv(rows, fh) -> None:
    writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(asdict(row))
