"""Time the compiled and vectorized kernels side by side.

    python3 benchmarks/compare_backends.py --task qf --nmin 12 --nmax 20

Prints one CSV row per (backend, n) plus the numpy/numba ratio on stderr.
The numba row includes no compilation time: the harness warms up first.
"""

import argparse
import csv
import sys

from stabmat import bench, kernels


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--task", choices=bench.TASKS, default="qf")
    parser.add_argument("--nmin", type=int, default=12)
    parser.add_argument("--nmax", type=int, default=20)
    parser.add_argument("--reps", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(("backend",) + bench.CSV_FIELDS)
    for n in range(args.nmin, args.nmax + 1):
        times = {}
        for name in kernels.BACKENDS:
            row = bench.bench_one(args.task, n, args.reps, args.seed, backend=name)
            times[name] = row.total_s
            writer.writerow((name, row.task, row.n, row.k, row.reps, row.total_s, row.per_element_ns))
        print(f"n={n}: numpy/numba = {times['numpy'] / times['numba']:.1f}x", file=sys.stderr)


if __name__ == "__main__":
    main()
