"""Command-line interface.

Exit codes: 0 ok, 1 parse error, 2 validation error, 3 resource or size
limit, 4 verification residual above tolerance.
"""

from __future__ import annotations

import argparse
import logging
import sys

import numpy as np

from . import bench, io
from .clifford import conjugation_oracle, expand_tableau
from .errors import ParseError, ResourceError, ValidationError
from .limits import NAIVE_MAX_N, require
from .pauli import apply_pauli
from .qf_expand import expand, expand_naive
from .reduction import check_to_qf, stabilizer_eigencheck

log = logging.getLogger("stabmat")

VERIFY_TOL = 1e-12
EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_RESOURCE, EXIT_RESIDUAL = range(5)


def _read_text(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(arr, path, fmt):
    data = io.write_dense(arr, "text" if fmt == "text" else "binary")
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def cmd_qf2vec(args):
    desc = io.parse_qf(_read_text(args.input))
    psi = expand_naive(desc) if args.naive else expand(desc)
    _emit(psi, args.output, args.format)


def cmd_check2vec(args):
    cm = io.parse_check(_read_text(args.input))
    _emit(expand(check_to_qf(cm)), args.output, args.format)


def cmd_tableau2mat(args):
    tab = io.parse_tableau(_read_text(args.input))
    _emit(expand_tableau(tab), args.output, args.format)


def _read_state(path):
    with open(path, "rb") as fh:
        psi = io.read_dense(fh.read())
    if psi.ndim != 1:
        raise ValidationError("--state must hold a state vector, not a matrix")
    return psi


def cmd_pauli_apply(args):
    psi = _read_state(args.state)
    _emit(apply_pauli(psi, io.parse_pauli(args.pauli)), args.output, args.format)


def cmd_verify(args):
    obj = io.load_any(_read_text(args.input), args.kind)
    if args.state and args.kind != "check":
        raise ValidationError("--state is only meaningful with --kind check")
    if args.kind == "qf":
        require(obj.n, NAIVE_MAX_N, "qf verification")
        residual = float(np.max(np.abs(expand(obj) - expand_naive(obj))))
    elif args.kind == "check":
        # with --state, test a previously materialized vector against the file's generators
        psi = _read_state(args.state) if args.state else expand(check_to_qf(obj))
        residual = max(stabilizer_eigencheck(obj, psi), abs(float(np.linalg.norm(psi)) - 1.0))
    else:
        residual = conjugation_oracle(expand_tableau(obj), obj)
    print(f"max_residual {residual!r}")
    if residual > VERIFY_TOL:
        log.error("residual %.3g exceeds tolerance %.0e", residual, VERIFY_TOL)
        return EXIT_RESIDUAL
    return EXIT_OK


def cmd_bench(args):
    rows = bench.run(args.task, args.nmin, args.nmax, args.reps, args.seed,
                     naive=args.naive, backend=args.backend, rounds=args.rounds)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            bench.write_csv(rows, fh)
    else:
        bench.write_csv(rows, sys.stdout)


def build_parser():
    parser = argparse.ArgumentParser(prog="stabmat",
                                     description="Dense stabilizer states and Clifford matrices.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p, with_input=True):
        if with_input:
            p.add_argument("--input", required=True)
        p.add_argument("--output", default=None, help="output path (default: stdout)")
        p.add_argument("--format", choices=("text", "bin", "binary"), default="bin")

    p = sub.add_parser("qf2vec", help="quadratic form -> state vector")
    add_io(p)
    p.add_argument("--naive", action="store_true", help="use the per-point reference")
    p.set_defaults(func=cmd_qf2vec)

    p = sub.add_parser("check2vec", help="check matrix -> state vector")
    add_io(p)
    p.set_defaults(func=cmd_check2vec)

    p = sub.add_parser("tableau2mat", help="Clifford tableau -> dense matrix")
    add_io(p)
    p.set_defaults(func=cmd_tableau2mat)

    p = sub.add_parser("pauli-apply", help="apply a Pauli string to a dense state")
    p.add_argument("--state", required=True)
    p.add_argument("--pauli", required=True, help="e.g. +X, -iZY")
    add_io(p, with_input=False)
    p.set_defaults(func=cmd_pauli_apply)

    p = sub.add_parser("verify", help="expand and run the matching oracle")
    p.add_argument("--input", required=True)
    p.add_argument("--kind", choices=("qf", "check", "tableau"), required=True)
    p.add_argument("--state", default=None,
                   help="dense state to test against a check file (default: expand the file)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="scaling benchmark, CSV output")
    p.add_argument("--task", choices=bench.TASKS, required=True)
    p.add_argument("--nmin", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rounds", type=int, default=1, help="repeat the sweep, keep the fastest per n")
    p.add_argument("--csv", default=None, help="CSV path (default: stdout)")
    p.add_argument("--naive", action="store_true", help="time the reference instead")
    p.add_argument("--backend", choices=("numba", "numpy"), default=None)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("stabmat: %(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.DEBUG if args.verbose else logging.WARNING)
    log.propagate = False
    try:
        return args.func(args) or EXIT_OK
    except ParseError as exc:
        log.error("parse error: %s", exc)
        return EXIT_PARSE
    except ValidationError as exc:
        log.error("invalid input: %s", exc)
        return EXIT_INVALID
    except (ResourceError, MemoryError, OSError) as exc:
        log.error("resource error: %s", exc)
        return EXIT_RESOURCE
    except ValueError as exc:
        log.error("%s", exc)
        return EXIT_INVALID
    finally:
        log.removeHandler(handler)


if __name__ == "__main__":
    sys.exit(main())
