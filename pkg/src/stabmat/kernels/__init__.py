"""Hot loops, in two interchangeable implementations.

``_numba`` compiles the word-level walks with ``@njit``; ``_numpy`` runs the
same recurrences vectorized block by block (cumulative XOR / cumulative sum
over each block of Gray steps). Both fill caller-provided output arrays and
must agree bit for bit.

The active backend is picked once at import from ``STABMAT_BACKEND``
(``numba`` or ``numpy``; default ``numba``, falling back to ``numpy`` when
numba cannot be imported).
"""

import importlib
import logging
import os

log = logging.getLogger(__name__)

BACKENDS = ("numba", "numpy")
_loaded = {}


def load(name):
    if name not in BACKENDS:
        raise ValueError(f"unknown backend {name!r}; choose from {BACKENDS}")
    if name not in _loaded:
        _loaded[name] = importlib.import_module(f"._{name}", __name__)
    return _loaded[name]


def get(name=None):
    """Kernel module for ``name``, or the active one when ``name`` is None."""
    return backend if name is None else load(name)


def _select():
    name = os.environ.get("STABMAT_BACKEND", "numba").strip().lower() or "numba"
    if name == "numba":
        try:
            return load("numba")
        except ImportError:
            log.warning("numba unavailable, using the numpy kernels")
            return load("numpy")
    return load(name)


backend = _select()
