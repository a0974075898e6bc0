"""Kernel backend selection.

The hot kernels (stabilizer-chain construction, sifting, centralizer scans)
exist twice: a numba @njit build and a pure-numpy build.  The active backend
is chosen by the COLORGROUPS_BACKEND environment variable ("numba" or
"numpy"); unset, numba is used when importable and numpy otherwise.
"""

from __future__ import annotations

import os

from . import _kernels_numpy

_ENV_VAR = "COLORGROUPS_BACKEND"

try:
    from . import _kernels_numba
    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    _kernels_numba = None
    _HAVE_NUMBA = False


def available_backends():
    names = ["numpy"]
    if _HAVE_NUMBA:
        names.insert(0, "numba")
    return names


def resolve_backend(name=None):
    """Return (name, module) for the requested or configured backend."""
    if name is None:
        name = os.environ.get(_ENV_VAR, "").strip().lower() or None
    if name is None:
        name = "numba" if _HAVE_NUMBA else "numpy"
    if name == "numba":
        if not _HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not importable")
        return "numba", _kernels_numba
    if name == "numpy":
        return "numpy", _kernels_numpy
    raise ValueError(f"unknown backend {name!r} (expected 'numba' or 'numpy')")


def active_backend_name():
    return resolve_backend()[0]


def build_chain(gens0, n):
    return resolve_backend()[1].build_chain(gens0, n)


def sift(chain, perm):
    return resolve_backend()[1].sift(chain, perm)


def centralizer_mask(perms, gens):
    return resolve_backend()[1].centralizer_mask(perms, gens)
