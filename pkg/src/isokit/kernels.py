"""Backend selection for the enumeration kernels.

The compiled ``_ckernels`` module is used when it was built and
``ISOKIT_PURE`` is unset; otherwise the pure-Python ``_pykernels`` module.
Both expose the same functions.
"""

import os

from isokit import _pykernels

try:
    if os.environ.get("ISOKIT_PURE"):
        raise ImportError("pure-Python kernels requested")
    from isokit import _ckernels as backend
    BACKEND = "cython"
except ImportError:
    backend = _pykernels
    BACKEND = "python"


def available_backends():
    """Name -> module for every importable backend."""
    out = {"python": _pykernels}
    try:
        from isokit import _ckernels
    except ImportError:
        return out
    out["cython"] = _ckernels
    return out


def hom_violation(mul_src, n_src, mul_dst, n_dst, phi):
    return backend.hom_violation(mul_src, n_src, mul_dst, n_dst, phi)


def automorphisms(mul, n, unit):
    return backend.automorphisms(mul, n, unit)


def limit_tuples(sizes, edges):
    return backend.limit_tuples(sizes, edges)


def natural_families(cands, edges):
    return backend.natural_families(cands, edges)
