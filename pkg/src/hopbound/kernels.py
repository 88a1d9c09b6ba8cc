"""Relaxation backend selection.

The compiled extension is preferred; if it was not built, the numpy kernels
are used.  Set ``HOPBOUND_BACKEND`` to ``cython``, ``numpy`` or ``python`` to
force a choice.
"""

import importlib
import os

INF = 2**62

_MODULES = {
    "cython": "hopbound._kernels",
    "numpy": "hopbound._kernels_np",
    "python": "hopbound._kernels_py",
}


def _load(name):
    try:
        return importlib.import_module(_MODULES[name])
    except KeyError:
        raise ValueError(f"unknown backend {name!r}; choose from {sorted(_MODULES)}") from None


def available_backends() -> list[str]:
    found = []
    for name in _MODULES:
        try:
            _load(name)
        except ImportError:
            continue
        found.append(name)
    return found


def _default():
    forced = os.environ.get("HOPBOUND_BACKEND")
    if forced:
        return forced, _load(forced)
    try:
        return "cython", _load("cython")
    except ImportError:
        return "numpy", _load("numpy")


BACKEND, _impl = _default()


def get_backend(name=None):
    """Return the kernel module for ``name`` (default: the import-time choice)."""
    if name is None or name == BACKEND:
        return _impl
    return _load(name)
