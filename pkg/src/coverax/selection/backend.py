"""Backend selection: compiled kernel when available, numpy otherwise."""

from __future__ import annotations

from . import _numpy_backend

try:
    from .. import _fastsel as _compiled_backend
except ImportError:  # extension not built; the numpy path is always valid
    _compiled_backend = None


def available_backends() -> dict:
    backends = {"numpy": _numpy_backend}
    if _compiled_backend is not None:
        backends["compiled"] = _compiled_backend
    return backends


def get_backend(name: str = "auto"):
    """Resolve a backend module by name ("auto", "numpy", "compiled")."""
    if name == "auto":
        return _compiled_backend if _compiled_backend is not None else _numpy_backend
    try:
        return available_backends()[name]
    except KeyError:
        raise ValueError(f"unknown or unavailable backend: {name!r}") from None


def default_backend_name() -> str:
    return get_backend("auto").NAME
