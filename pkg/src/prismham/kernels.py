"""Kernel dispatch: compiled Cython kernels when built, pure Python otherwise.

The compiled kernels hold graphs in 64-bit words; larger graphs always take
the Python path. ``use_backend`` switches implementations at runtime (the
benchmark and the backend-agreement tests use it). Setting the environment
variable ``PRISMHAM_KERNELS=python`` selects the pure-Python path at import.
"""
from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

FOUND, REFUTED, UNKNOWN = _pykernels.FOUND, _pykernels.REFUTED, _pykernels.UNKNOWN

_active: ModuleType = _ckernels if _ckernels is not None else _pykernels
if os.environ.get("PRISMHAM_KERNELS") == "python":
    _active = _pykernels


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _ckernels is not None else [])


def backend() -> str:
    return "cython" if _active is _ckernels else "python"


def use_backend(name: str) -> None:
    global _active
    if name == "python":
        _active = _pykernels
    elif name == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built; run `pip install -e .`")
        _active = _ckernels
    else:
        raise ValueError(f"unknown backend {name!r}")


def _pick(n: int, limit: int = 64) -> ModuleType:
    return _active if n <= limit else _pykernels


def canonical_labeling(adj, n: int) -> tuple[int, ...]:
    return _pick(n).canonical_labeling(adj, n)


def refine_colors(adj, n: int) -> list[int]:
    return _pick(n).refine_colors(adj, n)


def count_components(adj, n: int, removed: int) -> int:
    return _pick(n).count_components(adj, n, removed)


def toughness_scan(adj, n: int):
    return _pick(n, 63).toughness_scan(adj, n)


def hamiltonian_dp(adj, n: int) -> bool:
    return _pick(n, 30).hamiltonian_dp(adj, n)


def hamiltonian_search(adj, n: int, budget: int):
    return _pick(n).hamiltonian_search(adj, n, budget)
