"""Hot numeric kernels with a compiled core and a pure-Python fallback.

The compiled extension (``exactbench.kernels._core``, built from Cython) is
preferred when importable; otherwise the numpy reference implementations in
``_py`` are used. Set ``EXACT_BACKEND=python`` or ``EXACT_BACKEND=compiled``
to force a choice (forcing ``compiled`` raises if the extension is missing).

Both backends implement identical semantics; ``benchmarks/bench_kernels.py``
measures the difference.
"""

from __future__ import annotations

import os

from . import _py

BORDER_REFLECT = _py.BORDER_REFLECT
BORDER_ZERO = _py.BORDER_ZERO

_requested = os.environ.get("EXACT_BACKEND", "auto").lower()
if _requested not in ("auto", "compiled", "python"):
    raise ValueError(f"EXACT_BACKEND must be auto|compiled|python, got {_requested!r}")

_impl = _py
if _requested in ("auto", "compiled"):
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        if _requested == "compiled":
            raise ImportError(
                "EXACT_BACKEND=compiled but the exactbench.kernels._core "
                "extension is not built"
            ) from None

separable_correlate = _impl.separable_correlate
label_components = _impl.label_components
network_simplex = _impl.network_simplex


def backend_name() -> str:
    """Name of the active kernel backend: 'compiled' or 'python'."""
    return _impl.BACKEND_NAME


def get_backend(name: str):
    """Return a specific backend module ('compiled' or 'python'), for tests
    and benchmarks that compare the two."""
    if name == "python":
        return _py
    if name == "compiled":
        from . import _core
        return _core
    raise ValueError(f"unknown backend {name!r}")
