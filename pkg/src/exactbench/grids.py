"""2D grid primitives: validation, normalization, and dataset-wide scaling.

Grids are plain float64 numpy arrays of shape (H, W); masks are bool arrays
of the same shape. No wrapper classes - every function validates what it
needs.
"""

from __future__ import annotations

import numpy as np

from .errors import NormalizationError, ShapeError


def ensure_grid(grid: np.ndarray, name: str = "grid") -> np.ndarray:
    """Validate and return a finite 2D float64 grid (copying only if needed)."""
    arr = np.asarray(grid, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ShapeError(f"{name} must be a 2D array with positive dims, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ShapeError(f"{name} contains non-finite values")
    return arr


def frobenius_normalize(grid: np.ndarray) -> np.ndarray:
    """Scale a grid to unit Frobenius norm, preserving its direction."""
    arr = ensure_grid(grid)
    norm = float(np.linalg.norm(arr))
    if norm == 0.0:
        raise NormalizationError("cannot normalize an all-zero grid")
    return arr / norm


def global_scale(grids: np.ndarray | list[np.ndarray]) -> np.ndarray:
    """Divide every grid by the maximum absolute value over the whole dataset.

    The scaling constant is shared across all grids, so afterwards all
    values lie in [-1, 1] and at least one pixel is exactly +/-1.
    """
    stack = np.asarray(grids, dtype=np.float64)
    if stack.ndim == 2:
        stack = stack[None]
    if stack.ndim != 3:
        raise ShapeError(f"expected a list of 2D grids, got shape {stack.shape}")
    peak = float(np.abs(stack).max())
    if peak == 0.0:
        raise NormalizationError("cannot scale an all-zero dataset")
    return stack / peak
