"""Portable binary grid format and PNG export.

One grid per file: a fixed 24-byte header (magic ``EXCT``, version u16,
dtype code u16, height u32, width u32, 8 reserved bytes, all little-endian)
followed by the row-major float64 payload. The format is deliberately
trivial so plug-in explainers in any language can read and write it with a
few lines of code; round-trips are bit-exact.

PNG export is one-way (8-bit grayscale, linear min-max mapping) and exists
only for human inspection.
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np

from .errors import FormatError
from .grids import ensure_grid

MAGIC = b"EXCT"
VERSION = 1
DTYPE_FLOAT64 = 1
_HEADER = struct.Struct("<4sHHII8x")
HEADER_SIZE = _HEADER.size  # 24

# refuse absurd dimensions before allocating (2**28 px = 2 GiB of float64)
_MAX_PIXELS = 1 << 28


def write_grid_file(grid: np.ndarray, path: str | Path) -> None:
    """Write a grid to ``path`` in the EXCT format."""
    arr = ensure_grid(grid)
    height, width = arr.shape
    header = _HEADER.pack(MAGIC, VERSION, DTYPE_FLOAT64, height, width)
    payload = np.ascontiguousarray(arr, dtype="<f8").tobytes()
    Path(path).write_bytes(header + payload)


def read_grid_file(path: str | Path) -> np.ndarray:
    """Read an EXCT grid file; raises FormatError on any corruption."""
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise FormatError(f"cannot read grid file {path}: {exc}") from exc
    if len(raw) < HEADER_SIZE:
        raise FormatError(f"{path}: truncated header ({len(raw)} bytes)")
    magic, version, dtype, height, width = _HEADER.unpack_from(raw)
    if magic != MAGIC:
        raise FormatError(f"{path}: bad magic {magic!r}")
    if version != VERSION:
        raise FormatError(f"{path}: unsupported version {version}")
    if dtype != DTYPE_FLOAT64:
        raise FormatError(f"{path}: unsupported dtype code {dtype}")
    if height < 1 or width < 1 or height * width > _MAX_PIXELS:
        raise FormatError(f"{path}: invalid dimensions {height}x{width}")
    expected = HEADER_SIZE + height * width * 8
    if len(raw) != expected:
        raise FormatError(f"{path}: expected {expected} bytes, found {len(raw)}")
    values = np.frombuffer(raw, dtype="<f8", offset=HEADER_SIZE).reshape(height, width)
    if not np.all(np.isfinite(values)):
        raise FormatError(f"{path}: payload contains non-finite values")
    return values.astype(np.float64)


def write_grid_png(grid: np.ndarray, path: str | Path) -> None:
    """Export a grid as an 8-bit grayscale PNG (inspection only, never read back)."""
    from PIL import Image

    arr = ensure_grid(grid)
    low, high = float(arr.min()), float(arr.max())
    if high > low:
        scaled = (arr - low) / (high - low)
    else:
        scaled = np.zeros_like(arr)
    Image.fromarray((scaled * 255.0).round().astype(np.uint8), mode="L").save(path)
