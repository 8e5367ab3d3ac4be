"""Dense channel-first signal tensors and their binary file format.

Signals are plain ``numpy`` arrays in row-major (C-contiguous) order with the
channel axis first followed by 1 to 3 spatio-temporal axes.  This module owns
the shape conventions, a couple of reduction primitives used by the training
objective, and the self-describing ``LVAT`` tensor file used by the CLI.
"""

from __future__ import annotations

import struct

import numpy as np

from .errors import ShapeError

# dtype codes of the LVAT container
LVAT_MAGIC = b"LVAT"
LVAT_VERSION = 1
_DTYPE_CODES = {0: np.dtype("<f4"), 1: np.dtype("<f8")}
_CODE_FOR_KIND = {np.dtype("<f4"): 0, np.dtype("<f8"): 1}

SINGLE = np.float32
DOUBLE = np.float64

MIN_AXES = 2  # channel + one spatio-temporal axis
MAX_AXES = 4  # channel + three spatio-temporal axes


def check_signal(t: np.ndarray) -> np.ndarray:
    """Validate the channel-first signal convention and return ``t``."""
    t = np.asarray(t)
    if not MIN_AXES <= t.ndim <= MAX_AXES:
        raise ShapeError(
            f"signal must have {MIN_AXES}..{MAX_AXES} axes (channel first), got shape {t.shape}"
        )
    if any(s <= 0 for s in t.shape):
        raise ShapeError(f"all extents must be positive, got shape {t.shape}")
    return t


def reshape(t: np.ndarray, new_shape) -> np.ndarray:
    """Reinterpret ``t`` with ``new_shape``; same row-major data, zero-copy."""
    t = np.asarray(t)
    new_shape = tuple(int(s) for s in new_shape)
    if int(np.prod(new_shape, dtype=np.int64)) != t.size:
        raise ShapeError(f"cannot reshape size {t.size} to {new_shape}")
    return np.ascontiguousarray(t).reshape(new_shape)


def variance(t: np.ndarray) -> float:
    """Population variance over all elements (single global scalar)."""
    t = np.asarray(t)
    if t.size == 0:
        raise ShapeError("variance of an empty tensor")
    return float(np.var(t))


def write_tensor(path, t: np.ndarray) -> None:
    """Write ``t`` to an LVAT file (little-endian, f32 or f64)."""
    t = np.ascontiguousarray(t)
    dt = np.dtype("<f4") if t.dtype == np.float32 else np.dtype("<f8")
    t = t.astype(dt, copy=False)
    with open(path, "wb") as fh:
        fh.write(LVAT_MAGIC)
        fh.write(struct.pack("<BBB", LVAT_VERSION, _CODE_FOR_KIND[dt], t.ndim))
        fh.write(struct.pack(f"<{t.ndim}I", *t.shape))
        fh.write(t.tobytes())


def read_tensor(path) -> np.ndarray:
    """Read an LVAT file written by :func:`write_tensor`."""
    with open(path, "rb") as fh:
        raw = fh.read()
    if len(raw) < 7 or raw[:4] != LVAT_MAGIC:
        raise ShapeError(f"{path}: not an LVAT tensor file")
    version, dtype_code, ndim = struct.unpack("<BBB", raw[4:7])
    if version != LVAT_VERSION:
        raise ShapeError(f"{path}: unsupported LVAT version {version}")
    if dtype_code not in _DTYPE_CODES:
        raise ShapeError(f"{path}: unknown dtype code {dtype_code}")
    dt = _DTYPE_CODES[dtype_code]
    header_end = 7 + 4 * ndim
    shape = struct.unpack(f"<{ndim}I", raw[7:header_end])
    count = int(np.prod(shape, dtype=np.int64)) if ndim else 0
    data = np.frombuffer(raw, dtype=dt, count=count, offset=header_end)
    return data.reshape(shape).copy()
