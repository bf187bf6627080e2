"""Radix-16 number-theoretic transform over the Goldilocks field.

Supported lengths are 16^k for k = 1..4 (up to 65536).  Each radix-16
stage multiplies only by powers of w16 = 4096 = 2^12, realized as bit
shifts modulo p; inter-stage twiddle factors come from cached tables of
powers of the global root.  Input and output are both in natural order.

All functions accept a 1-D vector or a 2-D batch (one vector per row)
of canonical ``numpy.uint64`` values.
"""

from __future__ import annotations

import numpy as np

from . import goldilocks as gl
from .errors import LengthMismatch, UnsupportedLength

SUPPORTED_LENGTHS = (16, 256, 4096, 65536)

_U64 = np.uint64

# bit-reversed order for the 16-point butterfly
_REV16 = np.array([0, 8, 4, 12, 2, 10, 6, 14, 1, 9, 5, 13, 3, 11, 7, 15])

# rows per chunk when batching, to bound temporary memory
_CHUNK_ELEMS = 1 << 22

_twiddle_cache: dict[tuple[int, bool], np.ndarray] = {}


def _root_powers(length: int, inverse: bool) -> np.ndarray:
    w = gl.root_of_unity(length)
    if inverse:
        w = gl.fe_inv(w)
    powers = np.empty(length, dtype=_U64)
    acc = 1
    for j in range(length):
        powers[j] = acc
        acc = gl.fe_mul(acc, w)
    return powers


def _twiddle_table(length: int, inverse: bool) -> np.ndarray:
    """Inter-stage twiddles w^(r*k') for r < 16, k' < length/16."""
    key = (length, inverse)
    table = _twiddle_cache.get(key)
    if table is None:
        powers = _root_powers(length, inverse)
        r = np.arange(16)
        k = np.arange(length // 16)
        table = powers[np.outer(r, k) % length]
        _twiddle_cache[key] = table
    return table


def _dft16(y: np.ndarray, inverse: bool) -> np.ndarray:
    """16-point transform along axis 1 of a (batch, 16, cols) array.

    Radix-2 stages whose twiddles are all powers of w16 = 2^12, applied
    as shifts.
    """
    y = y[:, _REV16, :].copy()
    h = 1
    while h < 16:
        step = 2 * h
        exp_scale = 16 // step
        for j in range(h):
            k = (exp_scale * j) % 16
            if inverse:
                k = (-k) % 16
            a = y[:, j::step, :]
            b = y[:, j + h::step, :]
            t = b if k == 0 else gl.v_shl(b, 12 * k)
            hi = gl.v_add(a, t)
            lo = gl.v_sub(a, t)
            y[:, j::step, :] = hi
            y[:, j + h::step, :] = lo
        h = step
    return y


def _transform(a: np.ndarray, inverse: bool) -> np.ndarray:
    """Recursive radix-16 decimation-in-time on a (batch, length) array."""
    length = a.shape[1]
    if length == 1:
        return a
    cols = length // 16
    batch = a.shape[0]
    x = a.reshape(batch, cols, 16)
    x = np.ascontiguousarray(np.swapaxes(x, 1, 2))  # (batch, 16, cols)
    sub = _transform(x.reshape(batch * 16, cols), inverse)
    sub = sub.reshape(batch, 16, cols)
    if cols > 1:
        sub = gl.v_mul(sub, _twiddle_table(length, inverse)[None, :, :])
    out = _dft16(sub, inverse)
    return out.reshape(batch, length)


def _check_input(v: np.ndarray) -> tuple[np.ndarray, bool]:
    arr = np.asarray(v, dtype=_U64)
    if arr.ndim == 1:
        return arr[None, :], True
    if arr.ndim != 2:
        raise UnsupportedLength("expected a vector or a batch of vectors")
    return arr, False


def _run(v: np.ndarray, inverse: bool) -> np.ndarray:
    arr, squeeze = _check_input(v)
    length = arr.shape[1]
    if length not in SUPPORTED_LENGTHS:
        raise UnsupportedLength(f"length {length} not in {SUPPORTED_LENGTHS}")
    rows_per_chunk = max(1, _CHUNK_ELEMS // length)
    if arr.shape[0] <= rows_per_chunk:
        out = _transform(arr, inverse)
    else:
        out = np.empty_like(arr)
        for start in range(0, arr.shape[0], rows_per_chunk):
            stop = start + rows_per_chunk
            out[start:stop] = _transform(arr[start:stop], inverse)
    if inverse:
        out = gl.v_mul(out, _U64(gl.fe_inv(length)))
    return out[0] if squeeze else out


def ntt_forward(v: np.ndarray) -> np.ndarray:
    """X_k = sum_n x_n * w^(n*k) mod p, natural-order input and output."""
    return _run(v, inverse=False)


def ntt_inverse(X: np.ndarray) -> np.ndarray:
    """Exact inverse of ntt_forward, including the 1/N scale factor."""
    return _run(X, inverse=True)


def pointwise_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a_arr = np.asarray(a, dtype=_U64)
    b_arr = np.asarray(b, dtype=_U64)
    if a_arr.shape[-1] != b_arr.shape[-1]:
        raise LengthMismatch(
            f"lengths {a_arr.shape[-1]} and {b_arr.shape[-1]} differ")
    return gl.v_mul(a_arr, b_arr)


# -- test hooks -------------------------------------------------------------

def _testing_corrupt_twiddle(length: int, inverse: bool = False) -> None:
    """Flip one cached twiddle entry (negative control for selftest)."""
    table = _twiddle_table(length, inverse)
    table[1, 1] ^= 1


def _testing_clear_cache() -> None:
    _twiddle_cache.clear()
