"""Bit-stream helpers.

One convention everywhere: bit i of a stream is bit i of the integer it
encodes (little-endian, bit 0 least significant), and inside a byte the
least-significant bit comes first.  Bit arrays are numpy uint8 arrays of
0/1 values.
"""

from __future__ import annotations

import numpy as np


def bits_from_bytes(data: bytes | np.ndarray, nbits: int) -> np.ndarray:
    buf = np.frombuffer(data, dtype=np.uint8) if isinstance(data, (bytes, bytearray)) else np.asarray(data, dtype=np.uint8)
    if nbits > 8 * buf.size:
        raise ValueError(f"need {nbits} bits, have {8 * buf.size}")
    nbytes = (nbits + 7) // 8
    bits = np.unpackbits(buf[:nbytes], bitorder="little")
    return bits[:nbits]


def bytes_from_bits(bits: np.ndarray) -> bytes:
    return np.packbits(np.asarray(bits, dtype=np.uint8), bitorder="little").tobytes()


def int_from_bits(bits: np.ndarray) -> int:
    if len(bits) == 0:
        return 0
    return int.from_bytes(bytes_from_bits(bits), "little")


def bits_from_int(x: int, width: int) -> np.ndarray:
    if x >> width:
        raise ValueError(f"{x} does not fit in {width} bits")
    data = x.to_bytes((width + 7) // 8 or 1, "little")
    return bits_from_bytes(data, width)


def as_bit_array(x, nbits: int | None = None) -> np.ndarray:
    """Accept packed bytes or a 0/1 array and return a bit array."""
    if isinstance(x, (bytes, bytearray)):
        if nbits is None:
            nbits = 8 * len(x)
        return bits_from_bytes(x, nbits)
    arr = np.asarray(x, dtype=np.uint8)
    if nbits is not None and arr.size != nbits:
        raise ValueError(f"expected {nbits} bits, got {arr.size}")
    return arr
