"""Unsigned big integers in 24-bit limbs with NTT multiplication.

Limbs are little-endian (limb 0 least significant) and 24 bits wide so
that a convolution of up to 32768 limbs stays below the Goldilocks
modulus: each coefficient is < 32768 * (2^24 - 1)^2 < 2^63 < p, so the
transform-domain product recovers the exact integer product.  Maximum
operand size is 32768 limbs = 786432 bits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import bitio, ntt
from .errors import OperandTooLarge, Overflow

LIMB_BITS = 24
LIMB_MASK = (1 << LIMB_BITS) - 1
MAX_LIMBS = 32768
MAX_OPERAND_BITS = MAX_LIMBS * LIMB_BITS  # 786432

# below this many product limbs, fall back to direct multiplication
_NTT_CUTOFF_LIMBS = 64

_U64 = np.uint64


def _limb_count(bit_len: int) -> int:
    return (bit_len + LIMB_BITS - 1) // LIMB_BITS


def limbs_from_int(x: int, nlimbs: int) -> np.ndarray:
    """Pack a non-negative int into 24-bit limbs (3 bytes per limb)."""
    raw = x.to_bytes(3 * nlimbs if nlimbs else 1, "little")
    buf = np.frombuffer(raw[:3 * nlimbs], dtype=np.uint8).reshape(nlimbs, 3)
    return buf @ np.array([1, 1 << 8, 1 << 16], dtype=_U64)


def int_from_limbs(limbs: np.ndarray) -> int:
    """Inverse of limbs_from_int for limbs < 2^24."""
    limbs = np.asarray(limbs, dtype=_U64)
    buf = np.empty((limbs.size, 3), dtype=np.uint8)
    buf[:, 0] = limbs & _U64(0xFF)
    buf[:, 1] = (limbs >> _U64(8)) & _U64(0xFF)
    buf[:, 2] = limbs >> _U64(16)
    return int.from_bytes(buf.tobytes(), "little")


def int_from_wide_limbs(vals: np.ndarray) -> int:
    """sum(vals[k] * 2^(24k)) for arbitrary uint64 values.

    Splits each value into three byte-aligned streams so the whole sum
    reduces to three int.from_bytes calls.
    """
    vals = np.asarray(vals, dtype=_U64)
    lo = int_from_limbs(vals & _U64(LIMB_MASK))
    mid = int_from_limbs((vals >> _U64(24)) & _U64(LIMB_MASK))
    hi = int_from_limbs(vals >> _U64(48))
    return lo + (mid << 24) + (hi << 48)


@dataclass
class BigUint:
    """Unsigned integer as little-endian 24-bit limbs plus a declared bit length."""

    limbs: np.ndarray
    bit_len: int

    @classmethod
    def from_int(cls, x: int, bit_len: int | None = None) -> "BigUint":
        if bit_len is None:
            bit_len = x.bit_length()
        return cls(limbs_from_int(x, _limb_count(bit_len)), bit_len)

    def to_int(self) -> int:
        return int_from_limbs(self.limbs)

    def __eq__(self, other) -> bool:
        return isinstance(other, BigUint) and self.to_int() == other.to_int()


def from_bit_stream(bits: np.ndarray) -> BigUint:
    """Bit i of the stream becomes bit i of the integer."""
    bits = np.asarray(bits, dtype=np.uint8)
    return BigUint.from_int(bitio.int_from_bits(bits), len(bits))


def to_bit_stream(x: BigUint, width: int) -> np.ndarray:
    """Inverse of from_bit_stream, zero-padded to width."""
    value = x.to_int()
    if value >> width:
        raise Overflow(f"value needs {value.bit_length()} bits, width is {width}")
    return bitio.bits_from_int(value, width)


def _transform_length(product_limbs: int) -> int:
    for length in ntt.SUPPORTED_LENGTHS:
        if length >= product_limbs:
            return length
    raise OperandTooLarge(f"product needs {product_limbs} limbs")


def mul_ntt(a: BigUint, b: BigUint, force_ntt: bool = False) -> BigUint:
    """Exact product via forward NTT, pointwise multiply, inverse NTT, carry."""
    la = _limb_count(a.bit_len)
    lb = _limb_count(b.bit_len)
    if la > MAX_LIMBS or lb > MAX_LIMBS:
        raise OperandTooLarge(
            f"operands of {la} and {lb} limbs exceed {MAX_LIMBS}")
    out_bits = a.bit_len + b.bit_len
    if la == 0 or lb == 0:
        return BigUint.from_int(0, 0)
    if la + lb <= _NTT_CUTOFF_LIMBS and not force_ntt:
        return BigUint.from_int(a.to_int() * b.to_int())
    length = _transform_length(la + lb)
    padded = np.zeros((2, length), dtype=_U64)
    padded[0, :la] = a.limbs[:la]
    padded[1, :lb] = b.limbs[:lb]
    spectra = ntt.ntt_forward(padded)
    coeffs = ntt.ntt_inverse(ntt.pointwise_mul(spectra[0], spectra[1]))
    value = int_from_wide_limbs(coeffs)
    assert value.bit_length() <= out_bits
    return BigUint.from_int(value)
