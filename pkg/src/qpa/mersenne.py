"""Arithmetic modulo a Mersenne prime p = 2^gamma - 1.

Reduction folds the high part back onto the low part, since
2^gamma = 1 (mod p).  The canonical representative range is
[0, 2^gamma - 2]; the all-ones pattern is mapped to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import bigint
from .bigint import BigUint
from .errors import InputTooWide, InvalidGamma, OperandTooLarge, ParamMismatch

# Small exponents for desk-scale and exhaustive testing.
SMALL_EXPONENTS = frozenset({
    3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127, 521, 607, 1279, 2203, 2281,
    3217, 4253, 4423, 9689, 9941, 11213, 19937, 21701, 23209, 44497, 86243,
})

# Production-scale exponents (the hardware-relevant range).
LARGE_EXPONENTS = frozenset({
    110503, 132049, 216091, 756839, 859433, 1257787, 1398269, 2976221,
    3021377, 6972593, 13466917, 20996011, 24036583, 25964951, 30402457,
    32582657, 37156667, 42643801, 43112609, 57885161, 74207281,
})

KNOWN_EXPONENTS = SMALL_EXPONENTS | LARGE_EXPONENTS

DEFAULT_GAMMA = 756839


@dataclass(frozen=True)
class MersenneParams:
    """Exponent gamma with 2^gamma - 1 prime."""

    gamma: int

    def __post_init__(self):
        if self.gamma not in KNOWN_EXPONENTS:
            raise InvalidGamma(f"{self.gamma} is not a known Mersenne-prime exponent")

    @cached_property
    def p(self) -> int:
        return (1 << self.gamma) - 1

    @property
    def limb_count(self) -> int:
        return (self.gamma + bigint.LIMB_BITS - 1) // bigint.LIMB_BITS


@dataclass
class MersenneResidue:
    """Canonical residue: 0 <= value <= 2^gamma - 2."""

    value: int
    params: MersenneParams

    def to_biguint(self) -> BigUint:
        return BigUint(bigint.limbs_from_int(self.value, self.params.limb_count),
                       self.params.gamma)


def fold(x: int, gamma: int) -> int:
    """x mod 2^gamma - 1 as an int, all-ones mapped to 0."""
    mask = (1 << gamma) - 1
    while x > mask:
        x = (x & mask) + (x >> gamma)
    return 0 if x == mask else x


def reduce(x: BigUint, params: MersenneParams) -> MersenneResidue:
    if x.bit_len > 2 * params.gamma + 64:
        raise InputTooWide(
            f"{x.bit_len} bits exceeds 2*gamma + 64 = {2 * params.gamma + 64}")
    return MersenneResidue(fold(x.to_int(), params.gamma), params)


def _check_params(a: MersenneResidue, b: MersenneResidue) -> None:
    if a.params.gamma != b.params.gamma:
        raise ParamMismatch(f"gamma {a.params.gamma} vs {b.params.gamma}")


def mod_add_acc(acc: MersenneResidue, addend: MersenneResidue) -> MersenneResidue:
    _check_params(acc, addend)
    s = acc.value + addend.value
    p = acc.params.p
    if s >= p:
        s -= p
    return MersenneResidue(s, acc.params)


def mod_mul(a: MersenneResidue, b: MersenneResidue) -> MersenneResidue:
    _check_params(a, b)
    if a.params.gamma > bigint.MAX_OPERAND_BITS:
        raise OperandTooLarge(
            f"gamma {a.params.gamma} exceeds the {bigint.MAX_OPERAND_BITS}-bit multiplier")
    product = bigint.mul_ntt(a.to_biguint(), b.to_biguint())
    return MersenneResidue(fold(product.to_int(), a.params.gamma), a.params)
