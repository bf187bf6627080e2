"""Brute-force oracles that anchor the fast paths.

Everything here is written directly from the definitions: O(n^2)
convolution for multiplication, the double-loop transform formula, a
pure-Python re-derivation of the whole distillation, and an exhaustive
collision census for the universality bound.  None of it shares
arithmetic kernels with the production modules; these exist solely to
be obviously correct.
"""

from __future__ import annotations

import itertools

import numpy as np

from .bigint import MAX_LIMBS, BigUint, LIMB_BITS
from .errors import AllOnesBlock, TooLargeToEnumerate
from .goldilocks import P64, root_of_unity
from .pipeline import PaParams, SeedMaterial


def _combine(coeffs, shift_bits):
    """sum(coeffs[k] * 2^(shift_bits*k)) by divide and conquer."""
    n = len(coeffs)
    if n == 1:
        return int(coeffs[0])
    half = n // 2
    lo = _combine(coeffs[:half], shift_bits)
    hi = _combine(coeffs[half:], shift_bits)
    return lo + (hi << (shift_bits * half))


def mul_schoolbook(a: BigUint, b: BigUint) -> BigUint:
    """Exact product by direct O(n^2) convolution of 12-bit half-limbs."""
    av, bv = a.to_int(), b.to_int()
    if av == 0 or bv == 0:
        return BigUint.from_int(0, 0)

    def halves(x: BigUint):
        out = []
        for limb in x.limbs.tolist():
            out.append(limb & 0xFFF)
            out.append(limb >> 12)
        return np.array(out, dtype=np.int64)

    ha, hb = halves(a), halves(b)
    # coefficients < min(len) * (2^12)^2 <= 2*MAX_LIMBS * 2^24 = 2^40
    conv = np.convolve(ha, hb)
    return BigUint.from_int(_combine(conv.tolist(), 12))


def naive_ntt(v) -> np.ndarray:
    """Direct evaluation of X_k = sum_n x_n w^(nk) mod p."""
    x = [int(e) for e in v]
    N = len(x)
    w = root_of_unity(N)
    return np.array(
        [sum(x[n] * pow(w, n * k, P64) for n in range(N)) % P64
         for k in range(N)],
        dtype=np.uint64)


def naive_ntt_inverse(X) -> np.ndarray:
    """Direct evaluation of x_n = (1/N) sum_k X_k w^(-nk) mod p."""
    x = [int(e) for e in X]
    N = len(x)
    winv = pow(root_of_unity(N), P64 - 2, P64)
    ninv = pow(N, P64 - 2, P64)
    return np.array(
        [ninv * sum(x[k] * pow(winv, n * k, P64) for k in range(N)) % P64
         for n in range(N)],
        dtype=np.uint64)


def _bits_to_int(bits) -> int:
    value = 0
    for i, bit in enumerate(bits):
        if bit:
            value |= 1 << i
    return value


def _int_to_bits(value: int, width: int) -> list[int]:
    return [(value >> i) & 1 for i in range(width)]


def naive_distill(X, seed: SeedMaterial, params: PaParams) -> np.ndarray:
    """Pure-Python re-derivation of the whole distillation.

    Pads to n*gamma bits, splits into little-endian gamma-bit blocks,
    runs the shifted inner-product passes with plain % arithmetic, and
    applies the affine tail with long division.
    """
    gamma = params.gamma
    p = (1 << gamma) - 1
    bits = [int(b) for b in (X if not isinstance(X, (bytes, bytearray))
                             else np.unpackbits(np.frombuffer(X, np.uint8),
                                                bitorder="little")[:params.N])]
    assert len(bits) == params.N
    bits += [0] * (params.n * gamma - len(bits))
    blocks = [_bits_to_int(bits[j * gamma:(j + 1) * gamma])
              for j in range(params.n)]
    bad = [j + 1 for j, blk in enumerate(blocks) if blk == p]
    if bad:
        raise AllOnesBlock(bad)
    A = seed.A.values()

    def f(i: int) -> int:
        return sum(A[j + i - 2] * blocks[j - 1]
                   for j in range(1, params.n + 1)) % p

    out = []
    for i in range(1, params.m + 1):
        out.extend(_int_to_bits(f(i), gamma))
    if params.l_prime > 0:
        y = f(params.m + 1)
        t = (seed.mh.b * y + seed.mh.c) % (1 << gamma)
        z = t // (1 << (gamma - params.l_prime))
        out.extend(_int_to_bits(z, params.l_prime))
    assert len(out) == params.l
    return np.array(out, dtype=np.uint8)


def collision_census(gamma: int, n: int, m: int, X1, X2) -> int:
    """Number of seeds A in Z_p^(n+m-1) colliding on X1 != X2 under DM3H."""
    p = (1 << gamma) - 1
    if p ** (n + m - 1) > 10 ** 7:
        raise TooLargeToEnumerate(
            f"p^(n+m-1) = {p ** (n + m - 1)} exceeds 10^7")
    x1 = [int(v) for v in X1]
    x2 = [int(v) for v in X2]
    if x1 == x2:
        raise ValueError("census requires X1 != X2")

    def h(A, x):
        return tuple(sum(A[j + i] * x[j] for j in range(n)) % p
                     for i in range(m))

    count = 0
    for A in itertools.product(range(p), repeat=n + m - 1):
        if h(A, x1) == h(A, x2):
            count += 1
    return count
