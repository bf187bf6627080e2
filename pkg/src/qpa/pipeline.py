"""End-to-end key distillation: planning, seed sizing, pass scheduling.

Given an N-bit reconciled key, an l-bit target, and a Mersenne exponent
gamma, the plan derives n = ceil(N/gamma) input blocks, m = floor(l/gamma)
full output blocks, and a tail of l' = l - m*gamma bits.  The output key
is the concatenation y_1 || ... || y_m || z, where the y_i are shifted
MMH passes and z is the modular-arithmetic tail hash of pass m+1.

Passes are independent; the worker count only controls scheduling and
can never change output bits.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import bitio, dm3h, mmh_mh
from .dm3h import BlockVector, Dm3hSeed, split_and_pad
from .errors import InvalidRatio, LengthMismatch
from .mersenne import MersenneParams, MersenneResidue
from .mmh_mh import MhSeed

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PaParams:
    """Derived plan for one distillation run; l = m*gamma + l_prime."""

    gamma: int
    N: int
    l: int
    n: int
    m: int
    l_prime: int

    @property
    def mersenne(self) -> MersenneParams:
        return MersenneParams(self.gamma)

    @property
    def ratio(self) -> float:
        return self.l / self.N

    @property
    def pass_count(self) -> int:
        return self.m + (1 if self.l_prime > 0 else 0)

    @property
    def seed_words(self) -> int:
        """Length of the coefficient sequence A."""
        return self.n + self.m if self.l_prime > 0 else self.n + self.m - 1


@dataclass
class SeedMaterial:
    """DM3H coefficients plus the MH pair (present iff l' > 0)."""

    A: Dm3hSeed
    mh: MhSeed | None = None


def plan(N: int, l: int, gamma: int) -> PaParams:
    """Derive (n, m, l') for an N-bit input and l-bit output."""
    params = MersenneParams(gamma)  # raises InvalidGamma
    if l <= 0 or l > N:
        raise InvalidRatio(f"need 0 < l <= N, got l = {l}, N = {N}")
    n = -(-N // gamma)
    m = l // gamma
    l_prime = l - m * gamma
    return PaParams(gamma=params.gamma, N=N, l=l, n=n, m=m, l_prime=l_prime)


def required_seed_bits(params: PaParams) -> int:
    """A-words plus, when the tail pass runs, the gamma-bit b and c."""
    bits = params.seed_words * params.gamma
    if params.l_prime > 0:
        bits += 2 * params.gamma
    return bits


def seed_from_bits(bits, params: PaParams) -> SeedMaterial:
    """Consume a seed stream: A words, then b, then c (gamma-bit LE words).

    The all-ones A-word reduces to 0; b is forced odd by setting its
    least-significant bit (logged when coerced).
    """
    gamma = params.gamma
    arr = bitio.as_bit_array(bits)
    if len(arr) < required_seed_bits(params):
        raise LengthMismatch(
            f"seed stream has {len(arr)} bits, need {required_seed_bits(params)}")
    words = [bitio.int_from_bits(arr[k * gamma:(k + 1) * gamma])
             for k in range(params.seed_words)]
    A = Dm3hSeed.from_words(words, params.mersenne)
    mh = None
    if params.l_prime > 0:
        off = params.seed_words * gamma
        b = bitio.int_from_bits(arr[off:off + gamma])
        c = bitio.int_from_bits(arr[off + gamma:off + 2 * gamma])
        if b % 2 == 0:
            logger.info("forcing seed word b odd by setting its low bit")
            b |= 1
        mh = MhSeed(b=b, c=c)
    return SeedMaterial(A=A, mh=mh)


@dataclass
class DistillResult:
    key_bits: np.ndarray
    y_blocks: list[MersenneResidue]   # passes 1..m
    y_tail: MersenneResidue | None    # pass m+1, None when l' = 0
    z_bits: np.ndarray | None


def _resolve_workers(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get("QPA_WORKERS", "1"))
    return max(1, workers)


def distill_blocks(blocks: BlockVector, seed: SeedMaterial, params: PaParams,
                   workers: int | None = None) -> DistillResult:
    """Run the m (+1) passes on an already-split block vector."""
    if blocks.n != params.n:
        raise LengthMismatch(f"{blocks.n} blocks, plan expects {params.n}")
    if params.l_prime > 0 and seed.mh is None:
        raise LengthMismatch("plan has a tail stage but no MH seed was supplied")
    nworkers = _resolve_workers(workers)
    indices = list(range(1, params.pass_count + 1))
    # warm the shared spectra caches so worker threads only read them
    length = dm3h._transform_length(params.mersenne)
    blocks._cache.get(blocks.limbs, length)
    seed.A._cache.get(seed.A.limbs, length)
    if nworkers > 1 and len(indices) > 1:
        with ThreadPoolExecutor(max_workers=nworkers) as pool:
            outputs = list(pool.map(
                lambda i: dm3h.mmh_pass(blocks, seed.A, i), indices))
    else:
        outputs = [dm3h.mmh_pass(blocks, seed.A, i) for i in indices]

    y_blocks = outputs[:params.m]
    y_tail = None
    z_bits = None
    pieces = [bitio.bits_from_int(y.value, params.gamma) for y in y_blocks]
    if params.l_prime > 0:
        y_tail = outputs[-1]
        z_bits = mmh_mh.mh_hash(y_tail, seed.mh, params.l_prime)
        pieces.append(z_bits)
    key = np.concatenate(pieces) if pieces else np.zeros(0, dtype=np.uint8)
    assert len(key) == params.l
    return DistillResult(key_bits=key, y_blocks=y_blocks, y_tail=y_tail,
                         z_bits=z_bits)


def distill(X, seed: SeedMaterial, params: PaParams,
            workers: int | None = None,
            all_ones_policy: str = "error") -> np.ndarray:
    """K = y_1 || ... || y_m || z as a bit array of exactly l bits."""
    bits = bitio.as_bit_array(X, nbits=params.N)
    blocks = split_and_pad(bits, params.mersenne, all_ones_policy=all_ones_policy)
    return distill_blocks(blocks, seed, params, workers=workers).key_bits
