"""Large-block privacy amplification for QKD post-processing.

Universal hashing (DM3H + MMH-MH) over Mersenne-prime rings, with
big-integer multiplication accelerated by a radix-16 NTT over the
Goldilocks prime 2^64 - 2^32 + 1.
"""

from .mersenne import DEFAULT_GAMMA, MersenneParams, MersenneResidue
from .pipeline import (DistillResult, PaParams, SeedMaterial, distill,
                       distill_blocks, plan, required_seed_bits,
                       seed_from_bits)

__all__ = [
    "DEFAULT_GAMMA",
    "DistillResult",
    "MersenneParams",
    "MersenneResidue",
    "PaParams",
    "SeedMaterial",
    "distill",
    "distill_blocks",
    "plan",
    "required_seed_bits",
    "seed_from_bits",
]
