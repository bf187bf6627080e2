import numpy as np
import pytest

from qpa import bitio, mmh_mh
from qpa.dm3h import BlockVector, Dm3hSeed
from qpa.errors import InvalidOutputLen
from qpa.mersenne import MersenneParams, MersenneResidue
from qpa.mmh_mh import MhSeed


def test_core_definition_example():
    # alpha = 8, beta = 3: (3*100 + 1) mod 256 = 45, floor(45/32) = 1
    assert mmh_mh._mh_core(100, 3, 1, 8, 3) == 1


def test_identity_affine_map_keeps_top_bits():
    params = MersenneParams(7)
    y = MersenneResidue(0b1011010, params)
    bits = mmh_mh.mh_hash(y, MhSeed(b=1, c=0), 3)
    assert bitio.int_from_bits(bits) == 0b101


def test_zero_maps_to_zero():
    params = MersenneParams(7)
    for b in (1, 3, 97):
        bits = mmh_mh.mh_hash(MersenneResidue(0, params), MhSeed(b=b, c=0), 4)
        assert bits.tolist() == [0, 0, 0, 0]


def test_even_b_rejected():
    with pytest.raises(ValueError):
        MhSeed(b=2, c=0)


def test_output_length_validation():
    params = MersenneParams(7)
    y = MersenneResidue(5, params)
    seed = MhSeed(b=3, c=1)
    for bad in (0, 7, 8):
        with pytest.raises(InvalidOutputLen):
            mmh_mh.mh_hash(y, seed, bad)
    assert len(mmh_mh.mh_hash(y, seed, 6)) == 6


def test_output_always_below_limit():
    params = MersenneParams(13)
    rng = np.random.default_rng(0)
    for _ in range(50):
        y = MersenneResidue(int(rng.integers(0, params.p)), params)
        seed = MhSeed(b=int(rng.integers(0, 1 << 13)) | 1,
                      c=int(rng.integers(0, 1 << 13)))
        l_prime = int(rng.integers(1, 13))
        assert bitio.int_from_bits(mmh_mh.mh_hash(y, seed, l_prime)) < (1 << l_prime)


def test_affine_structure_in_c():
    params = MersenneParams(7)
    y = MersenneResidue(93, params)
    b = 57
    base = mmh_mh._mh_core(y.value, b, 0, 7, 7)
    for delta in (1, 13, 100, 127):
        assert mmh_mh._mh_core(y.value, b, delta, 7, 7) == (base + delta) % 128


def test_composition_hand_example():
    # gamma = 7, x = (3, 5), A = (1, 1, 1, 2), pass 2: y = a_2*3 + a_3*5 = 8;
    # (5*8 + 9) mod 128 = 49, floor(49/8) = 6
    params = MersenneParams(7)
    x = BlockVector.from_values([3, 5], params)
    A = Dm3hSeed.from_values([1, 1, 1, 2], params)
    bits = mmh_mh.mmh_mh_hash(x, A, MhSeed(b=5, c=9), 1, 4)
    assert bitio.int_from_bits(bits) == 6


def test_composition_matches_naive_tail():
    rng = np.random.default_rng(1)
    params = MersenneParams(31)
    p = params.p
    for _ in range(10):
        xs = [int(rng.integers(0, p)) for _ in range(3)]
        coeffs = [int(rng.integers(0, p)) for _ in range(5)]
        b = int(rng.integers(0, 1 << 31)) | 1
        c = int(rng.integers(0, 1 << 31))
        m, l_prime = 2, 11
        x = BlockVector.from_values(xs, params)
        A = Dm3hSeed.from_values(coeffs, params)
        got = bitio.int_from_bits(
            mmh_mh.mmh_mh_hash(x, A, MhSeed(b=b, c=c), m, l_prime))
        y = sum(coeffs[j + m] * xs[j] for j in range(3)) % p
        expected = ((b * y + c) % (1 << 31)) >> (31 - l_prime)
        assert got == expected
