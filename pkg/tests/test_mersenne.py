import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qpa import mersenne
from qpa.bigint import BigUint
from qpa.errors import InputTooWide, InvalidGamma, ParamMismatch
from qpa.mersenne import MersenneParams, MersenneResidue


def test_params_validation():
    assert MersenneParams(7).p == 127
    assert MersenneParams(756839).gamma == 756839
    for bad in (4, 11, 23, 756864):
        with pytest.raises(InvalidGamma):
            MersenneParams(bad)


def test_reduce_examples():
    params = MersenneParams(7)
    assert mersenne.reduce(BigUint.from_int(1 << 7), params).value == 1
    assert mersenne.reduce(BigUint.from_int(127), params).value == 0
    assert mersenne.reduce(BigUint.from_int(200), params).value == 73


def test_reduce_rejects_wide_input():
    params = MersenneParams(7)
    with pytest.raises(InputTooWide):
        mersenne.reduce(BigUint.from_int(1 << 100, 101), params)


@given(st.sampled_from([7, 13, 31, 127]), st.data())
def test_reduce_matches_long_division(gamma, data):
    params = MersenneParams(gamma)
    x = data.draw(st.integers(0, (1 << (2 * gamma)) - 1))
    r = mersenne.reduce(BigUint.from_int(x, 2 * gamma), params)
    assert r.value == x % params.p
    assert 0 <= r.value <= params.p - 1


def test_mod_add_examples():
    params = MersenneParams(7)
    x = MersenneResidue(42, params)
    assert mersenne.mod_add_acc(MersenneResidue(0, params), x).value == 42
    assert mersenne.mod_add_acc(MersenneResidue(126, params),
                                MersenneResidue(1, params)).value == 0
    assert mersenne.mod_add_acc(MersenneResidue(100, params),
                                MersenneResidue(100, params)).value == 73


def test_mod_mul_examples():
    params = MersenneParams(127)
    rng = np.random.default_rng(0)
    x = MersenneResidue(int(rng.integers(0, 1 << 60)), params)
    assert mersenne.mod_mul(MersenneResidue(1, params), x).value == x.value
    assert mersenne.mod_mul(MersenneResidue(0, params), x).value == 0
    for _ in range(10):
        a = int.from_bytes(rng.bytes(15), "little") % params.p
        b = int.from_bytes(rng.bytes(15), "little") % params.p
        got = mersenne.mod_mul(MersenneResidue(a, params),
                               MersenneResidue(b, params))
        assert got.value == (a * b) % params.p


def test_param_mismatch():
    a = MersenneResidue(1, MersenneParams(7))
    b = MersenneResidue(1, MersenneParams(13))
    with pytest.raises(ParamMismatch):
        mersenne.mod_add_acc(a, b)
    with pytest.raises(ParamMismatch):
        mersenne.mod_mul(a, b)


@given(st.data())
def test_add_associative_commutative(data):
    params = MersenneParams(31)
    vals = [data.draw(st.integers(0, params.p - 1)) for _ in range(3)]
    a, b, c = (MersenneResidue(v, params) for v in vals)
    add = mersenne.mod_add_acc
    assert add(a, b).value == add(b, a).value
    assert add(add(a, b), c).value == add(a, add(b, c)).value


@given(st.data())
def test_mul_distributes_over_add(data):
    params = MersenneParams(31)
    vals = [data.draw(st.integers(0, params.p - 1)) for _ in range(3)]
    a, b, c = (MersenneResidue(v, params) for v in vals)
    lhs = mersenne.mod_mul(a, mersenne.mod_add_acc(b, c))
    rhs = mersenne.mod_add_acc(mersenne.mod_mul(a, b), mersenne.mod_mul(a, c))
    assert lhs.value == rhs.value
