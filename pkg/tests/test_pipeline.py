import numpy as np
import pytest

from qpa import dm3h, oracle, pipeline
from qpa.errors import AllOnesBlock, InvalidGamma, InvalidRatio, LengthMismatch


def random_instance(rng, params, all_ones_policy="retry"):
    """Random (X, seed) pair; redraws X when it trips the rejection rule."""
    seed_bits = rng.integers(0, 2, size=pipeline.required_seed_bits(params),
                             dtype=np.uint8)
    seed = pipeline.seed_from_bits(seed_bits, params)
    while True:
        x = rng.integers(0, 2, size=params.N, dtype=np.uint8)
        try:
            pipeline.split_and_pad(x, params.mersenne)
        except AllOnesBlock:
            if all_ones_policy == "retry":
                continue
            raise
        return x, seed


def test_plan_examples():
    p = pipeline.plan(10 ** 8, 10 ** 7, 756839)
    assert (p.n, p.m, p.l_prime) == (133, 13, 161093)
    assert 13 * 756839 == 9_838_907

    p = pipeline.plan(756839, 756839, 756839)
    assert (p.n, p.m, p.l_prime) == (1, 1, 0)

    p = pipeline.plan(100, 10, 7)
    assert (p.n, p.m, p.l_prime) == (15, 1, 3)


def test_plan_validation():
    with pytest.raises(InvalidRatio):
        pipeline.plan(100, 0, 7)
    with pytest.raises(InvalidRatio):
        pipeline.plan(100, 101, 7)
    with pytest.raises(InvalidGamma):
        pipeline.plan(100, 10, 8)


def test_required_seed_bits_examples():
    assert pipeline.required_seed_bits(pipeline.plan(7, 7, 7)) == 7
    assert pipeline.required_seed_bits(pipeline.plan(100, 10, 7)) == 126
    assert pipeline.required_seed_bits(
        pipeline.plan(10 ** 8, 10 ** 7, 756839)) == 112_012_172


def test_seed_from_bits_forces_b_odd():
    params = pipeline.plan(14, 10, 7)
    bits = np.zeros(pipeline.required_seed_bits(params), dtype=np.uint8)
    seed = pipeline.seed_from_bits(bits, params)
    assert seed.mh.b == 1 and seed.mh.c == 0


def test_seed_from_bits_length_check():
    params = pipeline.plan(14, 10, 7)
    with pytest.raises(LengthMismatch):
        pipeline.seed_from_bits(np.zeros(10, dtype=np.uint8), params)


def test_all_zero_input_gives_all_zero_key():
    params = pipeline.plan(140, 30, 7)
    seed = pipeline.seed_from_bits(
        np.zeros(pipeline.required_seed_bits(params), dtype=np.uint8), params)
    out = pipeline.distill(np.zeros(140, dtype=np.uint8), seed, params)
    assert out.tolist() == [0] * 30


@pytest.mark.parametrize("gamma,N,l", [
    (7, 140, 10),     # mixed
    (7, 140, 14),     # l' = 0, two full blocks
    (7, 100, 3),      # m = 0, tail only
    (31, 500, 500),   # ratio 1.0
    (127, 4000, 300),
])
def test_distill_matches_naive(gamma, N, l):
    rng = np.random.default_rng(gamma * 1000 + l)
    params = pipeline.plan(N, l, gamma)
    for _ in range(10):
        x, seed = random_instance(rng, params)
        fast = pipeline.distill(x, seed, params)
        assert len(fast) == l
        assert np.array_equal(fast, oracle.naive_distill(x, seed, params))


def test_output_length_always_l():
    rng = np.random.default_rng(42)
    for l in (1, 126, 127, 128, 652):
        params = pipeline.plan(127 * 20, l, 127)
        x, seed = random_instance(rng, params)
        assert len(pipeline.distill(x, seed, params)) == l


def test_worker_count_does_not_change_output():
    rng = np.random.default_rng(5)
    params = pipeline.plan(127 * 30, 127 * 3 + 50, 127)
    x, seed = random_instance(rng, params)
    outs = [pipeline.distill(x, seed, params, workers=w) for w in (1, 2, 4)]
    assert all(np.array_equal(outs[0], o) for o in outs[1:])


def test_workers_env_default(monkeypatch):
    monkeypatch.setenv("QPA_WORKERS", "3")
    assert pipeline._resolve_workers(None) == 3
    assert pipeline._resolve_workers(2) == 2


def test_pass_and_multiplication_counts(monkeypatch):
    params = pipeline.plan(127 * 10, 127 * 2 + 5, 127)
    rng = np.random.default_rng(6)
    x, seed = random_instance(rng, params)
    calls = []
    real = dm3h.mmh_pass

    def counting(blocks, A, i):
        calls.append(i)
        return real(blocks, A, i)

    monkeypatch.setattr(dm3h, "mmh_pass", counting)
    pipeline.distill(x, seed, params)
    assert sorted(calls) == list(range(1, params.m + 2))
    assert params.pass_count == params.m + 1
    # each pass multiplies every block exactly once
    assert params.n == 10


def test_distill_blocks_rejects_wrong_block_count():
    params = pipeline.plan(127 * 10, 100, 127)
    rng = np.random.default_rng(7)
    _, seed = random_instance(rng, params)
    blocks = dm3h.BlockVector.from_values([1, 2, 3], params.mersenne)
    with pytest.raises(LengthMismatch):
        pipeline.distill_blocks(blocks, seed, params)


def test_full_block_additivity_small_scale():
    # y-block additivity, the same probe the acceptance suite runs at
    # production gamma
    gamma = 127
    rng = np.random.default_rng(8)
    params = pipeline.plan(gamma * 8, gamma * 2, gamma)
    p = params.mersenne.p
    _, seed = random_instance(rng, params)
    x1 = rng.integers(0, 2, size=params.N, dtype=np.uint8)
    x2 = rng.integers(0, 2, size=params.N, dtype=np.uint8)
    b1 = pipeline.split_and_pad(x1, params.mersenne)
    b2 = pipeline.split_and_pad(x2, params.mersenne)
    summed = dm3h.BlockVector.from_values(
        [(a + b) % p for a, b in zip(b1.values(), b2.values())],
        params.mersenne)
    r1 = pipeline.distill_blocks(b1, seed, params)
    r2 = pipeline.distill_blocks(b2, seed, params)
    rs = pipeline.distill_blocks(summed, seed, params)
    for ya, yb, ys in zip(r1.y_blocks, r2.y_blocks, rs.y_blocks):
        assert ys.value == (ya.value + yb.value) % p
