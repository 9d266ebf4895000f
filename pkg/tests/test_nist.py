"""The SP 800-22 subset: analytic anchors and pathological inputs."""

import math
import random

import numpy as np
import pytest
from scipy.special import erfc

from separ.analysis import (
    approximate_entropy,
    block_frequency,
    cumulative_sums,
    monobit,
    nist_subset,
    runs,
    serial,
)
from separ.analysis.nist import as_bits


def random_bits(n, seed=0):
    rng = np.random.default_rng(seed)
    return rng.integers(0, 2, size=n, dtype=np.uint8)


def test_as_bits_msb_first():
    bits = as_bits(bytes([0x80, 0x01]))
    assert bits.tolist() == [1] + [0] * 14 + [1]


def test_as_bits_rejects_non_binary():
    with pytest.raises(ValueError):
        as_bits(np.array([0, 1, 2]))


# ---------------------------------------------------------------------------
# analytic anchors
# ---------------------------------------------------------------------------

def test_monobit_sixty_ones_in_hundred():
    bits = np.concatenate([np.ones(60, dtype=np.uint8),
                           np.zeros(40, dtype=np.uint8)])
    rep = monobit(bits)
    # |S| = 20, s_obs = 2.0, p = erfc(sqrt(2))
    assert rep.statistic == pytest.approx(2.0)
    assert rep.p_value == pytest.approx(float(erfc(math.sqrt(2))))
    assert rep.p_value == pytest.approx(0.0455, abs=5e-4)


def test_monobit_balanced_is_one():
    bits = np.array([0, 1] * 50, dtype=np.uint8)
    assert monobit(bits).p_value == pytest.approx(1.0)


def test_monobit_all_ones_fails():
    rep = monobit(np.ones(100_000, dtype=np.uint8))
    assert rep.p_value < 1e-10
    assert not rep.passed


def test_block_frequency_balanced_blocks():
    bits = np.array([0, 1] * 50, dtype=np.uint8)
    rep = block_frequency(bits, block_size=10)
    assert rep.statistic == pytest.approx(0.0)
    assert rep.p_value == pytest.approx(1.0)


def test_block_frequency_biased_blocks_fail():
    bits = np.concatenate([np.ones(5000, dtype=np.uint8),
                           np.zeros(5000, dtype=np.uint8)])
    rep = block_frequency(bits, block_size=100)
    assert not rep.passed


def test_runs_alternating_fails():
    bits = np.array([0, 1] * 50_000, dtype=np.uint8)
    assert monobit(bits).passed          # balance is perfect
    rep = runs(bits)
    assert rep.p_value < 1e-10 and not rep.passed


def test_runs_prerequisite_failure_reports_zero():
    rep = runs(np.ones(1000, dtype=np.uint8))
    assert rep.p_value == 0.0 and not rep.passed


def test_serial_alternating_fails():
    bits = np.array([0, 1] * 50_000, dtype=np.uint8)
    assert not serial(bits, m=5).passed


def test_approximate_entropy_constant_fails():
    assert not approximate_entropy(np.zeros(10_000, dtype=np.uint8), m=3).passed


def test_cumulative_sums_all_ones_fails():
    rep = cumulative_sums(np.ones(10_000, dtype=np.uint8))
    assert rep.statistic == 10_000
    assert rep.p_value < 1e-10


def test_cusum_statistic_is_max_excursion():
    # +1 +1 +1 -1 -1 -1 -1 : forward max |S_k| = 3, backward 1... take max
    bits = np.array([1, 1, 1, 0, 0, 0, 0] * 20, dtype=np.uint8)
    rep = cumulative_sums(np.concatenate([bits, random_bits(60, 3)]))
    assert rep.statistic >= 3


# ---------------------------------------------------------------------------
# behaviour on good randomness
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("test_fn", [
    monobit, block_frequency, runs, serial, approximate_entropy,
    cumulative_sums,
], ids=lambda f: f.__name__)
def test_passes_system_randomness(test_fn):
    bits = random_bits(200_000, seed=11)
    rep = test_fn(bits)
    assert rep.passed, str(rep)
    assert rep.n_bits == 200_000


def test_nist_subset_runs_all_six():
    bits = random_bits(100_000, seed=5)
    reports = nist_subset(bits)
    names = [r.name for r in reports]
    assert names == ["monobit", "block_frequency", "runs", "serial",
                     "approximate_entropy", "cumulative_sums"]
    assert all(0 <= r.p_value <= 1 for r in reports)


def test_nist_subset_length_guard():
    with pytest.raises(ValueError):
        nist_subset(random_bits(50_000))


def test_individual_length_guards():
    short = random_bits(50)
    for fn in (monobit, block_frequency, runs, cumulative_sums):
        with pytest.raises(ValueError):
            fn(short)
    for fn in (serial, approximate_entropy):
        with pytest.raises(ValueError):
            fn(random_bits(500))


def test_serial_parameter_validation():
    bits = random_bits(10_000)
    with pytest.raises(ValueError):
        serial(bits, m=1)
    with pytest.raises(ValueError):
        serial(bits, m=13)  # needs m < log2(n) - 2


def test_accepts_octet_input():
    rng = random.Random(9)
    data = rng.randbytes(25_000)
    rep = monobit(data)
    assert rep.n_bits == 200_000
