"""Six of the SP 800-22 randomness tests: frequency (monobit), block
frequency, runs, serial, approximate entropy, and cumulative sums.

Inputs are bit sequences given either as raw octets (bits taken most
significant first, matching the keystream export convention) or as a
numpy array of 0/1 values.  Each test returns a :class:`StatReport`
with its p-value and the pass verdict at significance 0.01; tests whose
definition yields two p-values (serial, cumulative sums) report the
smaller one, so "pass" means both passed.

The remaining suite tests (matrix rank, templates, universal, and so
on) are deliberately not reimplemented here: export a raw keystream and
feed it to the reference STS tool instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import erfc, gammaincc, ndtr

ALPHA = 0.01
MIN_SUBSET_BITS = 100_000


@dataclass(frozen=True)
class StatReport:
    name: str
    statistic: float
    p_value: float
    passed: bool
    n_bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.p_value <= 1:
            raise ValueError(f"p-value out of range: {self.p_value}")

    def __str__(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (f"{self.name}: statistic={self.statistic:.6g} "
                f"p={self.p_value:.6f} {verdict}")


def _report(name: str, statistic: float, p: float, n: int) -> StatReport:
    p = min(max(float(p), 0.0), 1.0)
    return StatReport(name, float(statistic), p, p >= ALPHA, n)


def as_bits(data: bytes | np.ndarray) -> np.ndarray:
    """Normalize input to a uint8 array of 0/1, MSB-first for octets."""
    if isinstance(data, (bytes, bytearray)):
        return np.unpackbits(np.frombuffer(bytes(data), dtype=np.uint8))
    bits = np.asarray(data, dtype=np.uint8)
    if bits.ndim != 1 or not np.isin(bits, (0, 1)).all():
        raise ValueError("bit array must be one-dimensional 0/1 values")
    return bits


def _require(bits: np.ndarray, minimum: int, name: str) -> int:
    n = bits.size
    if n < minimum:
        raise ValueError(f"{name} needs at least {minimum} bits, got {n}")
    return n


def monobit(data: bytes | np.ndarray) -> StatReport:
    """Frequency test: the +1/-1 balance of the whole sequence."""
    bits = as_bits(data)
    n = _require(bits, 100, "monobit")
    s = abs(2 * int(bits.sum()) - n)
    s_obs = s / math.sqrt(n)
    return _report("monobit", s_obs, erfc(s_obs / math.sqrt(2)), n)


def block_frequency(data: bytes | np.ndarray, block_size: int | None = None) -> StatReport:
    """Frequency within non-overlapping blocks.

    The default block size is n//100 + 1 (at least 20), which keeps the
    block count just under 100 as the test's reference parameters ask.
    """
    bits = as_bits(data)
    n = _require(bits, 100, "block_frequency")
    m = block_size if block_size is not None else max(20, n // 100 + 1)
    nblocks = n // m
    if nblocks < 1:
        raise ValueError("block size exceeds sequence length")
    pi = bits[: nblocks * m].reshape(nblocks, m).mean(axis=1)
    chi2 = 4.0 * m * float(((pi - 0.5) ** 2).sum())
    return _report("block_frequency", chi2, gammaincc(nblocks / 2, chi2 / 2), n)


def runs(data: bytes | np.ndarray) -> StatReport:
    """Total number of runs of identical bits."""
    bits = as_bits(data)
    n = _require(bits, 100, "runs")
    pi = float(bits.mean())
    if abs(pi - 0.5) >= 2 / math.sqrt(n):
        # prerequisite monobit failure: the runs statistic is meaningless
        return _report("runs", 0.0, 0.0, n)
    v_obs = 1 + int(np.count_nonzero(np.diff(bits)))
    num = abs(v_obs - 2 * n * pi * (1 - pi))
    den = 2 * math.sqrt(2 * n) * pi * (1 - pi)
    return _report("runs", v_obs, erfc(num / den), n)


def _pattern_counts(bits: np.ndarray, m: int) -> np.ndarray:
    """Counts of every overlapping m-bit pattern, with wraparound."""
    if m == 0:
        return np.array([bits.size], dtype=np.int64)
    ext = np.concatenate([bits, bits[: m - 1]]).astype(np.int64)
    vals = np.zeros(bits.size, dtype=np.int64)
    for i in range(m):
        vals = (vals << 1) | ext[i: i + bits.size]
    return np.bincount(vals, minlength=1 << m)


def _psi_sq(bits: np.ndarray, m: int) -> float:
    if m <= 0:
        return 0.0
    c = _pattern_counts(bits, m)
    n = bits.size
    return float((c.astype(np.float64) ** 2).sum()) * (1 << m) / n - n


def serial(data: bytes | np.ndarray, m: int | None = None) -> StatReport:
    """Overlapping m-bit pattern uniformity (two chi-square deltas).

    Reports min(p1, p2).  Default m follows the reference guidance
    m < log2(n) - 2, capped at 16.
    """
    bits = as_bits(data)
    n = _require(bits, 1000, "serial")
    if m is None:
        m = min(16, int(math.log2(n)) - 3)
    if not 2 <= m < math.log2(n) - 2:
        raise ValueError(f"serial block length m={m} invalid for n={n}")
    psi_m = _psi_sq(bits, m)
    psi_m1 = _psi_sq(bits, m - 1)
    psi_m2 = _psi_sq(bits, m - 2)
    d1 = psi_m - psi_m1
    d2 = psi_m - 2 * psi_m1 + psi_m2
    p1 = gammaincc(2 ** (m - 2), d1 / 2)
    p2 = gammaincc(2 ** (m - 3), d2 / 2)
    return _report("serial", d1, min(p1, p2), n)


def approximate_entropy(data: bytes | np.ndarray, m: int | None = None) -> StatReport:
    """Compares overlapping m and m+1 pattern frequencies."""
    bits = as_bits(data)
    n = _require(bits, 1000, "approximate_entropy")
    if m is None:
        m = min(10, int(math.log2(n)) - 6)
    if not 1 <= m < math.log2(n) - 5:
        raise ValueError(f"approximate entropy block length m={m} invalid for n={n}")

    def phi(mm: int) -> float:
        c = _pattern_counts(bits, mm).astype(np.float64)
        pi = c[c > 0] / n
        return float((pi * np.log(pi)).sum())

    apen = phi(m) - phi(m + 1)
    chi2 = 2.0 * n * (math.log(2) - apen)
    return _report("approximate_entropy", chi2, gammaincc(2 ** (m - 1), chi2 / 2), n)


def _cusum_p(z: int, n: int) -> float:
    sqrt_n = math.sqrt(n)
    k1 = np.arange((-n // z + 1) // 4, (n // z - 1) // 4 + 1)
    term1 = (ndtr((4 * k1 + 1) * z / sqrt_n)
             - ndtr((4 * k1 - 1) * z / sqrt_n)).sum()
    k2 = np.arange((-n // z - 3) // 4, (n // z - 1) // 4 + 1)
    term2 = (ndtr((4 * k2 + 3) * z / sqrt_n)
             - ndtr((4 * k2 + 1) * z / sqrt_n)).sum()
    return 1.0 - term1 + term2


def cumulative_sums(data: bytes | np.ndarray) -> StatReport:
    """Maximum excursion of the +1/-1 random walk, forward and backward;
    reports the smaller of the two p-values."""
    bits = as_bits(data)
    n = _require(bits, 100, "cumulative_sums")
    steps = 2 * bits.astype(np.int64) - 1
    z_fwd = int(np.abs(np.cumsum(steps)).max())
    z_bwd = int(np.abs(np.cumsum(steps[::-1])).max())
    p_fwd = _cusum_p(z_fwd, n)
    p_bwd = _cusum_p(z_bwd, n)
    return _report("cumulative_sums", max(z_fwd, z_bwd), min(p_fwd, p_bwd), n)


def nist_subset(data: bytes | np.ndarray) -> list[StatReport]:
    """Run all six implemented tests on one sample of at least 10**5 bits."""
    bits = as_bits(data)
    _require(bits, MIN_SUBSET_BITS, "nist_subset")
    return [
        monobit(bits),
        block_frequency(bits),
        runs(bits),
        serial(bits),
        approximate_entropy(bits),
        cumulative_sums(bits),
    ]
