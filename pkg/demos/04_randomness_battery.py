"""
Keystream randomness battery
============================

Generates a million-octet keystream (ciphertext of zero words) and runs
the statistics: Shannon entropy, histogram uniformity, autocorrelation,
periodicity, and the six built-in SP 800-22 tests.  The ten remaining
suite tests can be fed from `separ keystream --format bin`.
"""

import numpy as np

from separ import Separ
from separ.analysis import (
    autocorrelation,
    entropy,
    histogram,
    nist_subset,
    periodicity,
)

key = bytes.fromhex(
    "E8B9B733DA5D96D702DD3972E95307FD50C512DBF44A233E8D1E9DF5FC7D6371")
cipher = Separ(key)
stream = cipher.keystream(bytes(range(16)), 500_000)  # 10^6 octets
print(f"keystream: {len(stream):,} octets")

h = entropy(stream)
print(f"entropy: {h:.5f} bits/octet (max 8)")

counts = histogram(stream)
print(f"histogram: min {int(counts.min())}, max {int(counts.max())}, "
      f"max/min ratio {counts.max() / counts.min():.3f}")

corr = autocorrelation(stream, 1024)
print(f"autocorrelation, lags 1..1024: peak |r| = {np.abs(corr).max():.5f}")

rep = periodicity(stream)
print(f"periodicity: global period = {rep.period}, "
      f"longest repeated substring = {rep.longest_repeat} octets")

print("\nSP 800-22 subset on the full stream:")
for r in nist_subset(stream):
    print("  " + str(r))
