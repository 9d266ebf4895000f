"""
Timing and throughput
=====================

Setup (key schedule plus nonce mixing) runs once per stream, so it is
timed separately from steady-state word encryption.  Steady-state time
grows linearly with message length; the absolute numbers are
host-specific.
"""

from separ.bench import compute_throughput, results_csv, run_bench

key = bytes(range(32))
iv = bytes(range(16))

results = []
for bits in (64, 128, 192):
    init, work = run_bench(key, iv, bits, repetitions=100)
    results.append(init)
    results.append(work)
    print(f"{bits:3d}-bit message: init {init.median_time * 1e6:7.1f} us, "
          f"encrypt {work.median_time * 1e6:7.1f} us "
          f"({work.throughput_kbps:8.1f} kb/s)")

t64 = results[1].median_time
t192 = results[5].median_time
print(f"\nsteady-state scaling t(192)/t(64) = {t192 / t64:.2f} (linear -> 3.0)")

print("\nthroughput formula at a fixed reference point:")
print(f"  16 bits in 117.308 us -> {compute_throughput(16, 117.308e-6):.1f} kb/s")

print("\nCSV report:")
print(results_csv(results))
