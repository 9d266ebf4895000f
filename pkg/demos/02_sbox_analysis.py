"""
S-box criteria
==============

The four 4-bit substitution tables are "golden" boxes: bijective, with
maximum differential and linear probability 1/4 and algebraic degree 3.
This script prints the differential distribution table and linear
approximation table of the first box and checks all four.
"""

from separ import SBOXES
from separ.analysis import (
    algebraic_degree,
    compute_ddt,
    compute_lat,
    golden_check,
)

ddt = compute_ddt(SBOXES[0])
print("DDT of the first S-box (rows: input difference):")
for row in ddt.counts:
    print("  " + " ".join(f"{v:2d}" for v in row))
print("max entry over nonzero input differences:",
      int(ddt.counts[1:].max()))

lat = compute_lat(SBOXES[0])
print("\nLAT of the first S-box (agreement counts minus 8):")
for row in lat.biases:
    print("  " + " ".join(f"{v:+2d}" for v in row))

print("\nalgebraic normal forms (first box):")
profile = algebraic_degree(SBOXES[0])
for i, monos in enumerate(profile.monomials):
    terms = sorted(monos, key=lambda m: (bin(m).count('1'), m))
    pretty = [" & ".join(f"x{j}" for j in range(4) if m >> j & 1) or "1"
              for m in terms]
    print(f"  bit {i}: {' ^ '.join(pretty)}")
print("degree:", profile.degree)

print("\ngolden criteria for all four boxes:")
for i, box in enumerate(SBOXES, start=1):
    rep = golden_check(box)
    print(f"  box {i}: bijective={rep.bijective} diff={rep.max_diff_prob} "
          f"lin={rep.max_lin_prob} degree={rep.degree} -> golden={rep.is_golden}")
