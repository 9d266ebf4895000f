"""Algebraic complexity accounting.

A bijective 4-bit S-box is describable by 21 quadratic equations in 8
variables (its input and output bits), so a cipher built from T S-box
applications yields a system of 21*T equations in 8*T variables.  The
counts here take the number of S-box applications as explicit inputs so
differing ways of tallying a design (rounds counted with or without the
final substitution, schedule boxes included or not) are all computable.
"""

from __future__ import annotations

EQUATIONS_PER_SBOX = 21
VARIABLES_PER_SBOX = 8


def algebraic_complexity(sboxes_per_encblock: int, encblocks: int,
                         keyschedule_sboxes: int) -> tuple[int, int]:
    """(equations, variables) for the given S-box tally."""
    for name, v in (("sboxes_per_encblock", sboxes_per_encblock),
                    ("encblocks", encblocks),
                    ("keyschedule_sboxes", keyschedule_sboxes)):
        if v < 0:
            raise ValueError(f"{name} must be nonnegative, got {v}")
    total = sboxes_per_encblock * encblocks + keyschedule_sboxes
    return EQUATIONS_PER_SBOX * total, VARIABLES_PER_SBOX * total
