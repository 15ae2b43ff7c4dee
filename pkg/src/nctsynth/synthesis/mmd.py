"""Transformation-based baseline synthesis.

Output-side variant: rows of the truth table are fixed in ascending order by
gates applied to the outputs; the accumulated gates, reversed, realize f.
"""
from __future__ import annotations

import numpy as np

from ..circuit import Circuit, Gate, Input, nct_gate
from ..function import ReversibleFunction


def _wires_of(mask: int, n: int) -> list[int]:
    # bit 2^(n-1) is x_1 on wire 0
    return [w for w in range(n) if mask >> (n - 1 - w) & 1]


def mmd_baseline(f: ReversibleFunction) -> Circuit:
    n = f.n
    g = f.as_array().copy()
    emitted: list[Gate] = []

    def apply(controls: int, target_bit: int) -> None:
        hit = (g & controls) == controls
        g[hit] ^= target_bit
        (t,) = _wires_of(target_bit, n)
        emitted.append(nct_gate(_wires_of(controls, n), t))

    # row 0: NOT gates only
    for w in range(n):
        bit = 1 << (n - 1 - w)
        if g[0] & bit:
            apply(0, bit)
    for i in range(1, 1 << n):
        v = int(g[i])
        if v == i:
            continue
        # set the bits i has and v lacks, conditioned on v
        for w in range(n):
            bit = 1 << (n - 1 - w)
            if i & bit and not v & bit:
                apply(v, bit)
                v |= bit
        # clear the bits v has and i lacks, conditioned on i
        for w in range(n):
            bit = 1 << (n - 1 - w)
            if v & bit and not i & bit:
                apply(i, bit)
                v ^= bit
        assert int(g[i]) == i
    roles = tuple(Input(i + 1) for i in range(n))
    return Circuit(n, roles, tuple(reversed(emitted)), tuple(range(n)))
