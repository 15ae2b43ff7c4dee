"""Wire values as a parity of Toffoli products plus an affine function of the inputs."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..circuit import CNOT, MCT, NOT, TOF, Circuit, Input, trace, input_bits
from ..errors import ContainsMct, InvalidCut


@dataclass(frozen=True)
class LinearSum:
    """``⊕ prod_coeffs[i]·Prod(TOF_{i+1}) ⊕ ⊕ lin_coeffs[k]·x_{k+1} ⊕ const_term``."""

    prod_coeffs: tuple[int, ...]
    lin_coeffs: tuple[int, ...]
    const_term: int

    @property
    def products(self) -> list[int]:
        """1-based indices of the Toffoli products present."""
        return [i + 1 for i, c in enumerate(self.prod_coeffs) if c]

    def affine_index(self) -> int:
        return affine_index(self.lin_coeffs, self.const_term)

    def evaluate(self, inputs: np.ndarray, prods: np.ndarray) -> np.ndarray:
        """Value over N assignments given ``(n, N)`` inputs and ``(h, N)`` product values."""
        acc = np.full(inputs.shape[1], bool(self.const_term))
        for k, c in enumerate(self.lin_coeffs):
            if c:
                acc ^= inputs[k]
        for i, c in enumerate(self.prod_coeffs):
            if c:
                acc ^= prods[i]
        return acc

    def __str__(self) -> str:
        terms = [f"P{i}" for i in self.products]
        terms += [f"x{k + 1}" for k, c in enumerate(self.lin_coeffs) if c]
        if self.const_term:
            terms.append("1")
        return " ^ ".join(terms) if terms else "0"


def affine_index(lin_coeffs, const_term: int) -> int:
    """Number of the affine function c_0 ⊕ c_1 x_1 ⊕ … ⊕ c_n x_n in [0, 2^(n+1)).

    ``c_k`` contributes 2^(k-1) for k >= 1 and the constant contributes 2^n.
    """
    n = len(lin_coeffs)
    return sum(int(c) << k for k, c in enumerate(lin_coeffs)) + (int(const_term) << n)


def affine_from_index(index: int, n: int) -> tuple[tuple[int, ...], int]:
    if not 0 <= index < 1 << (n + 1):
        raise ValueError(f"affine index {index} outside [0, {1 << (n + 1)})")
    return tuple(index >> k & 1 for k in range(n)), index >> n & 1


def eval_affine(index: int, inputs: np.ndarray) -> np.ndarray:
    """Affine function number ``index`` evaluated on ``(n, N)`` inputs."""
    lin, const = affine_from_index(index, inputs.shape[0])
    acc = np.full(inputs.shape[1], bool(const))
    for k, c in enumerate(lin):
        if c:
            acc ^= inputs[k]
    return acc


def toffoli_positions(c: Circuit) -> list[int]:
    """Gate positions of TOF_1..TOF_h."""
    return [p for p, g in enumerate(c.gates) if g.kind == TOF]


def linear_sum(c: Circuit, wire: int, position: int | None = None) -> LinearSum:
    """Linear sum of ``wire`` at the cut before gate ``position`` (default: the outputs).

    Walks the circuit backwards keeping the set of wire pieces still to be
    resolved; a piece reached twice cancels, so the set is kept by parity.
    """
    if position is None:
        position = len(c.gates)
    if not 0 <= wire < c.width or not 0 <= position <= len(c.gates):
        raise InvalidCut(f"no piece of wire {wire} at position {position}")
    tof_index = {p: i for i, p in enumerate(toffoli_positions(c))}
    prods = [0] * len(tof_index)
    const = 0
    pending = {wire}
    for p in range(position - 1, -1, -1):
        g = c.gates[p]
        if g.kind == MCT:
            raise ContainsMct("linear sums are defined for NCT circuits")
        if g.target not in pending:
            continue
        if g.kind == NOT:
            const ^= 1
        elif g.kind == CNOT:
            pending ^= {g.controls[0]}
        elif g.kind == TOF:
            prods[tof_index[p]] ^= 1
    lin = [0] * c.n
    for w in pending:
        role = c.roles[w]
        if isinstance(role, Input):
            lin[role.index - 1] ^= 1
        else:
            const ^= role.value
    return LinearSum(tuple(prods), tuple(lin), const)


def product_trace(c: Circuit, xs: np.ndarray | None = None) -> tuple[np.ndarray, list[np.ndarray], np.ndarray]:
    """Inputs, per-cut wire states and ``(h, N)`` Toffoli product values from simulation."""
    inputs = input_bits(c.n, xs)
    cuts = trace(c, inputs)
    prods = np.zeros((0, inputs.shape[1]), dtype=bool)
    positions = toffoli_positions(c)
    if positions:
        prods = np.stack(
            [cuts[p][c.gates[p].controls[0]] & cuts[p][c.gates[p].controls[1]] for p in positions]
        )
    return inputs, cuts, prods
