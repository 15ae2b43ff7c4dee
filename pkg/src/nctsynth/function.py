"""Reversible functions as permutations, and their Reed-Muller expansions.

Bit convention used throughout the package: in an index ``x`` of the Boolean
cube, variable ``x_1`` is the most significant bit and ``x_n`` the least.
Monomials are indexed by the bitmask of their variables under the same
convention, so mask ``0b110`` (n=3) stands for ``x_1 x_2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ArityTooLarge,
    FormatError,
    IndexOutOfRange,
    NotAPermutation,
    NotPowerOfTwo,
)

#: Largest arity for which full truth tables are materialised in memory.
MAX_TABLE_ARITY = 20


def _log2_exact(size: int) -> int:
    if size < 1 or size & (size - 1):
        raise NotPowerOfTwo(f"length {size} is not a power of two")
    return size.bit_length() - 1


@dataclass(frozen=True)
class ReversibleFunction:
    """A bijection of the n-bit Boolean cube, stored as its value table.

    ``table[i]`` is the output index for input index ``i``.
    """

    n: int
    table: tuple[int, ...]

    def __post_init__(self):
        size = 1 << self.n
        if len(self.table) != size:
            raise NotPowerOfTwo(f"expected {size} entries for n={self.n}, got {len(self.table)}")
        seen = bytearray(size)
        for v in self.table:
            if not 0 <= v < size or seen[v]:
                raise NotAPermutation(f"value {v} is out of range or repeated")
            seen[v] = 1

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __len__(self) -> int:
        return len(self.table)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64)

    def output_column(self, i: int) -> np.ndarray:
        """Truth table (uint8, length 2^n) of the i-th output bit, 1-based."""
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"output index {i} outside 1..{self.n}")
        return ((self.as_array() >> (self.n - i)) & 1).astype(np.uint8)

    def compose(self, other: "ReversibleFunction") -> "ReversibleFunction":
        """``self ∘ other``: apply ``other`` first."""
        return ReversibleFunction(self.n, tuple(self.table[v] for v in other.table))

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.table))


@dataclass(frozen=True)
class PprmTable:
    """Positive-polarity Reed-Muller coefficients of one Boolean function."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != 1 << self.n:
            raise NotPowerOfTwo(f"expected {1 << self.n} coefficients, got {len(self.coeffs)}")

    @property
    def constant(self) -> int:
        return self.coeffs[0]

    def monomials(self) -> list[int]:
        """Masks of the monomials present in the expansion."""
        return [m for m, c in enumerate(self.coeffs) if c]

    def format(self) -> str:
        terms = []
        for m in self.monomials():
            if m == 0:
                terms.append("1")
            else:
                terms.append("".join(f"x{v}" for v in range(1, self.n + 1) if m >> (self.n - v) & 1))
        return " ^ ".join(terms) if terms else "0"


def from_permutation(values: Iterable[int]) -> ReversibleFunction:
    values = tuple(int(v) for v in values)
    if not values:
        raise NotPowerOfTwo("empty permutation")
    return ReversibleFunction(_log2_exact(len(values)), values)


def identity(n: int) -> ReversibleFunction:
    return ReversibleFunction(n, tuple(range(1 << n)))


def inverse(f: ReversibleFunction) -> ReversibleFunction:
    inv = [0] * len(f.table)
    for i, v in enumerate(f.table):
        inv[v] = i
    return ReversibleFunction(f.n, tuple(inv))


def random_function(n: int, seed: int, max_arity: int = MAX_TABLE_ARITY) -> ReversibleFunction:
    """Uniformly random n-bit permutation, deterministic in ``seed``."""
    if n < 1:
        raise IndexOutOfRange("arity must be at least 1")
    if n > max_arity:
        raise ArityTooLarge(f"n={n} exceeds the in-memory limit {max_arity}")
    perm = np.random.default_rng(seed).permutation(1 << n)
    return ReversibleFunction(n, tuple(int(v) for v in perm))


def mobius_transform(column: Sequence[int] | np.ndarray) -> np.ndarray:
    """Subset-parity (binary Moebius) transform of a length-2^n 0/1 vector.

    Truth table to Reed-Muller coefficients and back: the transform is an
    involution over GF(2).
    """
    arr = np.array(column, dtype=np.uint8) & 1
    n = _log2_exact(arr.size)
    for k in range(n):
        view = arr.reshape(-1, 2, 1 << k)
        view[:, 1, :] ^= view[:, 0, :]
    return arr


def pprm_of_column(column: Sequence[int] | np.ndarray) -> PprmTable:
    coeffs = mobius_transform(column)
    return PprmTable(_log2_exact(coeffs.size), tuple(int(c) for c in coeffs))


def pprm_of_output(f: ReversibleFunction, i: int) -> PprmTable:
    return pprm_of_column(f.output_column(i))


def eval_pprm(t: PprmTable, x: int) -> int:
    if not 0 <= x < 1 << t.n:
        raise IndexOutOfRange(f"input {x} outside the {t.n}-cube")
    acc = 0
    # enumerate the submasks of x
    m = x
    while True:
        acc ^= t.coeffs[m]
        if m == 0:
            break
        m = (m - 1) & x
    return acc


def pprm_truth_table(t: PprmTable) -> np.ndarray:
    return mobius_transform(t.coeffs)


def constant_term_count(tables: Iterable[PprmTable]) -> int:
    return sum(t.constant for t in tables)


# -- .perm text format -----------------------------------------------------

def parse_perm(text: str) -> ReversibleFunction:
    """Parse the ``.perm`` format: an ``n=<k>`` header followed by 2^k values."""
    n = None
    values: list[int] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            key, sep, val = line.partition("=")
            if not sep or key.strip() != "n":
                raise FormatError(f"expected 'n=<k>' header, got {raw!r}")
            try:
                n = int(val)
            except ValueError:
                raise FormatError(f"bad arity in header {raw!r}") from None
            if n < 1:
                raise FormatError("arity must be positive")
            continue
        try:
            values.extend(int(tok) for tok in line.split())
        except ValueError:
            raise NotAPermutation(f"non-integer entry in {raw!r}") from None
    if n is None:
        raise FormatError("missing 'n=<k>' header")
    if len(values) != 1 << n:
        raise NotPowerOfTwo(f"header says n={n} but {len(values)} values follow")
    return ReversibleFunction(n, tuple(values))


def format_perm(f: ReversibleFunction, per_line: int = 16) -> str:
    lines = [f"n={f.n}"]
    for start in range(0, len(f.table), per_line):
        lines.append(" ".join(str(v) for v in f.table[start:start + per_line]))
    return "\n".join(lines) + "\n"
