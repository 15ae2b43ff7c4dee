"""Encoding of an NCT circuit as a labelled DAG over its Toffoli gates and outputs.

Vertices T_1..T_h stand for the Toffoli gates in circuit order and F_1..F_n for
the outputs. Row i of the ``h x (h+n)`` edge matrix records which later
Toffoli controls (value 2: first control, 1: second, 3: both) and which
outputs (value 1) contain Prod(T_i) in their linear sum. Vertex labels are the
affine parts of those linear sums, numbered by :func:`affine_index`.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..circuit import MCT, Circuit, input_bits, pack_bits
from ..errors import ContainsMct, MalformedDag, NoDesignatedOutputs
from .linear import eval_affine, linear_sum, toffoli_positions


@dataclass(frozen=True)
class CircuitDag:
    n: int
    h: int
    t_labels: tuple[tuple[int, int], ...]
    f_labels: tuple[int, ...]
    matrix: np.ndarray

    def validate(self) -> None:
        m = np.asarray(self.matrix)
        if m.shape != (self.h, self.h + self.n):
            raise MalformedDag(f"matrix shape {m.shape}, expected {(self.h, self.h + self.n)}")
        if m.size and (m.min() < 0 or m.max() > 3):
            raise MalformedDag("edge labels must lie in 0..3")
        if np.any(np.tril(m[:, : self.h])):
            raise MalformedDag("Toffoli block must be strictly upper triangular")
        if np.any(m[:, self.h:] > 1):
            raise MalformedDag("output columns must be 0/1")
        limit = 1 << (self.n + 1)
        labels = [v for pair in self.t_labels for v in pair] + list(self.f_labels)
        if len(self.t_labels) != self.h or len(self.f_labels) != self.n:
            raise MalformedDag("wrong number of vertex labels")
        if any(not 0 <= v < limit for v in labels):
            raise MalformedDag(f"vertex labels must lie in [0, {limit})")

    def edges(self) -> list[tuple[str, str, int]]:
        out = []
        for i, j in zip(*np.nonzero(self.matrix)):
            head = f"T{j + 1}" if j < self.h else f"F{j - self.h + 1}"
            out.append((f"T{i + 1}", head, int(self.matrix[i, j])))
        return out


def encode_dag(c: Circuit) -> CircuitDag:
    if any(g.kind == MCT for g in c.gates):
        raise ContainsMct("decompose MCT gates before encoding")
    if not c.outputs:
        raise NoDesignatedOutputs("DAG encoding reads the designated outputs")
    positions = toffoli_positions(c)
    h, n = len(positions), c.n
    matrix = np.zeros((h, h + n), dtype=np.int8)
    t_labels = []
    for j, p in enumerate(positions):
        first, second = (linear_sum(c, w, p) for w in c.gates[p].controls)
        for i in first.products:
            matrix[i - 1, j] |= 2
        for i in second.products:
            matrix[i - 1, j] |= 1
        t_labels.append((first.affine_index(), second.affine_index()))
    f_labels = []
    for k, w in enumerate(c.outputs):
        ls = linear_sum(c, w)
        for i in ls.products:
            matrix[i - 1, h + k] = 1
        f_labels.append(ls.affine_index())
    dag = CircuitDag(n, h, tuple(t_labels), tuple(f_labels), matrix)
    dag.validate()
    return dag


def decode_dag(d: CircuitDag) -> np.ndarray:
    """``(n, 2^n)`` boolean truth tables of F_1..F_n."""
    d.validate()
    m = np.asarray(d.matrix)
    inputs = input_bits(d.n)
    prods = np.zeros((d.h, inputs.shape[1]), dtype=bool)
    for j, (la, lb) in enumerate(d.t_labels):
        first = eval_affine(la, inputs)
        second = eval_affine(lb, inputs)
        for i in range(j):
            if m[i, j] & 2:
                first ^= prods[i]
            if m[i, j] & 1:
                second ^= prods[i]
        prods[j] = first & second
    outs = np.zeros((d.n, inputs.shape[1]), dtype=bool)
    for k, lf in enumerate(d.f_labels):
        acc = eval_affine(lf, inputs)
        for i in range(d.h):
            if m[i, d.h + k]:
                acc ^= prods[i]
        outs[k] = acc
    return outs


def decoded_table(d: CircuitDag) -> tuple[int, ...]:
    """Decoded outputs packed as integers, f_1 the most significant bit."""
    return tuple(int(v) for v in pack_bits(decode_dag(d)))
