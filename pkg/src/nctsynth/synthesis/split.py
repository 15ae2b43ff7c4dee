"""Reed-Muller split synthesis and its Bennett-wrapped variant.

The inputs are split into a high group A = x_1..x_a and a low group
B = x_{a+1}..x_n, so an input index reads as ``j * 2^b + k``. Every output is
expanded as a sum over j of P_A(j) times a sub-function of the B variables;
all products over A and over B are generated once and shared by every output.
"""
from __future__ import annotations

from typing import Literal, Sequence

import numpy as np

from ..circuit import Circuit, Const, Gate, Input, cnot, not_, tof
from ..errors import ArityTooSmall, SplitOutOfRange
from ..function import ReversibleFunction, mobius_transform
from .products import AncillaAllocator, ProductNetwork, gen_products

Mode = Literal["weak", "bennett"]


def _check_split(n: int, a: int) -> int:
    if n < 2:
        raise ArityTooSmall(f"split synthesis needs n >= 2, got {n}")
    if not 1 <= a <= n - 1:
        raise SplitOutOfRange(f"split a={a} outside 1..{n - 1}")
    return n - a


def weak_toffoli_count(n: int, a: int) -> int:
    b = _check_split(n, a)
    return 2**a + 2**b - a - b - 2 + n * (2**a - 1)


def bennett_toffoli_count(n: int, a: int) -> int:
    b = _check_split(n, a)
    return 2 * (2**a + 2**b - n - 2) + n * (2**a - 1)


def optimal_split(n: int, mode: Mode = "weak") -> int:
    """Smallest ``a`` minimising the Toffoli count of the given construction."""
    if n < 2:
        raise ArityTooSmall(f"need n >= 2, got {n}")
    count = {"weak": weak_toffoli_count, "bennett": bennett_toffoli_count}[mode]
    return min(range(1, n), key=lambda a: (count(n, a), a))


def _xor_subfunction(sub: np.ndarray, b_products: dict[int, int], target: int) -> list[Gate]:
    gates = []
    for k in np.flatnonzero(sub):
        gates.append(not_(target) if k == 0 else cnot(b_products[int(k)], target))
    return gates


def _products(x_wires: Sequence[int], a: int, alloc: AncillaAllocator) -> tuple[ProductNetwork, ProductNetwork]:
    b_net = gen_products(list(x_wires[a:]), alloc)
    a_net = gen_products(list(x_wires[:a]), alloc)
    return a_net, b_net


def _assemble_outputs(
    f: ReversibleFunction,
    a: int,
    a_net: ProductNetwork,
    b_net: ProductNetwork,
    targets: Sequence[int],
    scratch: int,
    prune: bool,
) -> list[Gate]:
    """EXOR every f_i into ``targets[i-1]`` from the precomputed products."""
    b = f.n - a
    gates: list[Gate] = []
    for i, out in enumerate(targets, start=1):
        blocks = mobius_transform(f.output_column(i)).reshape(1 << a, 1 << b)
        # j = 0 multiplies by the constant 1: no Toffoli needed
        gates += _xor_subfunction(blocks[0], b_net.wires, out)
        for j in range(1, 1 << a):
            if prune and not blocks[j].any():
                continue
            load = _xor_subfunction(blocks[j], b_net.wires, scratch)
            gates += load
            gates.append(tof(a_net.wires[j], scratch, out))
            gates += reversed(load)
    return gates


def pprm_split_synth(f: ReversibleFunction, a: int | None = None, prune: bool = False) -> Circuit:
    """Weak implementation: outputs f_1..f_n land on fresh ancillae.

    With ``prune`` off the Toffoli count equals :func:`weak_toffoli_count`;
    with it on, blocks whose sub-function vanishes are skipped.
    """
    n = f.n
    if a is None:
        a = optimal_split(n, "weak")
    _check_split(n, a)
    x_wires = list(range(n))
    alloc = AncillaAllocator(n)
    a_net, b_net = _products(x_wires, a, alloc)
    outs = [alloc.take() for _ in range(n)]
    scratch = alloc.take()
    gates = list(b_net.gates + a_net.gates)
    gates += _assemble_outputs(f, a, a_net, b_net, outs, scratch, prune)
    width = alloc.next
    roles = tuple(Input(i + 1) for i in range(n)) + (Const(0),) * (width - n)
    return Circuit(width, roles, tuple(gates), tuple(outs))


def bennett_gates(
    f: ReversibleFunction,
    a: int,
    x_wires: Sequence[int],
    y_wires: Sequence[int],
    alloc: AncillaAllocator,
    prune: bool = False,
) -> list[Gate]:
    """Gates for (x, y) -> (x, y ^ f(x)) with products computed, used, then uncomputed."""
    _check_split(f.n, a)
    a_net, b_net = _products(x_wires, a, alloc)
    scratch = alloc.take()
    compute = list(b_net.gates + a_net.gates)
    body = _assemble_outputs(f, a, a_net, b_net, y_wires, scratch, prune)
    return compute + body + compute[::-1]


def bennett_synth(f: ReversibleFunction, a: int | None = None, prune: bool = False) -> Circuit:
    """Intermediate implementation on wires x (0..n-1), y (n..2n-1), then ancillae.

    The circuit has 2n primary inputs, x_1..x_n followed by the y register,
    and designates all 2n wires of (x, y) as outputs, so its realized function
    is the 2n-bit map (x, y) -> (x, y ^ f(x)) with x in the high bits.
    """
    n = f.n
    if a is None:
        a = optimal_split(n, "bennett")
    _check_split(n, a)
    x_wires = list(range(n))
    y_wires = list(range(n, 2 * n))
    alloc = AncillaAllocator(2 * n)
    gates = bennett_gates(f, a, x_wires, y_wires, alloc, prune)
    width = alloc.next
    roles = tuple(Input(i + 1) for i in range(2 * n)) + (Const(0),) * (width - 2 * n)
    return Circuit(width, roles, tuple(gates), tuple(x_wires + y_wires))
