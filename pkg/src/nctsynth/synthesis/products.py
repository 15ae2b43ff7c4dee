"""Generation of all positive-polarity product terms over a set of wires."""
from __future__ import annotations

from typing import NamedTuple, Sequence

from ..circuit import Circuit, Const, Gate, Input, tof
from ..errors import AllocatorExhausted


class AncillaAllocator:
    """Hands out fresh zero-initialised wire indices starting at ``start``."""

    def __init__(self, start: int, limit: int | None = None):
        self.start = start
        self.next = start
        self.limit = limit

    def take(self) -> int:
        if self.limit is not None and self.next >= self.limit:
            raise AllocatorExhausted(f"no free wire below {self.limit}")
        w = self.next
        self.next += 1
        return w

    @property
    def allocated(self) -> range:
        return range(self.start, self.next)


class ProductNetwork(NamedTuple):
    gates: tuple[Gate, ...]
    wires: dict[int, int]
    """Monomial mask -> wire carrying that product. Mask 0 (the constant 1) is absent."""


def product_count(m: int) -> int:
    """Toffoli gates needed for all products of ``m`` variables: 2^m - m - 1."""
    return (1 << m) - m - 1


def gen_products(variables: Sequence[int], alloc: AncillaAllocator) -> ProductNetwork:
    """Compute every product of ``variables`` into fresh zero ancillae.

    Masks read ``variables[0]`` as the most significant bit. Each new variable
    v multiplies every product built so far, one Toffoli per product, which
    meets the 2^m - m - 1 optimum.
    """
    if len(set(variables)) != len(variables):
        raise ValueError("product variables must be distinct wires")
    m = len(variables)
    wires: dict[int, int] = {}
    gates: list[Gate] = []
    for pos, v in enumerate(variables):
        bit = 1 << (m - 1 - pos)
        for mask, w in list(wires.items()):
            target = alloc.take()
            gates.append(tof(w, v, target))
            wires[mask | bit] = target
        wires[bit] = v
    return ProductNetwork(tuple(gates), wires)


def product_circuit(m: int) -> tuple[Circuit, dict[int, int]]:
    """Standalone circuit on ``m`` inputs computing all of their products."""
    alloc = AncillaAllocator(m)
    net = gen_products(list(range(m)), alloc)
    width = alloc.next
    roles = tuple(Input(i + 1) for i in range(m)) + (Const(0),) * (width - m)
    return Circuit(width, roles, net.gates), net.wires
